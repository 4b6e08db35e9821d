import time
import numpy as np
from lusline import radon, solver

rng = np.random.default_rng(3)

# ---- EXP1: criterion-4-style line-spike phantom at M=256, spec defaults ----
def spike_phantom(m, seed, n_spikes=3):
    g = np.random.default_rng(seed)
    geo = radon.geometry_for(m)
    vals = np.zeros((geo.n_r, geo.grid.n))
    for _ in range(n_spikes):
        rb = g.integers(geo.n_r // 2 - m // 4, geo.n_r // 2 + m // 4)
        tb = g.integers(0, geo.grid.n)
        vals[rb, tb] = g.uniform(50, 150)
    return geo.fbp(vals), vals

print("=== M=256 spike phantoms, spec defaults ===")
L = solver._cached_lipschitz(256, radon.AngleGrid.default(), 1.0)
print("L(256) =", L)
for seed in range(4):
    y, truth = spike_phantom(256, seed)
    t0 = time.perf_counter()
    res = solver.cps_solve(y, solver.SolverParams(track_objective=True))
    dt = time.perf_counter() - t0
    obj = np.array(res.objective_trace)
    mono = np.all(np.diff(obj[1:]) <= 1e-9)
    print(f"seed={seed}: iters={res.iterations} conv={res.converged} {dt:.1f}s "
          f"monotone_after1={mono} last_rel={res.relative_changes[-1]:.2e}")

# ---- EXP2: gamma scaling at M=1024 on the speckled fan ----
def fan_phantom(size=512, seed=7):
    g = np.random.default_rng(seed)
    ar, ac = 0, size // 2
    rows, cols = np.mgrid[0:size, 0:size].astype(float)
    d = np.hypot(rows - ar, cols - ac)
    phi = np.degrees(np.arctan2(cols - ac, rows - ar))
    fan = (np.abs(phi) <= 30) & (d <= size - 1)
    img = 0.12 * fan
    rp = 120
    w = np.clip(1.75 - np.abs(rows - rp), 0, 1)
    img = np.maximum(img, 1.0 * w * fan)
    for ang in (-10.0, 12.0):
        t = np.radians(ang)
        dist = np.abs((cols - ac) * np.cos(t) - (rows - ar) * np.sin(t))
        wl = np.clip(1.75 - dist, 0, 1)
        att = np.exp(-0.001 * np.clip(rows - rp, 0, None))
        img = np.maximum(img, 0.95 * wl * att * (rows >= rp) * fan)
    img *= g.gamma(16.0, 1 / 16.0, size=img.shape)
    return np.clip(img, 0, 1)

frame = fan_phantom()
M = 1024
y = np.zeros((M, M))
y[512:1024, 256:768] = frame
L = solver._cached_lipschitz(M, radon.AngleGrid.default(), 1.0)
mu = 1.8 / (1.05 * L)
print("\n=== M=1024 fan phantom, gamma scan (max_iter=80) ===")
for c in (1.0, 1.5, 2.0, 3.0):
    gamma = c * np.sqrt(mu) / 2
    t0 = time.perf_counter()
    res = solver.cps_solve(y, solver.SolverParams(mu=mu, gamma=gamma, max_iter=80))
    dt = time.perf_counter() - t0
    v = res.x_hat.values
    i = np.argsort(v.ravel())[::-1][:3]
    tops = [(res.x_hat.r_offsets[a // v.shape[1]], res.x_hat.grid.thetas[a % v.shape[1]],
             round(float(v.ravel()[a]), 1)) for a in i]
    print(f"c={c}: iters={res.iterations} conv={res.converged} {dt:.0f}s "
          f"last_rel={res.relative_changes[-1]:.2e} tops={tops}")
