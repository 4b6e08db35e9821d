import time
import numpy as np
from lusline import radon, solver

# --- descent violation magnitudes at M=256 spike phantoms, spec defaults ---
def spike_phantom(m, seed, n_spikes=3):
    g = np.random.default_rng(seed)
    geo = radon.geometry_for(m)
    vals = np.zeros((geo.n_r, geo.grid.n))
    for _ in range(n_spikes):
        rb = g.integers(geo.n_r // 2 - m // 4, geo.n_r // 2 + m // 4)
        tb = g.integers(0, geo.grid.n)
        vals[rb, tb] = g.uniform(50, 150)
    return geo.fbp(vals), vals

print("=== descent diagnostics, M=256 ===")
for seed in range(3):
    y, _ = spike_phantom(256, seed)
    res = solver.cps_solve(y, solver.SolverParams(track_objective=True))
    obj = np.array(res.objective_trace)
    d = np.diff(obj)          # d[i] = obj[i+1]-obj[i]; criterion: d[1:] <= 1e-9
    viol = d[1:][d[1:] > 1e-9]
    print(f"seed={seed}: obj[0]={obj[0]:.4g} obj[-1]={obj[-1]:.4g} "
          f"n_viol={viol.size}/{d.size-1} max_viol={viol.max() if viol.size else 0:.3g} "
          f"viol_at={1 + np.nonzero(d[1:] > 1e-9)[0][:6]}")

# --- small-mu test at M=1024: does the plateau persist without overshoot modes? ---
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
lam_true = 6.4632
print("\n=== M=1024 mu scan (gamma = sqrt(mu)/2 boundary), max_iter=60 ===")
for mu_frac in (1.8, 1.0, 0.5):
    mu = mu_frac / (1.05 * L)
    res = solver.cps_solve(y, solver.SolverParams(mu=mu, max_iter=60))
    rc = res.relative_changes
    print(f"mu={mu:.3f} (mu*lam={mu*lam_true:.2f}): iters={res.iterations} "
          f"conv={res.converged} rel[10,30,59]="
          f"{rc[10]:.2e},{rc[30] if len(rc)>30 else float('nan'):.2e},"
          f"{rc[-1]:.2e}")
