import time
import numpy as np
from lusline import radon, solver

rng = np.random.default_rng(7)

def fan_phantom(size=512):
    """Quick stand-in LUS phantom: fan + pleural + 2 B-lines, mild speckle."""
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
        att = np.exp(-0.0012 * np.clip(rows - rp, 0, None))
        img = np.maximum(img, 0.9 * wl * att * (rows >= rp) * fan)
    img *= rng.gamma(16.0, 1 / 16.0, size=img.shape)
    return np.clip(img, 0, 1)

frame = fan_phantom(512)
# embed as probe-centred: apex (0, 256) -> M=1024, offset (512, 256)
M = 1024
y = np.zeros((M, M))
y[512:1024, 256:768] = frame

print("warm geometry/L...")
t0 = time.perf_counter()
L = solver._cached_lipschitz(M, radon.AngleGrid.default(), 1.0)
print(f"L={L:.3f} ({time.perf_counter()-t0:.1f}s)")

t0 = time.perf_counter()
res = solver.cps_solve(y)
dt = time.perf_counter() - t0
print(f"solve: {res.iterations} iters, converged={res.converged}, {dt:.1f}s "
      f"({dt/res.iterations:.2f}s/iter) mu={res.mu:.3f} gamma={res.gamma:.3f}")
rc = res.relative_changes
print("rel changes:", [f"{r:.2e}" for r in rc[:5]], "...", [f"{r:.2e}" for r in rc[-3:]])

v = res.x_hat.values
print("top bins:")
idx = np.argsort(v.ravel())[::-1][:8]
for i in idx:
    r_, t_ = np.unravel_index(i, v.shape)
    print(f"  r={res.x_hat.r_offsets[r_]} theta={res.x_hat.grid.thetas[t_]} val={v[r_, t_]:.1f}")
h_lung = 1023 - (512 + 120)
print("h_lung/2 =", h_lung / 2)
