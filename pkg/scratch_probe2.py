import time
import numpy as np
import scipy.sparse.linalg as spl
from lusline import radon, solver

# --- PSNR vs disk smoothness at M=512 ---
M = 512
yy, xx = np.mgrid[0:M, 0:M]
c = (M - 1) / 2
rr = np.sqrt((xx - c) ** 2 + (yy - c) ** 2)
for radius, width in [(M/4, 4), (M/4, 8), (M/5, 8), (M/6, 10), (M/4, 12)]:
    disk = 1.0 / (1.0 + np.exp((rr - radius) / width))
    rec = radon.inverse_radon(radon.forward_radon(disk))
    mse = np.mean((rec - disk) ** 2)
    psnr = 10 * np.log10(disk.max() ** 2 / mse)
    print(f"radius={radius:.0f} width={width}: PSNR {psnr:.2f} dB")

# --- power iteration accuracy vs ARPACK at M=32 (3 deg grid for speed) ---
grid = radon.AngleGrid.default(3.0)
geo = radon.geometry_for(32, grid)
n = geo.n_r * geo.grid.n
op = spl.LinearOperator((n, n),
    matvec=lambda v: geo.forward(geo.fbp(v.reshape(geo.n_r, geo.grid.n))).ravel())
t0 = time.perf_counter()
ev = spl.eigs(op, k=1, which="LM", return_eigenvectors=False, tol=1e-8)
print("ARPACK lambda_max:", ev, f"({time.perf_counter()-t0:.1f}s)")
print("power-iteration:", solver.estimate_lipschitz(32, grid))
print("power-iteration maxiter=200 tol=1e-8:",
      solver.estimate_lipschitz(32, grid, max_iter=200, tol=1e-8))

# --- L at growing M (1 deg grid) ---
for m in (512, 1024):
    t0 = time.perf_counter()
    L = solver.estimate_lipschitz(m)
    print(f"M={m}: L_hat={L:.4f}  ({time.perf_counter()-t0:.1f}s)")

# --- per-op timing at M=1024 ---
geo = radon.geometry_for(1024)
img = np.random.default_rng(0).random((1024, 1024))
t0 = time.perf_counter(); v = geo.forward(img); t1 = time.perf_counter()
im2 = geo.fbp(v); t2 = time.perf_counter()
print(f"M=1024: forward {t1-t0:.3f}s fbp {t2-t1:.3f}s")
