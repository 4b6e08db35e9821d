import time
import numpy as np
import scipy.sparse.linalg as spl
from lusline import radon, solver

def lanczos_lambda(m, grid=None, tol=1e-6):
    """lambda_max of A = forward(fbp(.)) via the symmetric product form
    G X G^T with F = G^T G (G = sqrt-ramp circular conv after zero-pad)."""
    geo = radon.geometry_for(m, grid)
    sqrt_w = np.sqrt(geo.ramp_weights)
    pad, n_ang = geo.pad, geo.grid.n
    scale = np.pi / n_ang

    def g_t(u):            # pad-space -> r-bin space
        col = np.fft.irfft(sqrt_w[:, None] * np.fft.rfft(u, axis=0), n=pad, axis=0)
        return col[:geo.n_r]

    def g(v):              # r-bin space -> pad-space
        return np.fft.irfft(sqrt_w[:, None] * np.fft.rfft(v, n=pad, axis=0), n=pad, axis=0)

    def mv(x):
        u = x.reshape(pad, n_ang)
        v = g_t(u)
        img = geo.back_adjoint(v) * scale
        return g(geo.forward(img)).ravel()

    n = pad * n_ang
    rng = np.random.default_rng(0)
    v0 = rng.standard_normal(n)
    op = spl.LinearOperator((n, n), matvec=mv)
    t0 = time.perf_counter()
    val = spl.eigsh(op, k=1, which="LA", v0=v0, tol=tol,
                    return_eigenvectors=False)[0]
    return float(val), time.perf_counter() - t0

for m in (128, 256):
    lam, dt = lanczos_lambda(m)
    lhat = solver.estimate_lipschitz(m)
    print(f"M={m}: lanczos={lam:.4f} ({dt:.1f}s)  power30={lhat:.4f} "
          f"undershoot={(lam-lhat)/lam*100:.1f}%")

lam1024, dt = lanczos_lambda(1024, tol=1e-5)
print(f"M=1024: lanczos={lam1024:.4f} ({dt:.1f}s)  power30=6.2805 "
      f"undershoot={(lam1024-6.2805)/lam1024*100:.1f}%")
print("mu used in stalled run:", 0.273, " mu*lambda_true =", 0.273 * lam1024)
