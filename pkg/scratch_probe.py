import time
import numpy as np
from lusline import radon, solver, cauchy

# --- 1. convention checks at M=128 ---
M = 128
c = (M - 1) / 2
img = np.zeros((M, M))
# horizontal segment 40 px below centre, 61 px wide, unit brightness
row = int(round(c)) + 40
img[row, 34:95] = 1.0
t0 = time.perf_counter()
rm = radon.forward_radon(img)
print("first forward (jit compile):", time.perf_counter() - t0, "s")
v = rm.values
peak = np.unravel_index(np.argmax(v), v.shape)
print("horizontal-line peak: r=", rm.r_offsets[perk][0] if False else rm.r_offsets[peak[0]],
      "theta=", rm.grid.thetas[peak[1]], "value=", v[peak])

# vertical segment 20 px right of centre
img2 = np.zeros((M, M))
col = int(round(c)) + 20
img2[30:100, col] = 1.0
v2 = radon.forward_radon(img2).values
peak2 = np.unravel_index(np.argmax(v2), v2.shape)
print("vertical-line peak: r=", rm.r_offsets[peak2[0]], "theta=", rm.grid.thetas[peak2[1]],
      "value=", v2[peak2])

# mass conservation
sums = v.sum(axis=0)
print("mass consistency rel err:", np.max(np.abs(sums - img.sum())) / img.sum())

# adjoint pairing
rng = np.random.default_rng(1)
geo = radon.geometry_for(64)
x = rng.standard_normal((64, 64))
y = rng.standard_normal((geo.n_r, geo.grid.n))
lhs = np.vdot(geo.forward(x), y)
rhs = np.vdot(x, geo.back_adjoint(y))
print("adjoint pairing rel err:", abs(lhs - rhs) / abs(lhs))

# --- 2. roundtrip PSNR on smooth disk, M=512 ---
M = 512
yy, xx = np.mgrid[0:M, 0:M]
c = (M - 1) / 2
rr = np.sqrt((xx - c) ** 2 + (yy - c) ** 2)
disk = 1.0 / (1.0 + np.exp((rr - M / 4) / 4.0))   # smooth disk
t0 = time.perf_counter()
rm = radon.forward_radon(disk)
t1 = time.perf_counter()
rec = radon.inverse_radon(rm)
t2 = time.perf_counter()
mse = np.mean((rec - disk) ** 2)
psnr = 10 * np.log10(disk.max() ** 2 / mse)
print(f"M=512 roundtrip PSNR: {psnr:.2f} dB  forward {t1-t0:.3f}s fbp {t2-t1:.3f}s")

# --- 3. ramp of constant column ---
geo = radon.geometry_for(128)
const = np.ones((geo.n_r, geo.grid.n))
f = geo.ramp(const)
print("ramp(const): max|.|=", np.abs(f).max(), " interior max:",
      np.abs(f[20:-20]).max(), " mean:", f.mean())

# --- 4. operator norm at small/large M ---
for m in (64, 128, 256):
    t0 = time.perf_counter()
    L = solver.estimate_lipschitz(m)
    print(f"M={m}: L_hat={L:.4f}  ({time.perf_counter()-t0:.2f}s)")

# --- 5. prox sanity ---
p = cauchy.CauchyParams(gamma=1.0, mu=1.0)
print("prox(1, g=1, mu=1) =", cauchy.prox(1.0, p))
print("prox(5, g=100, mu=0.01) =", cauchy.prox(5.0, cauchy.CauchyParams(100.0, 0.01)))
