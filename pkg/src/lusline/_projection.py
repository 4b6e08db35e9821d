"""Numba inner loops for the discrete line-projection operators.

Both kernels work on an (n_angles, n_r) layout so the hot index runs over
contiguous memory; callers transpose at the boundary.  Bin positions are
t = x*cos(theta) + y*sin(theta) - r_min with x = col - c, y = c - row and
c = (M-1)/2, so t >= 0 always holds and int() truncation equals floor.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def forward_project(img, cos_t, sin_t, r_min, n_r):
    """Pixel-driven projection: each pixel splits linearly between the two
    nearest r bins of every angle's projection."""
    m = img.shape[0]
    n_ang = cos_t.shape[0]
    out = np.zeros((n_ang, n_r))
    c = (m - 1) / 2.0
    for a in range(n_ang):
        ct = cos_t[a]
        st = sin_t[a]
        row_out = out[a]
        for row in range(m):
            t0 = -c * ct + (c - row) * st - r_min
            for col in range(m):
                v = img[row, col]
                if v != 0.0:
                    t = t0 + col * ct
                    ib = int(t)
                    w = t - ib
                    row_out[ib] += v * (1.0 - w)
                    row_out[ib + 1] += v * w
    return out


@njit(cache=True)
def back_project_accum(proj, cos_t, sin_t, r_min, m):
    """Exact adjoint of forward_project: gather by linear interpolation.

    No angular scaling is applied here; the pi/n_angles factor of filtered
    back-projection belongs to the caller.
    """
    n_ang = cos_t.shape[0]
    out = np.zeros((m, m))
    c = (m - 1) / 2.0
    for a in range(n_ang):
        ct = cos_t[a]
        st = sin_t[a]
        col_vals = proj[a]
        for row in range(m):
            t0 = -c * ct + (c - row) * st - r_min
            out_row = out[row]
            for col in range(m):
                t = t0 + col * ct
                ib = int(t)
                w = t - ib
                out_row[col] += col_vals[ib] * (1.0 - w) + col_vals[ib + 1] * w
    return out
