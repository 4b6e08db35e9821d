"""Discrete Radon transform and filtered back-projection.

Geometry convention (shared by every module; see README for a diagram):

* pixel (row, col) with row increasing downward, col increasing rightward;
* centre c = (M-1)/2; centred coordinates x = col - c (right), y = c - row (up);
* the line with parameters (r, theta) is {x*cos(theta) + y*sin(theta) = r},
  theta in degrees measured so that theta = 0 lines are vertical in the
  image and theta = +/-90 lines are horizontal;
* a horizontal line d pixels *below* the centre sits at (r = -d, theta = 90)
  and equivalently (r = +d, theta = -90).

The forward transform sums pixel intensities along those lines with each
pixel split linearly between its two nearest r bins, so every projection
conserves the total image mass.  Filtered back-projection (ramp filter in
the frequency domain followed by interpolating back-projection scaled by
pi / n_angles) provides the approximate inverse used as the synthesis
operator of the image-formation model.  Back-projection *without* the ramp
and without the pi / n_angles scale is the exact numerical adjoint of the
forward transform and is exposed separately for operator checks.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from ._projection import back_project_accum, forward_project

_HEADER = struct.Struct("<iiif")


@dataclass(frozen=True)
class AngleGrid:
    """Uniform projection angles in degrees covering [-90, 90)."""

    thetas: np.ndarray
    spacing: float

    def __post_init__(self):
        t = np.asarray(self.thetas, dtype=float)
        object.__setattr__(self, "thetas", t)
        if t.ndim != 1 or t.size < 2:
            raise ValueError("angle grid needs at least two angles")
        d = np.diff(t)
        if not np.all(d > 0) or not np.allclose(d, self.spacing, atol=1e-9):
            raise ValueError("angles must be strictly increasing with uniform spacing")
        if abs(t[0] + 90.0) > 1e-9 or abs(t[-1] - (90.0 - self.spacing)) > 1e-9:
            raise ValueError("grid must cover [-90, 90)")
        # spacing must divide the [60, 90] and [-60, 60] detection ranges
        if abs(30.0 / self.spacing - round(30.0 / self.spacing)) > 1e-9:
            raise ValueError(f"spacing {self.spacing} does not divide the detection ranges")

    @classmethod
    def default(cls, spacing: float = 1.0) -> "AngleGrid":
        n = int(round(180.0 / spacing))
        return cls(thetas=-90.0 + spacing * np.arange(n), spacing=float(spacing))

    @property
    def n(self) -> int:
        return self.thetas.size

    def key(self):
        return (self.n, self.spacing)


def r_offsets_for(m: int) -> np.ndarray:
    """Signed r-bin offsets at 1 px spacing covering the image diagonal."""
    k = int(np.ceil(np.sqrt(2.0) * m / 2.0))
    return np.arange(-k, k + 1)


@dataclass(frozen=True)
class RadonMap:
    """Projection values over (r_bin, theta_bin) with explicit bin mapping."""

    values: np.ndarray            # shape (n_r, n_theta)
    r_offsets: np.ndarray         # signed pixel distance of each r bin from centre
    grid: AngleGrid
    M: int                        # source image side length

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        r = np.asarray(self.r_offsets)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "r_offsets", r)
        if v.shape != (r.size, self.grid.n):
            raise ValueError(f"values shape {v.shape} does not match bins "
                             f"({r.size}, {self.grid.n})")
        if r.size < int(np.ceil(np.sqrt(2.0) * self.M)):
            raise ValueError("too few r bins to cover the image diagonal")
        if not np.array_equal(r, -r[::-1]):
            raise ValueError("r offsets must be symmetric about 0")
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite projection values")

    @property
    def n_r(self) -> int:
        return self.r_offsets.size

    def with_values(self, values: np.ndarray) -> "RadonMap":
        return RadonMap(values=values, r_offsets=self.r_offsets, grid=self.grid, M=self.M)


class ProjectionGeometry:
    """Precomputed trigonometry and bin layout for one (M, grid) pair.

    Methods operate on bare arrays; the public module functions wrap them
    in RadonMap bookkeeping.  All methods are pure and reentrant.
    """

    def __init__(self, m: int, grid: AngleGrid | None = None):
        if m < 2:
            raise ValueError(f"image side must be >= 2, got {m}")
        self.M = int(m)
        self.grid = grid or AngleGrid.default()
        self.r_offsets = r_offsets_for(self.M)
        self.n_r = self.r_offsets.size
        rad = np.deg2rad(self.grid.thetas)
        self.cos_t = np.cos(rad)
        self.sin_t = np.sin(rad)
        self.r_min = float(self.r_offsets[0])
        # ramp filter layout: zero-pad columns to the next power of two >= 2 n_r
        pad = 1
        while pad < 2 * self.n_r:
            pad *= 2
        self.pad = pad
        self.ramp_weights = np.abs(np.fft.rfftfreq(pad))  # Nyquist bin = 0.5

    def forward(self, img: np.ndarray) -> np.ndarray:
        img = np.ascontiguousarray(img, dtype=float)
        if img.shape != (self.M, self.M):
            raise ValueError(f"expected {self.M}x{self.M} image, got {img.shape}")
        out = forward_project(img, self.cos_t, self.sin_t, self.r_min, self.n_r)
        return out.T.copy()

    def back_adjoint(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        if values.shape != (self.n_r, self.grid.n):
            raise ValueError(f"expected ({self.n_r}, {self.grid.n}) map, got {values.shape}")
        proj = np.ascontiguousarray(values.T)
        return back_project_accum(proj, self.cos_t, self.sin_t, self.r_min, self.M)

    def back_project(self, values: np.ndarray) -> np.ndarray:
        return self.back_adjoint(values) * (np.pi / self.grid.n)

    def ramp(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        spec = np.fft.rfft(values, n=self.pad, axis=0)
        spec *= self.ramp_weights[:, None]
        return np.fft.irfft(spec, n=self.pad, axis=0)[: self.n_r]

    def fbp(self, values: np.ndarray) -> np.ndarray:
        return self.back_project(self.ramp(values))


_geometry_cache: dict[tuple, ProjectionGeometry] = {}


def geometry_for(m: int, grid: AngleGrid | None = None) -> ProjectionGeometry:
    grid = grid or AngleGrid.default()
    key = (int(m), grid.key())
    geo = _geometry_cache.get(key)
    if geo is None:
        geo = ProjectionGeometry(m, grid)
        _geometry_cache[key] = geo
    return geo


def _image_of(image) -> np.ndarray:
    pixels = getattr(image, "pixels", image)
    arr = np.asarray(pixels, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square image, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("image contains non-finite values")
    return arr


def forward_radon(image, grid: AngleGrid | None = None) -> RadonMap:
    """Line-integral transform of a square image (linear in the image)."""
    arr = _image_of(image)
    geo = geometry_for(arr.shape[0], grid)
    return RadonMap(values=geo.forward(arr), r_offsets=geo.r_offsets,
                    grid=geo.grid, M=geo.M)


def ramp_filter(rmap: RadonMap) -> RadonMap:
    """Ram-Lak filter each angle's column in the frequency domain."""
    geo = geometry_for(rmap.M, rmap.grid)
    return rmap.with_values(geo.ramp(rmap.values))


def back_project(rmap: RadonMap) -> np.ndarray:
    """Interpolating back-projection scaled by pi / n_angles."""
    geo = geometry_for(rmap.M, rmap.grid)
    return geo.back_project(rmap.values)


def back_project_adjoint(rmap: RadonMap) -> np.ndarray:
    """Unscaled, unfiltered back-projection: the exact adjoint of forward_radon."""
    geo = geometry_for(rmap.M, rmap.grid)
    return geo.back_adjoint(rmap.values)


def inverse_radon(rmap: RadonMap) -> np.ndarray:
    """Filtered back-projection: back_project(ramp_filter(map))."""
    geo = geometry_for(rmap.M, rmap.grid)
    return geo.fbp(rmap.values)


def save_radon_map(rmap: RadonMap, path) -> None:
    """Flat binary layout: <i4 M, <i4 n_r, <i4 n_angles, <f4 spacing, then
    row-major <f8 values."""
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(rmap.M, rmap.n_r, rmap.grid.n, rmap.grid.spacing))
        fh.write(np.ascontiguousarray(rmap.values, dtype="<f8").tobytes())


def load_radon_map(path) -> RadonMap:
    with open(path, "rb") as fh:
        m, n_r, n_ang, spacing = _HEADER.unpack(fh.read(_HEADER.size))
        data = np.frombuffer(fh.read(), dtype="<f8")
    if data.size != n_r * n_ang:
        raise ValueError(f"expected {n_r * n_ang} values, found {data.size}")
    spacing = float(np.float32(spacing))
    grid = AngleGrid.default(spacing)
    if grid.n != n_ang:
        raise ValueError(f"angle count {n_ang} inconsistent with spacing {spacing}")
    k = (n_r - 1) // 2
    if 2 * k + 1 != n_r:
        raise ValueError("r bin count must be odd")
    return RadonMap(values=data.reshape(n_r, n_ang).copy(),
                    r_offsets=np.arange(-k, k + 1), grid=grid, M=m)
