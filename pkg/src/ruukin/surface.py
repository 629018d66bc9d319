"""Residual grids of the singularity surfaces, for external contouring."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .algebra import MPoly
from .model import INPUTS, Design
from .kinematics import Y

SURFACES = ("input-torus", "output-eliminant", "joint-input", "joint-output")
THREADS_ENV = "RUUKIN_THREADS"


@dataclass(frozen=True)
class Axis:
    lo: float
    hi: float
    count: int

    @classmethod
    def parse(cls, text: str) -> "Axis":
        """``min:max:count`` with count >= 2, or a single number for a fixed slice."""
        parts = text.split(":")
        if len(parts) == 1:
            v = float(parts[0])
            return cls(v, v, 1)
        if len(parts) != 3:
            raise ValueError(f"bad grid axis {text!r}; expected min:max:count")
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        if n < 2:
            raise ValueError(f"grid count must be >= 2, got {n}")
        if not lo < hi:
            raise ValueError(f"grid range {lo}:{hi} is empty")
        return cls(lo, hi, n)

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.count)


def parse_grid(text: str) -> tuple[Axis, Axis, Axis]:
    """One axis spec (used for all three axes) or three comma-separated ones."""
    axes = [Axis.parse(p) for p in text.split(",")]
    if len(axes) == 1:
        axes *= 3
    if len(axes) != 3:
        raise ValueError("grid needs one or three axis specs")
    return tuple(axes)


@dataclass
class SurfaceGrid:
    surface: str
    names: tuple[str, str, str]
    axes: tuple[np.ndarray, np.ndarray, np.ndarray]
    values: np.ndarray      # shape (n1, n2, n3)
    crossing: np.ndarray    # bool, same shape

    def rows(self):
        """(c1, c2, c3, residual, crossing) in row-major order."""
        a, b, c = self.axes
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                for k, w in enumerate(c):
                    yield float(u), float(v), float(w), float(self.values[i, j, k]), bool(self.crossing[i, j, k])


def surface_poly(design: Design, which: str, limb: int = 1, cache_dir=None) -> tuple[MPoly, tuple[str, ...]]:
    from .singularity import joint_poly, output_eliminant, torus_equation

    if which == "input-torus":
        return torus_equation(limb, design), Y
    if which == "output-eliminant":
        return output_eliminant(design, "s1", cache_dir=cache_dir), Y
    if which == "joint-input":
        return joint_poly("input"), INPUTS
    if which == "joint-output":
        return joint_poly("output"), INPUTS
    raise ValueError(f"unknown surface {which!r}; choose from {', '.join(SURFACES)}")


def _workers() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def sample(poly: MPoly, names, axes, which: str = "") -> SurfaceGrid:
    """Evaluate ``poly`` on the product grid, one slab per first-axis value.

    Slabs may run on worker threads; results are placed by index so the
    output order never depends on scheduling.
    """
    vals = [ax.values() for ax in axes]
    _, B, C = np.meshgrid(vals[0][:1], vals[1], vals[2], indexing="ij")
    B, C = B[0], C[0]

    def slab(u):
        point = {names[0]: np.full_like(B, u), names[1]: B, names[2]: C}
        return np.asarray(poly.eval_float(point), dtype=float) * np.ones_like(B)

    with ThreadPoolExecutor(_workers()) as pool:
        values = np.stack(list(pool.map(slab, vals[0])))
    return SurfaceGrid(which, tuple(names), tuple(vals), values, zero_crossings(values))


def zero_crossings(values: np.ndarray) -> np.ndarray:
    """Nodes that are zero or differ in sign from a grid neighbour."""
    sign = np.sign(values)
    flag = sign == 0
    for axis in range(values.ndim):
        if values.shape[axis] < 2:
            continue
        lo = [slice(None)] * values.ndim
        hi = [slice(None)] * values.ndim
        lo[axis] = slice(None, -1)
        hi[axis] = slice(1, None)
        change = sign[tuple(lo)] * sign[tuple(hi)] < 0
        flag[tuple(lo)] |= change
        flag[tuple(hi)] |= change
    return flag


def sample_surface(design: Design, which: str, axes, limb: int = 1, cache_dir=None) -> SurfaceGrid:
    poly, names = surface_poly(design, which, limb, cache_dir)
    return sample(poly, names, axes, which)
