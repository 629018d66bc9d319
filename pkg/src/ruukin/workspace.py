"""Workspace equations free of the inputs, operation modes and the transition curve."""

from __future__ import annotations

import hashlib
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import MPoly, resultant
from .algebra.dump import read_sections, write_sections
from .model import (
    STUDY, ConstraintSystem, Design, DualQuaternion, Pose, general_constraints, rot_z,
)

PAIRS = (("g12", "g1", "g2", "t1"), ("g34", "g3", "g4", "t2"), ("g56", "g5", "g6", "t3"))
CACHE_ENV = "RUUKIN_CACHE"


@dataclass(frozen=True)
class WorkspaceSystem:
    g12: MPoly
    g34: MPoly
    g56: MPoly
    g7: MPoly
    g8: MPoly
    design: Design | None = None

    def equations(self) -> dict[str, MPoly]:
        return {"g12": self.g12, "g34": self.g34, "g56": self.g56}

    def degrees(self) -> dict[str, int]:
        """Total degrees in the Study coordinates."""
        out = {}
        for name, p in self.equations().items():
            out[name] = max((sum(e[:8]) for e, _ in p.terms()), default=-1)
        return out


def eliminate_inputs(cs: ConstraintSystem | None = None, design: Design | None = None,
                     cache_dir: str | Path | None = None) -> WorkspaceSystem:
    """Eliminate t1, t2, t3 pairwise by resultants of (g1,g2), (g3,g4), (g5,g6).

    With a cache directory (argument or ``RUUKIN_CACHE``) numeric-design results
    are stored as polynomial dumps and reused.
    """
    if cs is None:
        cs = general_constraints(design)
    cache = _cache_path(cs.design, cache_dir)
    if cache is not None and cache.exists():
        with cache.open() as fh:
            _, polys = read_sections(fh)
        return WorkspaceSystem(polys["g12"], polys["g34"], polys["g56"], cs["g7"], cs["g8"], cs.design)
    eqs = {}
    for name, a, b, var in PAIRS:
        fa, fb = cs[a], cs[b]
        if fa.degree(var) <= 0 and fb.degree(var) <= 0:
            raise ValueError(f"{a} and {b} are both free of {var}; nothing to eliminate")
        eqs[name] = resultant(fa, fb, var)
    if cache is not None:
        cache.parent.mkdir(parents=True, exist_ok=True)
        tmp = cache.with_suffix(".tmp")
        with tmp.open("w") as fh:
            write_sections(fh, eqs, {"design": cs.design.to_json(), "version": __version__})
        tmp.replace(cache)
    return WorkspaceSystem(eqs["g12"], eqs["g34"], eqs["g56"], cs["g7"], cs["g8"], cs.design)


def _cache_path(design: Design | None, cache_dir) -> Path | None:
    if design is None:
        return None
    root = cache_dir if cache_dir is not None else os.environ.get(CACHE_ENV)
    if not root:
        return None
    digest = hashlib.sha1(f"{design.to_json()}|{__version__}".encode()).hexdigest()[:16]
    return Path(root) / f"workspace-{digest}.dump"


@dataclass(frozen=True)
class MembershipReport:
    residuals: dict[str, float]
    scales: dict[str, float]
    study_residual: float
    in_workspace: bool
    tol: float

    def relative(self) -> dict[str, float]:
        return {k: abs(v) / self.scales[k] if self.scales[k] else abs(v) for k, v in self.residuals.items()}


def membership(ws: WorkspaceSystem, pose: Pose, tol: float = 1e-9) -> MembershipReport:
    """Evaluate g12, g34, g56 at the normalized pose.

    A residual passes when |value| <= tol * sum|coefficient * monomial|.
    The equations are homogeneous in the Study coordinates, so the decision
    does not depend on the representative of the projective pose.
    """
    if pose.is_zero():
        raise ValueError("zero pose")
    p = pose.normalized()
    point = p.assignment()
    residuals, scales = {}, {}
    ok = True
    for name, eq in ws.equations().items():
        val = eq.eval_float(point)
        scale = eq.abs_scale(point)
        residuals[name] = val
        scales[name] = scale
        if abs(val) > tol * (scale if scale else 1.0):
            ok = False
    c = p.coords
    study = sum(c[i] * c[i + 4] for i in range(4))
    study_scale = sum(abs(c[i] * c[i + 4]) for i in range(4)) or 1.0
    if abs(study) > tol * study_scale:
        ok = False
    return MembershipReport(residuals, scales, study, ok, tol)


def mode_of(pose: Pose, tol: float = 1e-12) -> str:
    """``"O1"`` (translational), ``"O2"`` (half-turn twisted translational) or ``"other"``."""
    if pose.is_zero():
        raise ValueError("zero pose")
    c = [float(v) for v in pose.coords]
    big = max(abs(v) for v in c)

    def small(i):
        return abs(c[i]) <= tol * big

    x0, x1, x2, x3, y0, y1, y2, y3 = range(8)
    if not small(x0) and all(small(i) for i in (x1, x2, x3, y0)):
        return "O1"
    if not small(x3) and all(small(i) for i in (x0, x1, x2, y3)):
        return "O2"
    return "other"


def curve_h(t: float) -> float:
    """The ``h(t)`` function of the transition curve (design a1=5, a3=4, r0=11, r1=7)."""
    w = math.sqrt(25 * t * t + 36)
    rad = ((-59 * t**4 + 212 * t * t + 256) * w - 600 * t**5 - 864 * t**3) / (w * (t * t + 4))
    if rad < 0:
        raise ValueError(f"negative radicand {rad!r} in h({t})")
    return 18 * t + w + math.sqrt(rad)


def transition_curve_point(t, rotate: int = 0) -> Pose:
    """Pose ``[1, 0, t, 0, 0, 0, 0, h/4]`` on the curve leaving the translational mode.

    ``rotate`` = 1 or 2 returns the symmetric sibling turned by 120 or 240
    degrees about the z-axis.  At ``t = 0`` the exact pose is returned.
    """
    if not -1 <= t <= 1:
        raise ValueError(f"curve parameter {t} outside [-1, 1]")
    if t == 0:
        pose = Pose((1, 0, 0, 0, 0, 0, 0, Fraction(7, 2)))
    else:
        t = float(t)
        pose = Pose((1.0, 0.0, t, 0.0, 0.0, 0.0, 0.0, curve_h(t) / 4))
    return rotated_sibling(pose, rotate) if rotate % 3 else pose


def rotated_sibling(pose: Pose, k: int) -> Pose:
    """Conjugate the displacement by a rotation of ``k * 120`` degrees about z."""
    q = tuple(float(v) for v in rot_z(k).primal)
    r = DualQuaternion.rotation(q)
    dq = r * DualQuaternion.from_pose(pose.normalized()) * r.conjugate()
    return Pose(dq.coords())


__all__ = [
    "WorkspaceSystem", "MembershipReport", "eliminate_inputs", "membership", "mode_of",
    "transition_curve_point", "rotated_sibling", "curve_h", "STUDY",
]
