"""Input, output and self-motion singularities of the translational mode."""

from __future__ import annotations

import cmath
import hashlib
import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np
from gmpy2 import is_square, isqrt, mpq

from . import __version__
from .algebra import ExtScalar, MPoly, PolyMatrix, det_bareiss, div_exact, resultant
from .algebra.dump import read_sections, write_sections
from .kinematics import Y, fk, ik
from .model import (
    INPUTS, STUDY, TRANSLATIONAL, ConstraintSystem, Design, general_constraints,
    translational_system,
)
from .reference import reference

_S3 = ExtScalar.sqrt3()
_HALF = ExtScalar(Fraction(1, 2))
# (cos, sin) of the limb angles 0, 120, 240 degrees
LIMB_ANGLES = ((ExtScalar(1), ExtScalar(0)), (-_HALF, _S3 * _HALF), (-_HALF, -_S3 * _HALF))


def _specialize(p: MPoly, design: Design | None) -> MPoly:
    return p if design is None else p.subs(design.assignment())


def _translational_subs() -> dict[str, MPoly]:
    return {k: MPoly.const(v) for k, v in TRANSLATIONAL.items()}


def limb_frame(limb: int) -> dict[str, MPoly]:
    """Substitution taking limb-1 expressions in y to limb ``limb`` (1, 2, 3)."""
    c, s = LIMB_ANGLES[limb - 1]
    y1, y2 = MPoly.var("y1"), MPoly.var("y2")
    return {"y1": y1 * c + y2 * s, "y2": y2 * c - y1 * s}


# -- Jacobians ------------------------------------------------------------------

@dataclass(frozen=True)
class JacobianPair:
    Jo: PolyMatrix
    Ji: PolyMatrix
    names: tuple[str, ...]

    def eval_float(self, point: dict) -> tuple[np.ndarray, np.ndarray]:
        return self.Jo.eval_float(point), self.Ji.eval_float(point)

    def subs(self, assignment) -> "JacobianPair":
        return JacobianPair(self.Jo.subs(assignment), self.Ji.subs(assignment), self.names)


def jacobian(cs: ConstraintSystem) -> JacobianPair:
    """Derivatives of g1..g8 by the Study coordinates (J_o) and the inputs (J_i)."""
    rows_o = [[g.diff(v) for v in STUDY] for _, g in cs]
    rows_i = [[g.diff(v) for v in INPUTS] for _, g in cs]
    return JacobianPair(PolyMatrix(rows_o), PolyMatrix(rows_i), cs.names)


# -- input singularities ----------------------------------------------------------

@dataclass(frozen=True)
class InputFactorization:
    factors: tuple[MPoly, MPoly, MPoly]
    cofactor: MPoly
    survivor: tuple
    zero_minors: int
    total_minors: int


@lru_cache(maxsize=8)
def input_minors_translational(design: Design | None = None) -> InputFactorization:
    """All 3x3 minors of J_i on the translational three-space.

    Exactly one minor survives; it is divided by p1*p2*p3.
    """
    cs = general_constraints(design)
    ji = jacobian(cs).Ji.subs(_translational_subs())
    zero, survivors = 0, []
    total = 0
    for ri, ci, det in ji.minors(3):
        total += 1
        if det.is_zero():
            zero += 1
        else:
            survivors.append((ri, det))
    if len(survivors) != 1:
        raise ArithmeticError(f"expected one surviving minor, found {len(survivors)}")
    ri, det = survivors[0]
    ps = tuple(_specialize(reference(n), design) for n in ("p1", "p2", "p3"))
    cof = div_exact(det, ps[0] * ps[1] * ps[2])
    if cof is None:
        raise ArithmeticError("surviving minor is not divisible by p1*p2*p3")
    rows = tuple(cs.names[i] for i in ri)
    return InputFactorization(ps, cof, rows, zero, total)


@dataclass(frozen=True)
class InputRoot:
    """Root of p_limb in its input, or the degenerate branch.

    ``degenerate`` means the t-coefficient of p_limb vanishes at y; then
    ``constant_zero`` says whether the constant term vanishes too and
    ``pair_holds`` whether y sits at y1' = (r1-r0)/2, y3 = 0 in the limb's frame.
    """

    limb: int
    value: object = None
    degenerate: bool = False
    constant_zero: bool | None = None
    pair_holds: bool | None = None


def _p_parts(limb: int, design: Design) -> tuple[MPoly, MPoly]:
    p = _specialize(reference(f"p{limb}"), design)
    c = p.coeffs_in(INPUTS[limb - 1])
    return c[0], c[1]


def input_sing_root(limb: int, y, design: Design, tol: float = 1e-12) -> InputRoot:
    c0, c1 = _p_parts(limb, design)
    exact = all(not isinstance(v, float) for v in y)
    point = dict(zip(Y, y))
    if exact:
        lead, const = c1.eval(point), c0.eval(point)
        lead_zero, const_zero = lead.is_zero(), const.is_zero()
    else:
        lead, const = c1.eval_float(point), c0.eval_float(point)
        lead_zero = abs(lead) <= tol * (c1.abs_scale(point) or 1.0)
        const_zero = abs(const) <= tol * (c0.abs_scale(point) or 1.0)
    if not lead_zero:
        return InputRoot(limb, -const / lead)
    frame = limb_frame(limb)
    y1p = frame["y1"].eval(point) if exact else frame["y1"].eval_float(point)
    target = (design.r1 - design.r0) / 2
    if exact:
        pair = (y1p - ExtScalar(target)).is_zero() and ExtScalar.coerce(y[2]).is_zero()
    else:
        pair = abs(y1p - float(target)) <= 1e-9 and abs(y[2]) <= 1e-9
    return InputRoot(limb, None, True, const_zero, pair)


def degenerate_points(design: Design) -> list[tuple]:
    """Limb-1 points where p1 vanishes identically: ((r1-r0)/2, +-sqrt((a3^2-a1^2)/4), 0)."""
    y1 = (design.r1 - design.r0) / 2
    q = (design.a3**2 - design.a1**2) / 4
    out = []
    for sgn in (-1, 1):
        if q >= 0 and is_square(q.numerator) and is_square(q.denominator):
            y2 = mpq(isqrt(q.numerator), isqrt(q.denominator)) * sgn
        else:
            y2 = sgn * cmath.sqrt(float(q)) if q < 0 else sgn * math.sqrt(float(q))
        out.append((y1, y2, mpq(0)))
    return out


def torus_from_p(limb: int, design: Design | None = None) -> MPoly:
    """Substitute the root of p_limb into the limb equation and clear denominators."""
    g = _specialize(reference(("g2", "g4", "g6")[limb - 1]), design)
    c0, c1, c2 = g.coeffs_in(INPUTS[limb - 1])
    q0, q1 = _p_parts(limb, design)
    # t = -q0/q1 with q1 = c2: q1^2 g(t) = c2 q0^2 - c1 q0 q1 + c0 q1^2 = c2 (q0^2 - c1 q0 + c0 c2)
    if q1 != c2:
        raise ArithmeticError("p and the limb equation disagree on the leading coefficient")
    return (q0 * q0 - c1 * q0 + c0 * c2).content_normalize()


def torus_equation(limb: int = 1, design: Design | None = None) -> MPoly:
    """Input-singularity torus of a limb in (y1, y2, y3); limbs 2, 3 are rotations of limb 1."""
    t1 = _specialize(torus_from_p(1, None), design)
    if limb == 1:
        return t1
    return t1.subs(limb_frame(limb))


def common_torus_points(design: Design, starts: int = 200, seed: int = 0) -> list[tuple[float, float, float]]:
    """Real points shared by all three tori, found numerically.

    Points on the y3-axis are fixed by the 120-degree symmetry, so the axis
    roots of the limb-1 torus are common to all three; a Gauss-Newton search
    from random starts looks for any others.
    """
    tori = [torus_equation(k, design) for k in (1, 2, 3)]
    axis = tori[0].subs({"y1": MPoly(), "y2": MPoly()})
    coeffs = [float(c) for c in reversed(axis.coeffs_in("y3"))]
    found = []
    for r in np.roots(coeffs):
        if abs(r.imag) < 1e-9:
            found.append((0.0, 0.0, float(r.real)))
    grads = [[t.diff(v) for v in Y] for t in tori]
    rng = random.Random(seed)
    lim = float(design.a1 + design.a3 + abs(design.r0 - design.r1))
    for _ in range(starts):
        y = np.array([rng.uniform(-lim, lim) for _ in range(3)])
        for _ in range(60):
            pt = dict(zip(Y, y))
            f = np.array([t.eval_float(pt) for t in tori])
            J = np.array([[g.eval_float(pt) for g in row] for row in grads])
            step, *_ = np.linalg.lstsq(J, f, rcond=None)
            y = y - step
            if np.linalg.norm(step) < 1e-13 * max(1.0, np.linalg.norm(y)):
                break
        candidates = [y]
        # the tori are symmetric under 120-degree turns, y2 -> -y2 and y3 -> -y3
        for k in (1, 2):
            c, s = math.cos(2 * math.pi * k / 3), math.sin(2 * math.pi * k / 3)
            candidates.append(np.array([c * y[0] - s * y[1], s * y[0] + c * y[1], y[2]]))
        candidates += [v * np.array([1.0, -1.0, 1.0]) for v in candidates]
        candidates += [v * np.array([1.0, 1.0, -1.0]) for v in candidates]
        for v in candidates:
            pt = dict(zip(Y, v))
            if all(abs(t.eval_float(pt)) <= 1e-9 * (t.abs_scale(pt) or 1.0) for t in tori):
                if not any(np.linalg.norm(v - np.array(p)) < 1e-6 for p in found):
                    found.append(tuple(float(w) + 0.0 for w in v))
    return sorted(found)


# -- output singularities -----------------------------------------------------------

@dataclass(frozen=True)
class OutputFactorization:
    det: MPoly
    s1: MPoly
    s2: MPoly
    cofactor: MPoly


@lru_cache(maxsize=8)
def output_det_translational(design: Design | None = None) -> OutputFactorization:
    cs = general_constraints(design)
    jo = jacobian(cs).Jo.subs(_translational_subs())
    det = det_bareiss(jo)
    s1 = _specialize(reference("s1"), design)
    s2 = _specialize(reference("s2"), design)
    for name, s in (("s1", s1), ("s2", s2)):
        if "a3" in s.variables:
            raise ArithmeticError(f"{name} depends on a3")
    cof = div_exact(det, s1 * s2)
    if cof is None:
        raise ArithmeticError("det(J_o) is not divisible by s1*s2")
    return OutputFactorization(det, s1, s2, cof)


def joint_poly(kind: str) -> MPoly:
    if kind not in ("input", "output"):
        raise ValueError(f"kind must be 'input' or 'output', not {kind!r}")
    return reference(f"joint_{kind}")


def joint_poly_eval(kind: str, t, exact: bool = False):
    """Value of the degree-12 joint-space polynomial (design a1=3, a3=5, r0=11, r1=7)."""
    p = joint_poly(kind)
    point = dict(zip(INPUTS, t))
    if exact:
        return p.eval(point)
    return p.eval_float({k: float(v) for k, v in point.items()})


def joint_poly_scaled(kind: str, t) -> float:
    p = joint_poly(kind)
    point = {k: float(v) for k, v in zip(INPUTS, t)}
    return abs(p.eval_float(point)) / (p.abs_scale(point) or 1.0)


class EliminationError(ArithmeticError):
    pass


def output_eliminant(design: Design, factor: str = "s1", cache_dir: str | Path | None = None) -> MPoly:
    """Eliminate t1, t2, t3 successively from ``factor`` and W_T.

    The result is a polynomial in (y1, y2, y3).  Numeric designs are cached
    like the workspace equations.
    """
    if factor not in ("s1", "s2"):
        raise ValueError("factor must be 's1' or 's2'")
    cache = _cache_path(design, factor, cache_dir)
    if cache is not None and cache.exists():
        with cache.open() as fh:
            return read_sections(fh)[1]["eliminant"]
    wt = translational_system(design)
    cur = _specialize(reference(factor), design)
    for stage, (name, var) in enumerate(zip(("g2", "g4", "g6"), INPUTS), start=1):
        cur = resultant(cur, wt[name], var)
        if cur.is_zero():
            raise EliminationError(f"resultant chain vanished at stage {stage} ({var})")
    if cache is not None:
        cache.parent.mkdir(parents=True, exist_ok=True)
        tmp = cache.with_suffix(".tmp")
        with tmp.open("w") as fh:
            write_sections(fh, {"eliminant": cur}, {"design": design.to_json(), "factor": factor,
                                                     "version": __version__})
        tmp.replace(cache)
    return cur


def _cache_path(design: Design, factor: str, cache_dir) -> Path | None:
    root = cache_dir if cache_dir is not None else os.environ.get("RUUKIN_CACHE")
    if not root:
        return None
    digest = hashlib.sha1(f"{design.to_json()}|{factor}|{__version__}".encode()).hexdigest()[:16]
    return Path(root) / f"eliminant-{digest}.dump"


def scaled_value(p: MPoly, point: dict) -> float:
    pt = {k: float(v) for k, v in point.items()}
    return abs(p.eval_float(pt)) / (p.abs_scale(pt) or 1.0)


# -- self-motion ------------------------------------------------------------------

@dataclass(frozen=True)
class SelfMotion:
    """Circle y1^2 + y2^2 = radius_sq in y3 = 0 traced with all inputs fixed."""

    radius_sq: mpq
    fixed_inputs: tuple
    complex_inputs: bool

    @property
    def radius_sq_float(self) -> float:
        return float(self.radius_sq)


def self_motion_radius_sq(design: Design) -> mpq:
    return (design.a3**2 + (design.r0 - design.r1) ** 2 - design.a1**2) / 4


def self_motion(design: Design) -> SelfMotion | None:
    """The self-motion circle, or None when the circle has no real points."""
    r2 = self_motion_radius_sq(design)
    if r2 <= 0:
        return None
    if design.equal_radii:
        return SelfMotion(r2, (Fraction(0),), False)
    a1, d = design.a1, design.r0 - design.r1
    disc = a1 * a1 - d * d
    if disc < 0:
        sq = 1j * math.sqrt(float(-disc))
        roots = tuple(sorted(((-float(a1) + s * sq) / float(d) for s in (-1, 1)), key=lambda z: (z.real, z.imag)))
        return SelfMotion(r2, roots, True)
    if is_square(disc.numerator) and is_square(disc.denominator):
        sq = mpq(isqrt(disc.numerator), isqrt(disc.denominator))
        vals = {Fraction(int(v.numerator), int(v.denominator)) for v in ((-a1 - sq) / d, (-a1 + sq) / d)}
    else:
        sq = math.sqrt(float(disc))
        vals = {(-float(a1) - sq) / float(d), (-float(a1) + sq) / float(d)}
    return SelfMotion(r2, tuple(sorted(vals)), False)


# -- classification ----------------------------------------------------------------

@dataclass(frozen=True)
class SingularityReport:
    input_residuals: tuple[float, float, float]
    output_residuals: tuple[float, float]
    input_singular: tuple[int, ...]
    output_singular: bool
    self_motion: bool
    wt_residuals: tuple[float, float, float]
    tol: float

    def as_dict(self) -> dict:
        return {
            "input_singular": list(self.input_singular),
            "input_residuals": {f"p{i}": v for i, v in enumerate(self.input_residuals, 1)},
            "output_singular": self.output_singular,
            "output_residuals": {"s1": self.output_residuals[0], "s2": self.output_residuals[1]},
            "self_motion": self.self_motion,
            "wt_residuals": list(self.wt_residuals),
            "tol": self.tol,
        }


class NotOnWorkspace(ValueError):
    pass


def classify(design: Design, y, t, tol: float = 1e-8, wt_tol: float = 1e-8) -> SingularityReport:
    """Flag input (p_i), output (s1, s2) and self-motion singularity at (y, t).

    Every residual is |value| / sum|terms| at the point.
    """
    from .kinematics import wt_residuals

    wt = wt_residuals(design, y, t)
    if max(wt) > wt_tol:
        raise NotOnWorkspace(f"(y, t) violates W_T: scaled residuals {wt}")
    point = {**{k: float(v) for k, v in zip(Y, y)}, **{k: float(v) for k, v in zip(INPUTS, t)}}
    ps = [scaled_value(_specialize(reference(f"p{i}"), design), point) for i in (1, 2, 3)]
    ss = [scaled_value(_specialize(reference(n), design), point) for n in ("s1", "s2")]
    flags = tuple(i for i, v in enumerate(ps, 1) if v <= tol)
    out = min(ss) <= tol
    sm = self_motion(design)
    on_circle = False
    if sm is not None and not sm.complex_inputs:
        y1, y2, y3 = (float(v) for v in y)
        r2 = sm.radius_sq_float
        on_circle = abs(y1 * y1 + y2 * y2 - r2) <= 1e-8 * max(1.0, r2) and abs(y3) <= 1e-8
        fixed = [float(v) for v in sm.fixed_inputs]
        on_circle = on_circle and all(any(abs(float(ti) - f) <= 1e-8 * max(1.0, abs(f)) for f in fixed) for ti in t)
    return SingularityReport(tuple(ps), tuple(ss), flags, out, on_circle, wt, tol)


# -- constructed singular configurations --------------------------------------------

def torus_configurations(design: Design, count: int, seed: int = 0, limb: int = 1):
    """Input-singular (y, t) pairs: y on the limb torus, t_limb from p_limb, others by IK."""
    tor = torus_equation(limb, design)
    rng = random.Random(seed)
    lim = float(design.a1 + design.a3 + abs(design.r0 - design.r1))
    out = []
    tries = 0
    while len(out) < count and tries < 200 * count:
        tries += 1
        y1, y2 = rng.uniform(-lim, lim), rng.uniform(-lim, lim)
        uni = tor.subs({"y1": _rat(y1), "y2": _rat(y2)})
        coeffs = [float(c) for c in reversed(uni.coeffs_in("y3"))]
        if len(coeffs) < 2:
            continue
        roots = [r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-10]
        if not roots:
            continue
        y3 = float(roots[rng.randrange(len(roots))])
        y = (float(_rat(y1)), float(_rat(y2)), y3)
        root = input_sing_root(limb, y, design)
        if root.degenerate:
            continue
        sol = ik(design, y)
        others = [sol.roots[k] for k in range(3) if k != limb - 1]
        if any(not r for r in others):
            continue
        t = [None, None, None]
        t[limb - 1] = float(root.value)
        j = 0
        for k in range(3):
            if k != limb - 1:
                t[k] = rng.choice(others[j])
                j += 1
        out.append((y, tuple(t)))
    return out


def output_configurations(design: Design, count: int, factor: str = "s1", seed: int = 0):
    """Output-singular (y, t): roots of s(y, ik(y)) along random vertical lines in y3."""
    s = _specialize(reference(factor), design)
    rng = random.Random(seed)
    lim = float(design.a1 + design.a3 + abs(design.r0 - design.r1))
    out = []
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        y1, y2 = rng.uniform(-lim / 2, lim / 2), rng.uniform(-lim / 2, lim / 2)
        branch = tuple(rng.randrange(2) for _ in range(3))

        def psi(y3):
            sol = ik(design, (y1, y2, y3))
            if any(len(r) != 2 for r in sol.roots):
                return None
            t = tuple(sol.roots[k][branch[k]] for k in range(3))
            val = s.eval_float({"y1": y1, "y2": y2, "y3": y3, **dict(zip(INPUTS, t))})
            return val, t

        grid = np.linspace(-lim, lim, 241)
        prev = None
        for z in grid:
            z = float(z)
            cur = psi(z)
            if cur is not None and prev is not None and prev[1] * cur[0] < 0:
                root = _bisect(lambda v: (psi(v) or (None,))[0], prev[0], z)
                hit = psi(root) if root is not None else None
                if hit is not None:
                    out.append(((y1, y2, root), hit[1]))
                    break
            prev = (z, cur[0]) if cur is not None else None
    return out


def regular_configurations(design: Design, count: int, seed: int = 0, margin: float = 1e-2):
    """Random joint triples away from every singularity.

    Triples are drawn uniformly from [-1, 1]^3 and kept when FK has real
    solutions and every solution has scaled p1, p2, p3, s1, s2 >= ``margin``.
    """
    polys = [_specialize(reference(n), design) for n in ("p1", "p2", "p3", "s1", "s2")]
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count and tries < 1000 * count:
        tries += 1
        t = tuple(rng.uniform(-1.0, 1.0) for _ in range(3))
        sol = fk(design, t)
        if sol.tag != "none" or not sol.points:
            continue
        ok = True
        for y in sol.points:
            point = {**dict(zip(Y, y)), **dict(zip(INPUTS, t))}
            if min(scaled_value(p, point) for p in polys) < margin:
                ok = False
                break
        if ok:
            out.append((sol.points, t))
    return out


def _bisect(f, lo: float, hi: float, iters: int = 200) -> float | None:
    """Sign-change bisection; None if ``f`` becomes undefined inside."""
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm is None:
            return None
        if fm == 0.0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(1.0, abs(mid)):
            break
    return 0.5 * (lo + hi)


def _rat(v: float) -> Fraction:
    return Fraction(v).limit_denominator(10**6)
