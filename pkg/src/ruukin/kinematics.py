"""Inverse and forward kinematics in the translational operation mode.

For a fixed input ``t_i`` each limb equation of W_T is a sphere in
``(y1, y2, y3)``: the quadratic part is ``4*(1 + t_i^2)*(y1^2 + y2^2 + y3^2)``.
IK solves one quadratic per limb; FK intersects three spheres by
subtracting them pairwise (two planes) and cutting the resulting line with
one sphere.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import ExtScalar, MPoly
from .model import INPUTS, Design, translational_system

Y = ("y1", "y2", "y3")
DOUBLE_TOL = 1e-12
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class LimbEquations:
    """W_T limb ``i`` split two ways: by powers of t_i and by y-monomials."""

    poly: MPoly
    t_coeffs: tuple[MPoly, MPoly, MPoly]  # c0 + c1 t + c2 t^2, each a poly in y
    quad: MPoly   # coefficient of y1^2 (= y2^2 = y3^2) as a poly in t
    lin: tuple[MPoly, MPoly, MPoly]
    const: MPoly
    var: str


@lru_cache(maxsize=32)
def limb_equations(design: Design) -> tuple[LimbEquations, ...]:
    wt = translational_system(design)
    out = []
    for (name, p), var in zip(wt, INPUTS):
        tc = p.coeffs_in(var)
        tc = tuple(tc) + (MPoly(),) * (3 - len(tc))
        parts: dict[tuple, list] = {}
        for exps, c in p.terms():
            from .algebra.poly import VAR_INDEX
            ye = tuple(exps[VAR_INDEX[v]] for v in Y)
            te = exps[VAR_INDEX[var]]
            parts.setdefault(ye, []).append(({var: te}, c))
        get = lambda key: MPoly.from_terms(parts.get(key, []))
        quad = get((2, 0, 0))
        for key in ((0, 2, 0), (0, 0, 2)):
            if get(key) != quad:
                raise AssertionError(f"{name} is not of sphere form")
        for key in parts:
            if sum(key) == 2 and max(key) == 1:
                raise AssertionError(f"{name} has a mixed term y^{key}")
        lin = (get((1, 0, 0)), get((0, 1, 0)), get((0, 0, 1)))
        out.append(LimbEquations(p, tc, quad, lin, get((0, 0, 0)), var))
    return tuple(out)


def _is_exact(v) -> bool:
    return not isinstance(v, (float, complex, np.floating))


def _value(p: MPoly, point: dict, exact: bool):
    if exact:
        return p.eval(point)
    return p.eval_float(point)


# -- inverse kinematics -------------------------------------------------------

@dataclass(frozen=True)
class IkSolution:
    """Per-limb real roots (ascending) with a tag each.

    Tags: ``"regular"``, ``"double"`` (one root of multiplicity two: an input
    singularity), ``"linear"`` (vanishing t^2 coefficient), ``"none"`` (no real
    root) and ``"free"`` (limb equation vanishes identically at this pose).
    """

    y: tuple
    roots: tuple[tuple[float, ...], ...]
    tags: tuple[str, ...]

    @property
    def count(self) -> int:
        return math.prod(len(r) for r in self.roots)

    def combinations(self) -> list[tuple[float, float, float]]:
        return list(itertools.product(*self.roots))

    @property
    def reachable(self) -> bool:
        return self.count > 0


def _quadratic_roots(a, b, c, exact: bool) -> tuple[tuple[float, ...], str]:
    """Real roots of a t^2 + b t + c, ascending."""
    if exact:
        a, b, c = (ExtScalar.coerce(v) for v in (a, b, c))
        if a.is_zero():
            if b.is_zero():
                return ((), "free") if c.is_zero() else ((), "none")
            return ((float(-c / b),), "linear")
        disc = b * b - 4 * a * c
        sign = disc.sign()
        af, bf = float(a), float(b)
        if sign < 0:
            return (), "none"
        if sign == 0:
            return (float(-b / (2 * a)),), "double"
        return _stable_pair(af, bf, float(c), float(disc)), "regular"
    a, b, c = float(a), float(b), float(c)
    scale = max(abs(a), abs(b), abs(c))
    if scale == 0.0:
        return (), "free"
    if abs(a) <= DOUBLE_TOL * scale:
        if abs(b) <= DOUBLE_TOL * scale:
            return (), "none"
        return (-c / b,), "linear"
    disc = b * b - 4 * a * c
    if abs(disc) <= DOUBLE_TOL * max(b * b, abs(4 * a * c)):
        return (-b / (2 * a),), "double"
    if disc < 0:
        return (), "none"
    return _stable_pair(a, b, c, disc), "regular"


def _stable_pair(a: float, b: float, c: float, disc: float) -> tuple[float, float]:
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b))
    r1 = q / a
    r2 = c / q if q != 0.0 else -r1
    return tuple(sorted((r1, r2)))


def ik(design: Design, y) -> IkSolution:
    """Solve each limb quadratic for its input at translation ``y``.

    Exact coordinates (ints, Fractions, ExtScalar) decide the root count
    exactly; float coordinates use a relative tolerance.
    """
    y = tuple(y)
    exact = all(_is_exact(v) for v in y)
    point = dict(zip(Y, y))
    roots, tags = [], []
    for limb in limb_equations(design):
        c0, c1, c2 = (_value(c, point, exact) if c else 0 for c in limb.t_coeffs)
        r, tag = _quadratic_roots(c2, c1, c0, exact)
        roots.append(r)
        tags.append(tag)
    return IkSolution(y, tuple(roots), tuple(tags))


# -- forward kinematics -------------------------------------------------------

@dataclass(frozen=True)
class FkSolution:
    """Real translations reachable with the given inputs.

    ``tag`` is ``"none"`` (regular), ``"self-motion-circle"`` (the three spheres
    share a circle) or ``"inconsistent"``.  For the circle case ``circle`` holds
    ``(center, unit normal, radius^2)``.  When all three spheres coincide the
    whole sphere solves W_T; it is kept in ``common_sphere`` as
    ``(center, radius^2)`` and ``circle`` is its section by y3 = 0.
    """

    t: tuple
    points: tuple[tuple[float, float, float], ...]
    tag: str = "none"
    circle: tuple | None = None
    self_motion_match: bool | None = None
    spheres: tuple = field(default=(), repr=False)
    common_sphere: tuple | None = None


def spheres(design: Design, t) -> list[tuple[np.ndarray, float]]:
    """(center, radius^2) of each limb sphere at inputs ``t``."""
    out = []
    for limb, ti in zip(limb_equations(design), t):
        pt = {limb.var: float(ti)}
        a = limb.quad.eval_float(pt)
        lin = np.array([l.eval_float(pt) if l else 0.0 for l in limb.lin])
        k = limb.const.eval_float(pt) if limb.const else 0.0
        center = -lin / (2 * a)
        out.append((center, float(center @ center - k / a)))
    return out


def fk(design: Design, t, tol: float = 1e-9) -> FkSolution:
    t = tuple(t)
    sph = spheres(design, t)
    (c1, q1), (c2, q2), (c3, q3) = sph
    # |y - ci|^2 = qi  minus  |y - cj|^2 = qj  is linear in y
    n = np.array([2 * (c2 - c1), 2 * (c3 - c1)])
    k = np.array([q1 - q2 + c2 @ c2 - c1 @ c1, q1 - q3 + c3 @ c3 - c1 @ c1])
    scale = max(1.0, float(np.abs(n).max()))
    d = np.cross(n[0], n[1])
    if np.linalg.norm(d) <= tol * scale * scale:
        return _fk_degenerate(design, t, sph, n, k, tol)
    base, *_ = np.linalg.lstsq(np.vstack([n, d]), np.append(k, 0.0), rcond=None)
    # |base + s d - c1|^2 = q1
    w = base - c1
    a, b, c = d @ d, 2 * (w @ d), w @ w - q1
    disc = b * b - 4 * a * c
    if disc < -tol * max(b * b, abs(4 * a * c), 1.0):
        return FkSolution(t, (), "none", spheres=tuple(sph))
    disc = max(disc, 0.0)
    sq = math.sqrt(disc)
    pts = {tuple(float(v) for v in base + s * d) for s in ((-b - sq) / (2 * a), (-b + sq) / (2 * a))}
    if disc == 0.0 or sq <= tol * abs(b):
        pts = {tuple(float(v) for v in base - b / (2 * a) * d)}
    return FkSolution(t, tuple(sorted(pts)), "none", spheres=tuple(sph))


def _fk_degenerate(design, t, sph, n, k, tol) -> FkSolution:
    rank = np.linalg.matrix_rank(n, tol=tol * max(1.0, float(np.abs(n).max())))
    if rank == 0:
        if not np.all(np.abs(k) <= tol * max(1.0, float(np.abs(k).max()))):
            return FkSolution(t, (), "inconsistent", spheres=tuple(sph))
        # all spheres coincide: W_T holds on the whole sphere; report its y3 = 0 section
        c1, q1 = sph[0]
        r2 = q1 - c1[2] ** 2
        if r2 < -tol * max(1.0, abs(q1)):
            return FkSolution(t, (), "inconsistent", spheres=tuple(sph))
        center = np.array([c1[0], c1[1], 0.0])
        return _circle_solution(design, t, sph, center, np.array([0.0, 0.0, 1.0]), r2, common=(c1, q1))
    # one independent plane; the other must be a multiple of it
    i = int(np.argmax(np.linalg.norm(n, axis=1)))
    j = 1 - i
    lam = (n[j] @ n[i]) / (n[i] @ n[i])
    if abs(k[j] - lam * k[i]) > tol * max(1.0, abs(k[j]), abs(k[i])):
        return FkSolution(t, (), "inconsistent", spheres=tuple(sph))
    normal = n[i] / np.linalg.norm(n[i])
    c1, q1 = sph[0]
    # plane normal.y = k_i/|n_i|; circle center is the projection of c1
    off = k[i] / np.linalg.norm(n[i])
    h = off - normal @ c1
    center = c1 + h * normal
    r2 = q1 - h * h
    if r2 < -tol * max(1.0, abs(q1)):
        return FkSolution(t, (), "none", spheres=tuple(sph))
    return _circle_solution(design, t, sph, center, normal, r2)


def _circle_solution(design, t, sph, center, normal, r2, common=None) -> FkSolution:
    from .singularity import self_motion

    sm = self_motion(design)
    match = None
    if sm is not None:
        match = bool(abs(sm.radius_sq_float - r2) <= 1e-8 * max(1.0, r2)
                     and abs(center[2]) <= 1e-8 and abs(center[0]) + abs(center[1]) <= 1e-8)
    circle = (tuple(float(v) for v in center), tuple(float(v) for v in normal), float(max(r2, 0.0)))
    if common is not None:
        common = (tuple(float(v) for v in common[0]), float(common[1]))
    return FkSolution(t, (), "self-motion-circle", circle, match, tuple(sph), common)


def wt_residuals(design: Design, y, t) -> tuple[float, ...]:
    """Scaled residuals |g| / sum|terms| of the three W_T equations."""
    out = []
    for limb, ti in zip(limb_equations(design), t):
        pt = dict(zip(Y, (float(v) for v in y)))
        pt[limb.var] = float(ti)
        val = limb.poly.eval_float(pt)
        scale = limb.poly.abs_scale(pt) or 1.0
        out.append(abs(val) / scale)
    return tuple(out)


@dataclass(frozen=True)
class RoundTrip:
    y: tuple
    combinations: tuple
    recovered: tuple[bool, ...]
    others: tuple
    degenerate: tuple

    @property
    def ok(self) -> bool:
        return bool(self.combinations) and all(self.recovered)


def roundtrip_check(design: Design, y, tol: float = 1e-8) -> RoundTrip:
    """Run fk on every IK combination and check that ``y`` comes back."""
    sol = ik(design, y)
    target = np.array([float(v) for v in y])
    combos, found, others, degen = [], [], [], []
    for combo in sol.combinations():
        res = fk(design, combo)
        combos.append(combo)
        if res.tag != "none":
            degen.append((combo, res.tag))
            found.append(res.tag == "self-motion-circle" and _on_circle(res.circle, target, tol))
            continue
        hit = False
        for p in res.points:
            if np.linalg.norm(np.array(p) - target) <= tol * max(1.0, np.linalg.norm(target)):
                hit = True
            else:
                others.append((combo, p))
        found.append(hit)
    return RoundTrip(tuple(y), tuple(combos), tuple(found), tuple(others), tuple(degen))


def _on_circle(circle, p, tol) -> bool:
    center, normal, r2 = (np.array(circle[0]), np.array(circle[1]), circle[2])
    v = p - center
    return abs(v @ normal) <= tol and abs(v @ v - r2) <= tol * max(1.0, r2)
