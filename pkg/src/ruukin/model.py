"""Designs, poses, dual quaternions and the constraint systems of the 3-RUU.

Rigid displacements are written as dual quaternions ``p + eps*q`` whose
eight components are the Study parameters ``(x0..x3, y0..y3)``.  The limb
constraints are generated from the canonical pair ``f1, f2`` by composing the
platform pose with fixed base and platform anchor displacements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from gmpy2 import mpq

from .algebra import ExtScalar, MPoly
from .algebra.scalar import format_rational, to_mpq
from .reference import reference

STUDY = ("x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3")
INPUTS = ("t1", "t2", "t3")
DESIGN_KEYS = ("a1", "a3", "r0", "r1")

# Conditions selecting the translational three-space.
TRANSLATIONAL = {"x0": 1, "x1": 0, "x2": 0, "x3": 0, "y0": 0}
# Conditions selecting the half-turn twisted translational three-space.
TWISTED = {"x3": 1, "x0": 0, "x1": 0, "x2": 0, "y3": 0}


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class Design:
    """Leg lengths ``a1, a3`` and circum-radii ``r0`` (base), ``r1`` (platform)."""

    a1: mpq
    a3: mpq
    r0: mpq
    r1: mpq
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for key in DESIGN_KEYS:
            try:
                value = to_mpq(getattr(self, key))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise DesignError(f"design parameter {key}: {exc}") from None
            if value <= 0:
                raise DesignError(f"design parameter {key} must be positive, got {_short(value)}")
            object.__setattr__(self, key, value)

    @classmethod
    def from_mapping(cls, data: Mapping, name: str = "") -> "Design":
        missing = [k for k in DESIGN_KEYS if k not in data]
        if missing:
            raise DesignError(f"design is missing {', '.join(missing)}")
        values = {}
        for k in DESIGN_KEYS:
            v = data[k]
            if isinstance(v, float):
                raise DesignError(f"design parameter {k}: give an integer or 'p/q' string, not a float")
            values[k] = v
        return cls(**values, name=name)

    @classmethod
    def from_json(cls, path: str | Path) -> "Design":
        path = Path(path)
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise DesignError(f"cannot read design file {path}: {exc}") from None
        if not isinstance(data, dict):
            raise DesignError(f"design file {path} must hold a JSON object")
        return cls.from_mapping(data, name=path.stem)

    @classmethod
    def builtin(cls, name: str) -> "Design":
        """Shipped designs: ``pars`` (3, 5, 11, 7) and ``pars2`` (5, 4, 11, 7)."""
        try:
            text = resources.files("ruukin.data").joinpath(f"{name}.json").read_text()
        except FileNotFoundError:
            raise DesignError(f"no built-in design {name!r}") from None
        return cls.from_mapping(json.loads(text), name=name)

    @property
    def equal_radii(self) -> bool:
        return self.r0 == self.r1

    def assignment(self) -> dict[str, mpq]:
        return {k: getattr(self, k) for k in DESIGN_KEYS}

    def to_json(self) -> str:
        return json.dumps({k: format_rational(getattr(self, k)) for k in DESIGN_KEYS})

    def label(self) -> str:
        vals = ",".join(_short(getattr(self, k)) for k in DESIGN_KEYS)
        return f"{self.name}({vals})" if self.name else f"({vals})"


def _short(q) -> str:
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def resolve_design(design: "Design | str | Path | None") -> Design | None:
    """Accept a Design, a built-in name, a JSON path, or None (symbolic)."""
    if design is None or isinstance(design, Design):
        return design
    text = str(design)
    path = Path(text)
    if path.exists():
        return Design.from_json(path)
    if path.suffix == ".json" and path.parent == Path(".") and path.stem in ("pars", "pars2"):
        return Design.builtin(path.stem)
    if path.suffix == ".json":
        return Design.from_json(path)
    return Design.builtin(text)


# -- poses -------------------------------------------------------------------

@dataclass(frozen=True)
class Pose:
    """Point of Study space, eight homogeneous coordinates."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("a pose has exactly eight Study coordinates")
        object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def translational(cls, y1, y2, y3) -> "Pose":
        return cls((1, 0, 0, 0, 0, y1, y2, y3))

    @property
    def x(self) -> tuple:
        return self.coords[:4]

    @property
    def y(self) -> tuple:
        return self.coords[4:]

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coords)

    def study_residual(self):
        return sum((a * b for a, b in zip(self.x, self.y)), 0)

    def is_translational(self) -> bool:
        return all(self.coords[i] == v for i, v in ((0, 1), (1, 0), (2, 0), (3, 0), (4, 0)))

    def translation_part(self) -> tuple:
        """``(y1, y2, y3)`` for a translational pose."""
        return self.coords[5:]

    def assignment(self) -> dict:
        return dict(zip(STUDY, self.coords))

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coords)

    def scaled(self, lam) -> "Pose":
        return Pose(tuple(lam * c for c in self.coords))

    def normalized(self) -> "Pose":
        """Float pose scaled so that x0^2+x1^2+x2^2+x3^2 = 1 (or |coords| = 1 if x = 0)."""
        c = self.as_floats()
        n = sum(v * v for v in c[:4]) ** 0.5
        if n == 0.0:
            n = sum(v * v for v in c) ** 0.5
        if n == 0.0:
            raise ValueError("zero pose")
        return Pose(tuple(v / n for v in c))


def _is_zero(c) -> bool:
    if isinstance(c, ExtScalar):
        return c.is_zero()
    return c == 0


# -- dual quaternions ----------------------------------------------------------

def qmul(a: Sequence, b: Sequence) -> tuple:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def qconj(a: Sequence) -> tuple:
    return (a[0], -a[1], -a[2], -a[3])


@dataclass(frozen=True)
class DualQuaternion:
    """``primal + eps * dual`` with eps^2 = 0; entries from any commutative ring."""

    primal: tuple
    dual: tuple

    def __mul__(self, other: "DualQuaternion") -> "DualQuaternion":
        return dq_compose(self, other)

    def conjugate(self) -> "DualQuaternion":
        """Quaternion conjugate of both parts; the inverse for unit primal parts."""
        return DualQuaternion(qconj(self.primal), qconj(self.dual))

    def study_condition(self):
        return sum((a * b for a, b in zip(self.primal, self.dual)), 0)

    def coords(self) -> tuple:
        return tuple(self.primal) + tuple(self.dual)

    @classmethod
    def identity(cls) -> "DualQuaternion":
        return cls((1, 0, 0, 0), (0, 0, 0, 0))

    @classmethod
    def from_pose(cls, pose: Pose) -> "DualQuaternion":
        return cls(pose.x, pose.y)

    def to_pose(self) -> Pose:
        return Pose(self.coords())

    @classmethod
    def translation(cls, d: Sequence) -> "DualQuaternion":
        """Pure translation by vector ``d``: Study coordinates ``(1,0,0,0, 0,-d/2)``."""
        return displacement((1, 0, 0, 0), d)

    @classmethod
    def rotation(cls, q: Sequence) -> "DualQuaternion":
        return cls(tuple(q), (0, 0, 0, 0))


def dq_compose(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    primal = qmul(a.primal, b.primal)
    d1 = qmul(a.primal, b.dual)
    d2 = qmul(a.dual, b.primal)
    return DualQuaternion(primal, tuple(u + v for u, v in zip(d1, d2)))


def displacement(rotation: Sequence, d: Sequence) -> DualQuaternion:
    """Rotation ``rotation`` followed by the translation ``d`` (translation on the left)."""
    half = ExtScalar(Fraction(-1, 2))
    tq = (0,) + tuple(d)
    dual = tuple(half * c for c in qmul(tq, rotation))
    return DualQuaternion(tuple(rotation), dual)


_S3 = ExtScalar.sqrt3()
_HALF = ExtScalar(Fraction(1, 2))

# Half-angle quaternions for rotations about z by 0, 120 and 240 degrees.
LIMB_ROTATIONS = (
    (ExtScalar(1), ExtScalar(0), ExtScalar(0), ExtScalar(0)),
    (_HALF, ExtScalar(0), ExtScalar(0), _S3 * _HALF),
    (-_HALF, ExtScalar(0), ExtScalar(0), _S3 * _HALF),
)
# Frame change from an anchor to the canonical limb frame (a 120 degree turn
# about (1,1,1)/sqrt3, inverted): the first joint axis becomes the tangent of
# the circum-circle.
ANCHOR_ROTATION = (_HALF, -_HALF, -_HALF, -_HALF)


def rot_z(k: int) -> DualQuaternion:
    """Rotation about z by ``k * 120`` degrees."""
    return DualQuaternion.rotation(LIMB_ROTATIONS[k % 3])


def anchor(radius, limb: int) -> DualQuaternion:
    """Displacement of limb ``limb`` (0, 1, 2) anchor frame at distance ``radius``."""
    shift = displacement((1, 0, 0, 0), (radius, 0, 0))
    frame = DualQuaternion.rotation(ANCHOR_ROTATION)
    return rot_z(limb) * shift * frame


# -- constraint systems -------------------------------------------------------

@dataclass(frozen=True)
class ConstraintSystem:
    """Named polynomials plus the design they were built for (None = symbolic)."""

    names: tuple[str, ...]
    polys: tuple[MPoly, ...]
    design: Design | None = None

    @property
    def symbolic(self) -> bool:
        return self.design is None

    def __getitem__(self, name: str) -> MPoly:
        try:
            return self.polys[self.names.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def __iter__(self) -> Iterator[tuple[str, MPoly]]:
        return iter(zip(self.names, self.polys))

    def __len__(self) -> int:
        return len(self.names)

    def as_dict(self) -> dict[str, MPoly]:
        return dict(zip(self.names, self.polys))

    @property
    def variables(self) -> tuple[str, ...]:
        used = set()
        for p in self.polys:
            used.update(p.variables)
        from .algebra.poly import VARIABLES
        return tuple(v for v in VARIABLES if v in used)

    def subs(self, assignment: Mapping) -> "ConstraintSystem":
        return ConstraintSystem(self.names, tuple(p.subs(assignment) for p in self.polys), self.design)


def _specialize(p: MPoly, design: Design | None) -> MPoly:
    return p if design is None else p.subs(design.assignment())


def canonical_constraints(design: Design | None = None) -> tuple[MPoly, MPoly]:
    """``(f1, f2)`` of one limb in its own frames, variable ``t`` for the input."""
    return _specialize(reference("f1"), design), _specialize(reference("f2"), design)


def _radius(design: Design | None, key: str):
    return MPoly.var(key) if design is None else MPoly.const(getattr(design, key))


def limb_substitution(limb: int, design: Design | None = None) -> dict[str, MPoly]:
    """Study coordinates of ``B^-1 * X * P`` as polynomials in the coordinates of X."""
    base = anchor(_radius(design, "r0"), limb)
    plat = anchor(_radius(design, "r1"), limb)
    x = DualQuaternion(tuple(MPoly.var(n) for n in STUDY[:4]), tuple(MPoly.var(n) for n in STUDY[4:]))
    comp = base.conjugate() * x * plat
    return dict(zip(STUDY, (MPoly._coerce(c) for c in comp.coords())))


def general_constraints(design: Design | None = None) -> ConstraintSystem:
    """The eight equations g1..g8 on the platform pose and inputs t1, t2, t3."""
    f1, f2 = canonical_constraints(design)
    polys = []
    for limb in range(3):
        sub = limb_substitution(limb, design)
        sub["t"] = MPoly.var(INPUTS[limb])
        polys.append(f1.subs(sub))
        polys.append(-f2.subs(sub))
    x = [MPoly.var(n) for n in STUDY]
    polys.append(sum((x[i] * x[i + 4] for i in range(4)), MPoly()))
    polys.append(sum((x[i] * x[i] for i in range(4)), MPoly()) - 1)
    names = tuple(f"g{i}" for i in range(1, 9))
    return ConstraintSystem(names, tuple(polys), design)


def translational_system(design: Design | None = None, general: ConstraintSystem | None = None) -> ConstraintSystem:
    """W_T: g2, g4, g6 with the translational conditions substituted."""
    cs = general if general is not None else general_constraints(design)
    cond = {k: MPoly.const(v) for k, v in TRANSLATIONAL.items()}
    polys = tuple(cs[n].subs(cond) for n in ("g2", "g4", "g6"))
    return ConstraintSystem(("g2", "g4", "g6"), polys, cs.design)


def reference_translational_system(design: Design | None = None) -> ConstraintSystem:
    """W_T from the hand transcription rather than from generation."""
    polys = tuple(_specialize(reference(n), design) for n in ("g2", "g4", "g6"))
    return ConstraintSystem(("g2", "g4", "g6"), polys, design)
