"""Exact arithmetic in the real quadratic field Q(sqrt(3))."""

from __future__ import annotations

import math
from fractions import Fraction

from gmpy2 import mpq, mpz

_GMP_TYPES = (type(mpz()), type(mpq()))

SQRT3 = math.sqrt(3.0)


def to_mpq(value) -> mpq:
    """Coerce ints, Fractions, mpq and ``"p/q"`` strings to mpq.

    Floats are rejected on purpose: they would silently carry rounding
    error into exact computations.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int,) + _GMP_TYPES):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) == 0:
                raise ZeroDivisionError(f"zero denominator in {value!r}")
            return mpq(int(num), int(den))
        return mpq(int(text))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q) -> str:
    q = mpq(q)
    return f"{q.numerator}/{q.denominator}"


class ExtScalar:
    """Element ``rat + irr*sqrt(3)`` with exact rational parts.

    Instances are immutable and hashable.
    """

    __slots__ = ("rat", "irr")

    def __init__(self, rat=0, irr=0):
        object.__setattr__(self, "rat", to_mpq(rat))
        object.__setattr__(self, "irr", to_mpq(irr))

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    @classmethod
    def _raw(cls, rat: mpq, irr: mpq) -> "ExtScalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rat", rat)
        object.__setattr__(obj, "irr", irr)
        return obj

    @classmethod
    def coerce(cls, value) -> "ExtScalar":
        if isinstance(value, ExtScalar):
            return value
        return cls(value)

    @classmethod
    def sqrt3(cls) -> "ExtScalar":
        return cls._raw(mpq(0), mpq(1))

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.rat and not self.irr

    def is_rational(self) -> bool:
        return not self.irr

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sign(self) -> int:
        """Exact sign of the real number ``rat + irr*sqrt(3)``."""
        a, b = self.rat, self.irr
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 3 b^2
        d = a * a - 3 * b * b
        return sa if d > 0 else (sb if d < 0 else 0)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        try:
            o = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExtScalar._raw(self.rat + o.rat, self.irr + o.irr)

    __radd__ = __add__

    def __neg__(self):
        return ExtScalar._raw(-self.rat, -self.irr)

    def __sub__(self, other):
        try:
            o = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExtScalar._raw(self.rat - o.rat, self.irr - o.irr)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.rat, self.irr, o.rat, o.irr
        return ExtScalar._raw(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "ExtScalar":
        return ExtScalar._raw(self.rat, -self.irr)

    def norm(self) -> mpq:
        """Field norm ``rat^2 - 3*irr^2`` (zero iff the element is zero)."""
        return self.rat * self.rat - 3 * self.irr * self.irr

    def inverse(self) -> "ExtScalar":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("ExtScalar division by zero")
        return ExtScalar._raw(self.rat / n, -self.irr / n)

    def __truediv__(self, other):
        try:
            o = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return ExtScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ExtScalar._raw(mpq(1), mpq(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / conversion -----------------------------------------
    def __eq__(self, other):
        try:
            o = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.rat == o.rat and self.irr == o.irr

    def __hash__(self):
        return hash((self.rat, self.irr))

    def __float__(self):
        return float(self.rat) + float(self.irr) * SQRT3

    def __repr__(self):
        return f"ExtScalar({format_rational(self.rat)}, {format_rational(self.irr)})"

    def __str__(self):
        if not self.irr:
            return _short(self.rat)
        if not self.rat:
            return f"{_short(self.irr)}*sqrt3"
        return f"({_short(self.rat)} + {_short(self.irr)}*sqrt3)"


def _short(q: mpq) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
