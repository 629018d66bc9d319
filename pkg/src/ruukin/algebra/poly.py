"""Sparse multivariate polynomials over Q(sqrt(3)).

All polynomials share one fixed registry of variable names.  A monomial is
packed into a single Python int: one 10-bit field per registered variable
plus a total-degree field on top, so monomial multiplication is integer
addition and integer comparison is a graded monomial order.  The two low
bits of a term key hold the power of sqrt(3) (0 or 1); the rational and
sqrt(3) parts of a coefficient therefore live under sibling keys.
"""

from __future__ import annotations

import ast
import heapq
from math import lcm
from typing import Iterable, Mapping

from gmpy2 import mpq

from .scalar import SQRT3, ExtScalar

VARIABLES: tuple[str, ...] = (
    "x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3",
    "t", "t1", "t2", "t3", "a1", "a3", "r0", "r1",
)
VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
NVARS = len(VARIABLES)

_W = 10
_FIELD = (1 << _W) - 1
_MAX_EXP = (1 << (_W - 1)) - 1  # top bit of each field is a borrow guard
_DEG_SHIFT = _W * NVARS
_GUARDS = sum(1 << (_W * i + _W - 1) for i in range(NVARS + 1))
_ONE_DEG = 1 << _DEG_SHIFT
_ZERO = mpq(0)
_ONE = mpq(1)


def _mono(exps: Iterable[int]) -> int:
    m = 0
    deg = 0
    for i, e in enumerate(exps):
        if e:
            if e < 0 or e > _MAX_EXP:
                raise OverflowError(f"exponent {e} out of range")
            m |= e << (_W * i)
            deg += e
    if deg > _MAX_EXP:
        raise OverflowError(f"total degree {deg} out of range")
    return m | (deg << _DEG_SHIFT)


def _exps(mono: int) -> tuple[int, ...]:
    return tuple((mono >> (_W * i)) & _FIELD for i in range(NVARS))


def _var_shift(name: str) -> int:
    try:
        return _W * VAR_INDEX[name]
    except KeyError:
        raise KeyError(f"unknown variable {name!r}; known: {' '.join(VARIABLES)}") from None


def _grevlex_key(exps: tuple[int, ...]):
    # ascending key; sort with reverse=True for descending grevlex
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MPoly:
    """Immutable sparse polynomial.

    Build polynomials with :meth:`var`, :meth:`const` or :func:`parse`, then
    combine them with ``+ - * **``.  Scalars (int, Fraction, ``ExtScalar``)
    mix freely with polynomials.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, mpq] | None = None):
        self._t = dict(terms) if terms else {}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "MPoly":
        p = object.__new__(cls)
        p._t = terms
        p._hash = None
        return p

    # -- construction ---------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "MPoly":
        shift = _var_shift(name)
        return cls._wrap({(((1 << shift) | _ONE_DEG) << 2): _ONE})

    @classmethod
    def const(cls, value) -> "MPoly":
        s = ExtScalar.coerce(value)
        t = {}
        if s.rat:
            t[0] = s.rat
        if s.irr:
            t[1] = s.irr
        return cls._wrap(t)

    @classmethod
    def from_terms(cls, items: Iterable[tuple[Mapping[str, int] | tuple, object]]) -> "MPoly":
        """Build from ``(exponents, coefficient)`` pairs.

        Exponents are either a ``{name: power}`` dict or a full-length tuple
        in registry order.
        """
        t: dict[int, mpq] = {}
        for exps, coeff in items:
            if isinstance(exps, Mapping):
                full = [0] * NVARS
                for name, e in exps.items():
                    full[VAR_INDEX[name]] += e
                exps = full
            m = _mono(exps) << 2
            c = ExtScalar.coerce(coeff)
            if c.rat:
                t[m] = t.get(m, _ZERO) + c.rat
            if c.irr:
                t[m | 1] = t.get(m | 1, _ZERO) + c.irr
        return cls._wrap({k: v for k, v in t.items() if v})

    @staticmethod
    def _coerce(other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other)

    # -- inspection -----------------------------------------------------
    def __len__(self) -> int:
        """Number of distinct monomials (a sqrt(3) part does not add one)."""
        return len({k >> 2 for k in self._t})

    @property
    def nterms_raw(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return all(k >> 2 == 0 for k in self._t)

    def constant_value(self) -> ExtScalar:
        return ExtScalar._raw(self._t.get(0, _ZERO), self._t.get(1, _ZERO))

    def __float__(self) -> float:
        if not self.is_constant():
            raise TypeError("float() of a non-constant polynomial")
        return float(self.constant_value())

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return max(self._t) >> (_DEG_SHIFT + 2)

    def degree(self, name: str) -> int:
        if not self._t:
            return -1
        shift = _var_shift(name) + 2
        return max((k >> shift) & _FIELD for k in self._t)

    def degrees(self) -> dict[str, int]:
        out = {}
        for k in self._t:
            for i, e in enumerate(_exps(k >> 2)):
                if e and e > out.get(VARIABLES[i], 0):
                    out[VARIABLES[i]] = e
        return out

    @property
    def variables(self) -> tuple[str, ...]:
        """Names that actually occur, in registry order."""
        used = 0
        for k in self._t:
            used |= k >> 2
        return tuple(
            name for i, name in enumerate(VARIABLES) if (used >> (_W * i)) & _FIELD
        )

    def has_irrational(self) -> bool:
        return any(k & 1 for k in self._t)

    def terms(self) -> list[tuple[tuple[int, ...], ExtScalar]]:
        """Terms as ``(exponent tuple, coefficient)`` in canonical grevlex order."""
        merged: dict[int, list] = {}
        for k, c in self._t.items():
            slot = merged.setdefault(k >> 2, [_ZERO, _ZERO])
            slot[k & 1] = c
        items = [(_exps(m), ExtScalar._raw(a, b)) for m, (a, b) in merged.items()]
        items.sort(key=lambda it: _grevlex_key(it[0]), reverse=True)
        return items

    def leading_term(self) -> tuple[tuple[int, ...], ExtScalar]:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        return self.terms()[0]

    def coefficient(self, exps: Mapping[str, int]) -> ExtScalar:
        full = [0] * NVARS
        for name, e in exps.items():
            full[VAR_INDEX[name]] = e
        m = _mono(full) << 2
        return ExtScalar._raw(self._t.get(m, _ZERO), self._t.get(m | 1, _ZERO))

    # -- equality ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._t == other._t
        try:
            return self._t == MPoly.const(other)._t
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = MPoly.const(other)
            except TypeError:
                return NotImplemented
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        out = dict(a)
        get = out.get
        for k, c in b.items():
            v = get(k, _ZERO) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._wrap({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = MPoly.const(other)
            except TypeError:
                return NotImplemented
        out = dict(self._t)
        get = out.get
        for k, c in other._t.items():
            v = get(k, _ZERO) - c
            if v:
                out[k] = v
            else:
                del out[k]
        return MPoly._wrap(out)

    def __rsub__(self, other):
        return MPoly._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = MPoly.const(other)
            except TypeError:
                return NotImplemented
        return MPoly._wrap(_mul_terms(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, s) -> "MPoly":
        s = ExtScalar.coerce(s)
        if s.is_zero():
            return MPoly()
        if not s.irr:
            r = s.rat
            return MPoly._wrap({k: c * r for k, c in self._t.items()})
        return self * MPoly.const(s)

    def __truediv__(self, other):
        """Division by a nonzero scalar only; see :func:`div_exact` for polynomials."""
        if isinstance(other, MPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        return self.scale(ExtScalar.coerce(other).inverse())

    def mul_monomial(self, exps: Mapping[str, int]) -> "MPoly":
        full = [0] * NVARS
        for name, e in exps.items():
            full[VAR_INDEX[name]] = e
        m = _mono(full) << 2
        if self.total_degree() + sum(full) > _MAX_EXP:
            raise OverflowError("degree overflow")
        return MPoly._wrap({k + m: c for k, c in self._t.items()})

    # -- calculus / substitution ------------------------------------------
    def diff(self, name: str) -> "MPoly":
        shift = _var_shift(name)
        step = ((1 << shift) | _ONE_DEG) << 2
        out = {}
        for k, c in self._t.items():
            e = (k >> (shift + 2)) & _FIELD
            if e:
                out[k - step] = c * e
        return MPoly._wrap(out)

    def subs(self, assignment: Mapping[str, object]) -> "MPoly":
        """Substitute scalars or polynomials for variables (all at once)."""
        if not assignment:
            return self
        idx = [(VAR_INDEX[n], MPoly._coerce(v)) for n, v in assignment.items()]
        clear_mask = 0
        for i, _ in idx:
            clear_mask |= _FIELD << (_W * i)
        powers: list[dict[int, MPoly]] = [dict() for _ in idx]
        groups: dict[tuple, dict] = {}
        for k, c in self._t.items():
            mono = k >> 2
            es = tuple((mono >> (_W * i)) & _FIELD for i, _ in idx)
            rest = mono & ~clear_mask & ~(((1 << _W) - 1) << _DEG_SHIFT)
            rdeg = sum(_exps(rest))
            rest |= rdeg << _DEG_SHIFT
            g = groups.setdefault(es, {})
            rk = (rest << 2) | (k & 1)
            g[rk] = g.get(rk, _ZERO) + c
        result = MPoly()
        for es, g in groups.items():
            factor = MPoly.const(1)
            for j, e in enumerate(es):
                if e:
                    cache = powers[j]
                    if e not in cache:
                        cache[e] = idx[j][1] ** e
                    factor = factor * cache[e]
            result = result + MPoly._wrap({k: v for k, v in g.items() if v}) * factor
        return result

    def eval(self, assignment: Mapping[str, object], mode: str = "auto"):
        """Evaluate the polynomial.

        If every occurring variable is assigned: returns an ``ExtScalar``
        when all values are exact, else a float.  With ``mode="substitute"``
        a partial assignment yields the polynomial in the remaining
        variables.
        """
        missing = [v for v in self.variables if v not in assignment]
        if mode == "substitute":
            return self.subs({k: v for k, v in assignment.items() if k in VAR_INDEX})
        if missing:
            raise KeyError(f"no value for variable(s): {', '.join(missing)}")
        inexact = any(isinstance(v, (float, complex)) for v in assignment.values())
        if mode == "float" or inexact:
            return self.eval_float({n: _to_float(v) for n, v in assignment.items()})
        vals = {n: ExtScalar.coerce(v) for n, v in assignment.items() if n in VAR_INDEX}
        return self.subs(vals).constant_value()

    def eval_float(self, assignment: Mapping[str, float], absolute: bool = False):
        """Float (or complex) value; with ``absolute`` the sum of |term| instead."""
        used = self.variables
        vals = [0.0] * NVARS
        for n in used:
            v = assignment[n]
            vals[VAR_INDEX[n]] = abs(v) if absolute else v
        active = [VAR_INDEX[n] for n in used]
        pw: dict[tuple[int, int], float] = {}
        total = 0.0
        for k, c in self._t.items():
            mono = k >> 2
            term = float(c) * (SQRT3 if k & 1 else 1.0)
            if absolute:
                term = abs(term)
            for i in active:
                e = (mono >> (_W * i)) & _FIELD
                if e:
                    key = (i, e)
                    v = pw.get(key)
                    if v is None:
                        v = pw[key] = vals[i] ** e
                    term *= v
            total += term
        return total

    def abs_scale(self, assignment: Mapping[str, float]) -> float:
        """Sum of |coefficient * monomial| at a point; the natural error scale."""
        return self.eval_float(assignment, absolute=True)

    # -- univariate views ---------------------------------------------------
    def coeffs_in(self, name: str) -> list["MPoly"]:
        """Coefficients ``[c0, c1, ...]`` with ``self = sum(c_k * name**k)``."""
        shift = _var_shift(name)
        d = self.degree(name)
        if d < 0:
            return []
        buckets: list[dict] = [dict() for _ in range(d + 1)]
        for k, c in self._t.items():
            e = ((k >> 2) >> shift) & _FIELD
            buckets[e][k - ((((e << shift) | (e << _DEG_SHIFT))) << 2)] = c
        return [MPoly._wrap(b) for b in buckets]

    @classmethod
    def from_coeffs(cls, coeffs: list["MPoly"], name: str) -> "MPoly":
        shift = _var_shift(name)
        out: dict = {}
        for e, c in enumerate(coeffs):
            if e and c.total_degree() + e > _MAX_EXP:
                raise OverflowError("degree overflow")
            off = (((e << shift) | (e << _DEG_SHIFT))) << 2
            for k, v in c._t.items():
                out[k + off] = v
        return cls._wrap(out)

    # -- normalization ---------------------------------------------------------
    def content_normalize(self) -> "MPoly":
        """Divide by the positive rational content and fix the sign.

        The canonical leading coefficient ends up with positive rational part
        (or positive sqrt(3) part when its rational part is zero).
        """
        if not self._t:
            return self
        from math import gcd

        num_g = 0
        den_l = 1
        for c in self._t.values():
            num_g = gcd(num_g, int(c.numerator))
            d = int(c.denominator)
            den_l = den_l // gcd(den_l, d) * d
        factor = mpq(den_l, num_g)
        lc = self.leading_term()[1]
        if lc.rat < 0 or (not lc.rat and lc.irr < 0):
            factor = -factor
        return MPoly._wrap({k: c * factor for k, c in self._t.items()})

    def conjugate(self) -> "MPoly":
        """Apply the field automorphism sqrt(3) -> -sqrt(3) coefficientwise."""
        return MPoly._wrap({k: (-c if k & 1 else c) for k, c in self._t.items()})

    # -- display ---------------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                (VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}")
                for i, e in enumerate(exps) if e
            )
            coeff = str(c)
            if mono:
                if coeff == "1":
                    parts.append(mono)
                elif coeff == "-1":
                    parts.append("-" + mono)
                else:
                    parts.append(f"{coeff}*{mono}")
            else:
                parts.append(coeff)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        text = str(self)
        if len(text) > 120:
            text = text[:117] + "..."
        return f"MPoly({text})"


def _to_float(v):
    return v if isinstance(v, (float, complex)) else float(ExtScalar.coerce(v))


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if (max(a) >> (_DEG_SHIFT + 2)) + (max(b) >> (_DEG_SHIFT + 2)) > _MAX_EXP:
        raise OverflowError("total degree exceeds the packed exponent range")
    if len(a) < len(b):
        a, b = b, a
    if len(a) * len(b) >= _INT_PATH_MIN:
        return _mul_terms_int(a, b)
    out: dict = {}
    get = out.get
    a_items = list(a.items())
    for kb, cb in b.items():
        if kb & 1:
            for ka, ca in a_items:
                k = ka + kb
                if k & 2:
                    k -= 2
                    out[k] = get(k, _ZERO) + 3 * ca * cb
                else:
                    out[k] = get(k, _ZERO) + ca * cb
        else:
            for ka, ca in a_items:
                k = ka + kb
                out[k] = get(k, _ZERO) + ca * cb
    return {k: v for k, v in out.items() if v}


# Above this many term pairs the product runs on plain ints over a common
# denominator; int arithmetic is markedly cheaper than mpq in the inner loop.
_INT_PATH_MIN = 4096


def _integerize(t: dict) -> tuple[int, list, list]:
    den = 1
    for c in t.values():
        d = int(c.denominator)
        if d != 1:
            den = lcm(den, d)
    rat, irr = [], []
    for k, c in t.items():
        v = int(c.numerator) * (den // int(c.denominator))
        (irr if k & 1 else rat).append((k & ~1, v))
    return den, rat, irr


def _mul_terms_int(a: dict, b: dict) -> dict:
    da, a0, a1 = _integerize(a)
    db, b0, b1 = _integerize(b)
    out: dict = {}
    get = out.get
    # (a0 + a1 s)(b0 + b1 s) = a0 b0 + 3 a1 b1 + (a0 b1 + a1 b0) s
    for left, right, tag, mult in ((a0, b0, 0, 1), (a1, b1, 0, 3), (a0, b1, 1, 1), (a1, b0, 1, 1)):
        if not left or not right:
            continue
        for kb, cb in right:
            cb *= mult
            kb |= tag
            for ka, ca in left:
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
    den = da * db
    return {k: mpq(v, den) for k, v in out.items() if v}


def div_exact(num: MPoly, den: MPoly) -> MPoly | None:
    """Exact quotient ``num / den`` or ``None`` when ``den`` does not divide ``num``.

    Raises ZeroDivisionError for a zero divisor.
    """
    if not den._t:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num._t:
        return MPoly()
    dt = den._t
    lm = max(k >> 2 for k in dt)
    la = dt.get(lm << 2, _ZERO)
    lb = dt.get((lm << 2) | 1, _ZERO)
    n = la * la - 3 * lb * lb
    ia, ib = la / n, -lb / n
    if not ib and ia == 1 and len(dt) == 1 and lm == 0:
        return num
    den_items = list(dt.items())

    rem = dict(num._t)
    heap = []
    seen = set()
    for k in rem:
        m = k >> 2
        if m not in seen:
            seen.add(m)
            heap.append(-m)
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        m = -heapq.heappop(heap)
        seen.discard(m)
        ra = rem.pop(m << 2, _ZERO)
        rb = rem.pop((m << 2) | 1, _ZERO)
        if not ra and not rb:
            continue
        d = m - lm
        if d < 0 or ((m | _GUARDS) - lm) & _GUARDS != _GUARDS:
            return None
        qa = ra * ia + 3 * rb * ib
        qb = ra * ib + rb * ia
        dk = d << 2
        if qa:
            quot[dk] = qa
        if qb:
            quot[dk | 1] = qb
        for kd, cd in den_items:
            key = dk + kd
            mm = key >> 2
            if mm == m:
                continue  # leading monomial cancels by construction
            base = mm << 2
            if kd & 1:
                # (qa + qb*s) * cd*s = 3*qb*cd + qa*cd*s
                d0, d1 = 3 * qb * cd, qa * cd
            else:
                d0, d1 = qa * cd, qb * cd
            if d0:
                v = rem.get(base, _ZERO) - d0
                if v:
                    rem[base] = v
                else:
                    del rem[base]
            if d1:
                v = rem.get(base | 1, _ZERO) - d1
                if v:
                    rem[base | 1] = v
                else:
                    del rem[base | 1]
            if mm not in seen:
                seen.add(mm)
                heapq.heappush(heap, -mm)
    if rem:
        return None
    return MPoly._wrap(quot)


# -- parsing -----------------------------------------------------------------

_SQRT3_NAMES = ("sqrt3", "s3")


def parse(text: str) -> MPoly:
    """Parse an arithmetic expression into an :class:`MPoly`.

    Accepts ``+ - * / **`` (``^`` too), parentheses, integer literals,
    registered variable names and ``sqrt3``.  Division is allowed by
    constant expressions only.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    return _eval_node(tree.body)


def _eval_node(node) -> MPoly:
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left)
        right = _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant():
                raise ValueError("division by a non-constant expression")
            return left / right.constant_value()
        if isinstance(node.op, ast.Pow):
            if not right.is_constant() or right.constant_value().irr:
                raise ValueError("exponent must be a non-negative integer")
            e = right.constant_value().rat
            if e.denominator != 1 or e < 0:
                raise ValueError("exponent must be a non-negative integer")
            return left ** int(e)
        raise ValueError(f"unsupported operator {type(node.op).__name__}")
    if isinstance(node, ast.UnaryOp):
        operand = _eval_node(node.operand)
        if isinstance(node.op, ast.USub):
            return -operand
        if isinstance(node.op, ast.UAdd):
            return operand
        raise ValueError("unsupported unary operator")
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return MPoly.const(node.value)
    if isinstance(node, ast.Name):
        if node.id in _SQRT3_NAMES:
            return MPoly.const(ExtScalar.sqrt3())
        return MPoly.var(node.id)
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")

