"""Resultants of polynomials with respect to one variable."""

from __future__ import annotations

from .matrix import PolyMatrix, det_bareiss
from .poly import MPoly, div_exact


def sylvester_matrix(f: MPoly, g: MPoly, var: str) -> PolyMatrix:
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m < 0 or n < 0:
        raise ValueError("Sylvester matrix of a zero polynomial")
    size = m + n
    zero = MPoly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return PolyMatrix(rows)


def resultant_sylvester(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Resultant as the Bareiss determinant of the Sylvester matrix."""
    m, n = f.degree(var), g.degree(var)
    if m <= 0 and n <= 0:
        raise ValueError(f"both polynomials have degree 0 in {var}")
    if not f or not g:
        return MPoly()
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    return det_bareiss(sylvester_matrix(f, g, var))


def resultant(f: MPoly, g: MPoly, var: str, normalize: bool = True) -> MPoly:
    """Resultant of ``f`` and ``g`` with respect to ``var``.

    Equal to the Sylvester determinant; computed with the subresultant
    pseudo-remainder sequence, which avoids building the determinant.  With
    ``normalize`` the rational content is removed and the sign fixed (see
    :meth:`MPoly.content_normalize`).
    """
    m, n = f.degree(var), g.degree(var)
    if m <= 0 and n <= 0:
        raise ValueError(f"both polynomials have degree 0 in {var}")
    if not f or not g:
        return MPoly()
    if m == 0:
        res = f ** n
    elif n == 0:
        res = g ** m
    else:
        res = _subresultant(f.coeffs_in(var), g.coeffs_in(var))
    return res.content_normalize() if normalize else res


def _exact(num: MPoly, den: MPoly) -> MPoly:
    q = div_exact(num, den)
    if q is None:
        raise ArithmeticError("inexact division inside the subresultant sequence")
    return q


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b`` on coefficient lists."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        new = [c * lb for c in r[:-1]]
        for k in range(db):
            if b[k]:
                new[shift + k] = new[shift + k] - lr * b[k]
        r = new
        e -= 1
        while r and not r[-1]:
            r.pop()
    if e > 0 and r:
        s = lb ** e
        r = [c * s for c in r]
    return r


def _subresultant(a: list[MPoly], b: list[MPoly]) -> MPoly:
    # Subresultant algorithm for the resultant, without content extraction.
    sign = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            sign = -sign
    g = MPoly.const(1)
    h = MPoly.const(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = _prem(a, b)
        if not r:
            return MPoly()
        a = b
        den = g * h ** delta
        b = [_exact(c, den) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exact(g ** delta, h ** (delta - 1))
        if len(b) - 1 <= 0:
            break
    da = len(a) - 1
    lb = b[0]
    if da == 0:
        res = h
    elif da == 1:
        res = lb
    else:
        res = _exact(lb ** da, h ** (da - 1))
    return -res if sign < 0 else res
