"""Matrices of polynomials and their exact determinants."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .poly import MPoly, div_exact


class PolyMatrix:
    """Rectangular grid of :class:`MPoly` entries (immutable)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = [tuple(MPoly._coerce(e) for e in row) for row in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = tuple(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map(self, fn: Callable[[MPoly], MPoly]) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in row] for row in self.rows])

    def subs(self, assignment) -> "PolyMatrix":
        return self.map(lambda e: e.subs(assignment))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def minors(self, k: int):
        """Yield ``(row_idx, col_idx, det)`` for every k x k minor."""
        n, m = self.shape
        for ri in combinations(range(n), k):
            for ci in combinations(range(m), k):
                yield ri, ci, det_bareiss(self.submatrix(ri, ci))

    def eval_float(self, assignment) -> np.ndarray:
        return np.array([[e.eval_float(assignment) for e in row] for row in self.rows])

    def det(self) -> MPoly:
        return det_bareiss(self)


def det_bareiss(m: PolyMatrix) -> MPoly:
    """Fraction-free (Bareiss) determinant with full pivoting.

    The pivot at each step is the nonzero entry with the fewest terms in
    the trailing block; every division is exact by Sylvester's identity.
    """
    n, ncols = m.shape
    if n != ncols:
        raise ValueError(f"determinant of non-square {n}x{ncols} matrix")
    if n == 0:
        return MPoly.const(1)
    a = [list(r) for r in m.rows]
    sign = 1
    prev = MPoly.const(1)
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                e = a[i][j]
                if e:
                    size = e.nterms_raw
                    if best is None or size < best[0]:
                        best = (size, i, j)
                        if size == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return MPoly()
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        piv = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                if lead:
                    num = piv * row_i[j] - lead * row_k[j]
                else:
                    num = piv * row_i[j]
                q = div_exact(num, prev)
                if q is None:
                    raise ArithmeticError("Bareiss step not exact; ring arithmetic is broken")
                row_i[j] = q
            row_i[k] = MPoly()
        prev = piv
    out = a[n - 1][n - 1]
    return -out if sign < 0 else out


def det_cofactor(m: PolyMatrix) -> MPoly:
    """Laplace expansion along the first row.  Exponential; small n only."""
    n, ncols = m.shape
    if n != ncols:
        raise ValueError(f"determinant of non-square {n}x{ncols} matrix")
    if n == 0:
        return MPoly.const(1)
    if n == 1:
        return m.rows[0][0]
    total = MPoly()
    for j in range(n):
        e = m.rows[0][j]
        if not e:
            continue
        sub = PolyMatrix([row[:j] + row[j + 1:] for row in m.rows[1:]])
        term = e * det_cofactor(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def polymatrix_det(m: PolyMatrix) -> MPoly:
    return det_bareiss(m)
