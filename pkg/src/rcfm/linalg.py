"""Exact dense linear algebra over the rationals.

Rank is computed by Bareiss fraction-free elimination on an integer matrix
obtained by clearing denominators row by row.  Nullspaces and particular
solutions come from the same echelon form, back-substituted in Fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = math.lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def bareiss_echelon(rows: Sequence[Sequence], ncols: int | None = None):
    """Fraction-free row echelon form.

    INPUT:
    - ``rows`` -- list of equal-length rows of ints/Fractions
    - ``ncols`` -- column count, needed only when ``rows`` is empty

    OUTPUT:
    - ``(echelon, pivots)`` with integer rows and the pivot column of each
      of the first ``len(pivots)`` rows
    """
    m = _integer_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else (ncols or 0)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[c]
            if f == 0:
                if piv != prev:
                    for k in range(c + 1, ncols):
                        mi[k] = (piv * mi[k]) // prev
                continue
            mr = m[r]
            for k in range(c + 1, ncols):
                mi[k] = (piv * mi[k] - f * mr[k]) // prev
            mi[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(bareiss_echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : rows @ v = 0}``, one vector per free column."""
    ech, pivots = bareiss_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            row = ech[r]
            s = sum((row[k] * v[k] for k in range(c + 1, ncols) if v[k]), Fraction(0))
            v[c] = -s / row[c]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int):
    """Solve ``rows @ x = rhs`` exactly.

    OUTPUT:
    - ``(x, rank_coef, rank_aug)``; ``x`` is a particular solution with free
      variables set to zero, or ``None`` when the system is inconsistent
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, pivots = bareiss_echelon(aug, ncols + 1)
    rank_aug = len(pivots)
    coef_pivots = [c for c in pivots if c < ncols]
    rank_coef = len(coef_pivots)
    if rank_coef < rank_aug:
        return None, rank_coef, rank_aug
    x = [Fraction(0)] * ncols
    for r in range(rank_coef - 1, -1, -1):
        c = pivots[r]
        row = ech[r]
        s = sum((row[k] * x[k] for k in range(c + 1, ncols) if x[k]), Fraction(0))
        x[c] = (row[ncols] - s) / row[c]
    return x, rank_coef, rank_aug
