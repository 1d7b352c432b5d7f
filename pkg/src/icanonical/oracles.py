"""Independent cross-checks that share no code path with the fast routines.

Everything here works on reduced :class:`RatFunc` coefficients only; no
common denominators, no monic numerators, no back-substitution shortcuts.
"""
from __future__ import annotations

from typing import Sequence

from .idot import CBIndex, basis_index, cb_poly
from .laurent import RatFunc

__all__ = ["gauss_solve", "gauss_expand_powers"]


def gauss_solve(matrix: Sequence[Sequence[RatFunc]], rhs: Sequence[Sequence[RatFunc]]) -> list[list[RatFunc]]:
    """Solve ``matrix @ X = rhs`` over Q(v) by Gauss-Jordan elimination.

    ``rhs`` is given column-major-free: ``rhs[i]`` is row ``i`` of the
    right-hand side block.  Raises ``ValueError`` for a singular matrix.
    """
    n = len(matrix)
    rows = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    width = len(rows[0]) if rows else 0
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            raise ValueError("singular matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r == col or rows[r][col].is_zero():
                continue
            f = rows[r][col]
            rows[r] = [rows[r][k] - f * rows[col][k] for k in range(width)]
    return [row[n:] for row in rows]


def gauss_expand_powers(summand: int, max_power: int) -> list[dict[CBIndex, RatFunc]]:
    """Canonical basis coordinates of t^0, ..., t^max_power in ``summand``.

    Column ``n`` of the coefficient matrix holds the t-coefficients of the
    basis element of degree ``n``; the right-hand side is the identity.
    """
    size = max_power + 1
    labels = [basis_index(summand, n) for n in range(size)]
    cols = [cb_poly(idx).coeffs for idx in labels]
    matrix = [[cols[j][i] if i < len(cols[j]) else RatFunc() for j in range(size)] for i in range(size)]
    ident = [[RatFunc(1) if i == j else RatFunc() for j in range(size)] for i in range(size)]
    sol = gauss_solve(matrix, ident)
    out = []
    for power in range(size):
        out.append({labels[i]: sol[i][power] for i in range(size) if not sol[i][power].is_zero()})
    return out
