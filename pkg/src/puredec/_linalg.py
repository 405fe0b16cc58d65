"""Gaussian elimination over the rationals, just enough for chain bases."""

from __future__ import annotations

from fractions import Fraction


def _echelon(rows):
    """Row-reduce ``rows`` in place; return the list of pivot columns."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, nrows) if rows[k][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(nrows):
            if k != r and rows[k][col]:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(matrix) -> int:
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    return len(_echelon(rows))


def solve(matrix, rhs):
    """Return the unique ``x`` with ``matrix @ x == rhs``, or ``None``.

    ``None`` covers both an inconsistent system and a rank-deficient one.
    """
    ncols = len(matrix[0]) if matrix else 0
    rows = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(matrix, rhs)]
    pivots = _echelon(rows)
    if ncols in pivots or len(pivots) != ncols:
        return None
    return [rows[k][-1] for k in range(ncols)]
