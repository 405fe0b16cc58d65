"""Ranks of the equivariant pure resolutions, via Schur module dimensions.

Only the ranks are computed. Both constructions are indexed by the gaps
``e`` of a degree sequence starting at 0.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .diagrams import degree_sequence
from .errors import TooManyParts


def _partition(parts) -> tuple[int, ...]:
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def schur_dimension(lam, n: int) -> int:
    """Dimension of the Schur module ``S_lam(k^n)`` by the Weyl dimension formula.

    >>> schur_dimension((3, 1), 3), schur_dimension((3, 1, 1), 3)
    (15, 6)
    """
    lam = _partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if len(lam) > n:
        raise TooManyParts(f"{lam} has more than {n} parts")
    lam = lam + (0,) * (n - len(lam))
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(dim)


def conjugate(lam) -> tuple[int, ...]:
    lam = _partition(lam)
    return tuple(sum(1 for x in lam if x > k) for k in range(lam[0] if lam else 0))


def _gaps(d):
    d = degree_sequence(d)
    return [y - x for x, y in zip(d, d[1:])]


def _alpha(e, i):
    # alpha(e, i) = (lam_1 + e_1, ..., lam_i + e_i, lam_{i+1}, ..., lam_n), lam_k = sum_{j>k}(e_j - 1)
    n = len(e)
    lam = [sum(x - 1 for x in e[k + 1 :]) for k in range(n)]
    return tuple(lam[k] + e[k] if k < i else lam[k] for k in range(n))


def equivariant_betti(e) -> list[int]:
    """Ranks of the GL(n)-equivariant pure resolution with degree gaps ``e``.

    The resolution has type ``(0, e_1, e_1 + e_2, ...)`` on ``n = len(e)``
    variables and its ``i``-th term is ``S_alpha(e, i)(k^n)``.

    >>> equivariant_betti((3, 1, 1))
    [1, 10, 15, 6]
    """
    e = [int(x) for x in e]
    if not e or any(x < 1 for x in e):
        raise ValueError("gaps must be positive integers")
    n = len(e)
    return [schur_dimension(_alpha(e, i), n) for i in range(n + 1)]


def generic_matrix_betti(d) -> list[int]:
    """Ranks of the pure resolution of type ``d`` built from a generic ``F x G`` matrix.

    With ``c = len(d) - 1`` and ``r = d_c``, term ``i`` has rank
    ``dim S_{alpha(e,i)'}(k^{r-c+1}) * binom(r, d_i)`` where ``'`` is the
    conjugate partition.

    >>> generic_matrix_betti((0, 3, 5))
    [4, 10, 6]
    """
    d = degree_sequence(d)
    if len(d) < 2:
        raise ValueError("need at least two degrees")
    if d[0] != 0:
        d = tuple(x - d[0] for x in d)
    e = _gaps(d)
    c, r = len(e), d[-1]
    fdim = r - c + 1
    return [schur_dimension(conjugate(_alpha(e, i)), fdim) * math.comb(r, d[i]) for i in range(c + 1)]
