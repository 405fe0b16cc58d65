"""Cohomology tables, supernatural tables and the corner peeling algorithm.

A table is a finite window ``d_min <= d <= d_max`` of the values
``gamma[i, d]`` (row ``i`` is cohomological degree, ``d`` the twist).
Everything outside the window reads as zero, so callers must make the window
wide enough to witness where rows stop.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import NamedTuple

from .diagrams import PureDiagram, pure_diagram
from .errors import InvalidPattern, NotInCone, NotStrictlyDecreasing, RangeTooSmall, TruncatedTable
from .fan import pairing


def root_sequence(z) -> tuple[int, ...]:
    """Validate a strictly decreasing root sequence (may be empty)."""
    z = tuple(int(x) for x in z)
    if any(x <= y for x, y in zip(z, z[1:])):
        raise NotStrictlyDecreasing(f"root sequence {z} is not strictly decreasing")
    return z


def roots_leq(w, z) -> bool:
    """``w <= z`` with missing trailing roots read as ``-inf``."""
    return len(w) <= len(z) and all(x <= y for x, y in zip(w, z))


class CohomologyTable:
    """Immutable sparse table ``(row, twist) -> Fraction`` over a finite twist range."""

    __slots__ = ("_entries", "nrows", "d_min", "d_max")

    def __init__(self, entries: Mapping | None = None, nrows: int | None = None, d_min: int = 0, d_max: int = 0):
        d_min, d_max = int(d_min), int(d_max)
        if d_min > d_max:
            raise ValueError(f"empty twist range [{d_min},{d_max}]")
        data = {}
        for (i, d), v in (entries or {}).items():
            i, d, v = int(i), int(d), Fraction(v)
            if not v:
                continue
            if i < 0 or not d_min <= d <= d_max:
                raise ValueError(f"entry ({i},{d}) outside rows >= 0 and range [{d_min},{d_max}]")
            data[(i, d)] = v
        top = max((i for i, _ in data), default=-1) + 1
        if nrows is None:
            nrows = top
        elif nrows < top:
            raise ValueError(f"entry in row {top - 1} but only {nrows} rows declared")
        self._entries = data
        self.nrows = nrows
        self.d_min = d_min
        self.d_max = d_max

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def items(self):
        return sorted(self._entries.items())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return (self._entries, self.d_min, self.d_max) == (other._entries, other.d_min, other.d_max)

    def __hash__(self):
        return hash((frozenset(self._entries.items()), self.d_min, self.d_max))

    def __repr__(self):
        return f"CohomologyTable({dict(self.items())}, nrows={self.nrows}, range=[{self.d_min},{self.d_max}])"

    def _combine(self, other, sign):
        if (self.d_min, self.d_max) != (other.d_min, other.d_max):
            raise ValueError("tables have different twist ranges")
        data = dict(self._entries)
        for k, v in other._entries.items():
            data[k] = data.get(k, 0) + sign * v
        return CohomologyTable(data, max(self.nrows, other.nrows), self.d_min, self.d_max)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, q):
        q = Fraction(q)
        return CohomologyTable({k: q * v for k, v in self._entries.items()}, self.nrows, self.d_min, self.d_max)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._entries

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._entries.values())

    def row(self, i: int) -> dict[int, Fraction]:
        return {d: v for (k, d), v in self._entries.items() if k == i}

    def twists(self) -> range:
        return range(self.d_min, self.d_max + 1)


def dim_table(gamma: CohomologyTable) -> int:
    """Largest row index with a nonzero entry, ``-1`` for the zero table."""
    return max((i for (i, _), _ in gamma.items()), default=-1)


def _band_row(z, d):
    # row i with z_i > d > z_{i+1}, or None when d is a root
    if d in z:
        return None
    return sum(1 for x in z if x > d)


def supernatural_table(z, d_min: int, d_max: int, normalization: str = "canonical", nrows: int | None = None) -> CohomologyTable:
    """The supernatural table with root sequence ``z`` on ``[d_min, d_max]``.

    ``"canonical"`` gives ``prod |d - z_k| / s!`` (``s = len(z)``) in the
    row whose band contains ``d``. ``"integral"`` rescales the same values
    to coprime integers.

    >>> t = supernatural_table((1, -3), -6, 6, "integral")
    >>> [t[2, d] for d in (-6, -5, -4)]
    [Fraction(21, 1), Fraction(12, 1), Fraction(5, 1)]
    """
    z = root_sequence(z)
    if normalization not in ("canonical", "integral"):
        raise ValueError(f"unknown normalization {normalization!r}")
    scale = Fraction(1, math.factorial(len(z)))
    entries = {}
    for d in range(d_min, d_max + 1):
        i = _band_row(z, d)
        if i is not None:
            entries[(i, d)] = scale * math.prod(abs(d - x) for x in z)
    if normalization == "integral" and entries:
        den = reduce(math.lcm, (v.denominator for v in entries.values()), 1)
        g = reduce(math.gcd, (int(v * den) for v in entries.values()))
        entries = {k: v * den / g for k, v in entries.items()}
    return CohomologyTable(entries, len(z) + 1 if nrows is None else nrows, d_min, d_max)


def root_sequence_of(gamma: CohomologyTable) -> tuple[int, ...]:
    """Root sequence read off a table from where each row stops.

    ``z_p = max_{i >= p}(last_i + i + 1) - p`` for ``p = 1..dim``, with
    ``last_i`` the largest twist where row ``i`` is nonzero.

    Raises :class:`TruncatedTable` when a row ``>= 1`` is still nonzero at
    ``d_max``, since then its end is not visible.
    """
    s = dim_table(gamma)
    last = {}
    for (i, d), _ in gamma.items():
        if i >= 1:
            if d == gamma.d_max:
                raise TruncatedTable(f"row {i} is nonzero at the top of the range ({d})")
            last[i] = max(last.get(i, d), d)
    z = []
    best = None
    for p in range(s, 0, -1):
        if p in last:
            cand = last[p] + p + 1
            best = cand if best is None else max(best, cand)
        z.append(best - p)
    return tuple(reversed(z))


def corner_positions(z) -> list[tuple[int, int]]:
    """Positions ``(i, z_i - 1)`` (1-based ``i``) where ``z_{i+1} < z_i - 1``."""
    z = root_sequence(z)
    out = []
    for i, zi in enumerate(z, start=1):
        nxt = z[i] if i < len(z) else None
        if nxt is None or nxt < zi - 1:
            out.append((i, zi - 1))
    return out


def corner_peel_coefficient(gamma: CohomologyTable, z) -> Fraction:
    """Largest ``q`` with ``gamma - q * gamma^z`` nonnegative, read at the corners of ``z``."""
    z = root_sequence(z)
    ratios = []
    for i, d in corner_positions(z):
        if not gamma.d_min <= d <= gamma.d_max:
            raise RangeTooSmall(f"corner ({i},{d}) lies outside [{gamma.d_min},{gamma.d_max}]")
        ref = Fraction(math.prod(abs(d - x) for x in z), math.factorial(len(z)))
        ratios.append(gamma[i, d] / ref)
    if not ratios:
        raise RangeTooSmall("root sequence has no corners")
    return min(ratios)


@dataclass(frozen=True)
class TableDecomposition:
    """Peeled terms ``(q, roots)`` plus what is left over and why peeling stopped.

    ``stop_reason`` is ``"zero"`` after an exact decomposition. Otherwise it
    says whether the step budget ran out (``"max_steps"``) or the next step
    would need values outside the window (``"truncated"``).
    """

    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]
    remainder: CohomologyTable
    stop_reason: str

    def resum(self) -> CohomologyTable:
        r = self.remainder
        total = CohomologyTable({}, r.nrows, r.d_min, r.d_max)
        for q, z in self.terms:
            total = total + q * supernatural_table(z, r.d_min, r.d_max)
        return total + r


def decompose_cohomology(gamma: CohomologyTable, max_steps: int) -> TableDecomposition:
    """Peel supernatural tables off ``gamma`` greedily, at most ``max_steps`` times.

    Each step reads the root sequence of the current remainder, subtracts
    the corner coefficient times the canonical supernatural table, and
    checks the new remainder is nonnegative. A coherent sheaf may need
    infinitely many steps; the remainder then carries what is left.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    if not gamma.is_nonnegative():
        raise NotInCone("table has a negative entry")
    terms = []
    rest = gamma
    reason = "max_steps"
    for _ in range(max_steps):
        if rest.is_zero():
            reason = "zero"
            break
        z = root_sequence_of(rest)
        if z:
            corners = corner_positions(z)
            if any(not rest.d_min <= d <= rest.d_max for _, d in corners):
                reason = "truncated"
                break
            if corners[-1][1] == rest.d_min:
                # the deepest row is seen at one twist only, its tail is cut off
                reason = "truncated"
                break
            q = corner_peel_coefficient(rest, z)
        else:
            # only row 0 is left; it must be constant to be a multiple of the empty-root table
            values = {rest[0, d] for d in rest.twists()}
            if len(values) != 1:
                reason = "truncated"
                break
            q = values.pop()
        nxt = rest - q * supernatural_table(z, rest.d_min, rest.d_max, nrows=rest.nrows)
        if not nxt.is_nonnegative():
            raise NotInCone(f"peeling roots {z} leaves a negative entry")
        terms.append((q, z))
        rest = nxt
    else:
        if rest.is_zero():
            reason = "zero"
    return TableDecomposition(tuple(terms), rest, reason)


class GammaFacetFunctional(NamedTuple):
    """The functional ``gamma -> <pi(f), gamma>_{e, tau}`` cutting out a facet of the table fan."""

    pure: PureDiagram
    e: int
    tau: int

    def __call__(self, gamma) -> Fraction:
        return pairing(self.pure.diagram(), gamma, self.e, self.tau)

    evaluate = __call__


def gamma_facet_functional(z_minus, z, z_plus) -> GammaFacetFunctional:
    """Functional for the facet obtained by dropping ``z`` between ``z_minus`` and ``z_plus``.

    The three root sequences must agree except in one position ``i``
    (1-based), where they read ``z_i - 1, z_i, z_i + 1``.

    >>> fn = gamma_facet_functional((0, -4, -5), (0, -3, -5), (0, -2, -5))
    >>> fn.pure.values, fn.e, fn.tau
    ((1, 10, 20, 15, 4), 2, 2)
    """
    zm, z, zp = root_sequence(z_minus), root_sequence(z), root_sequence(z_plus)
    if not len(zm) == len(z) == len(zp):
        raise InvalidPattern("root sequences must have equal length")
    diff = [k for k in range(len(z)) if not zm[k] == z[k] == zp[k]]
    if len(diff) != 1:
        raise InvalidPattern("root sequences must differ in exactly one position")
    k = diff[0]
    if zm[k] != z[k] - 1 or zp[k] != z[k] + 1:
        raise InvalidPattern(f"position {k + 1} must read z-1, z, z+1 along the triple")
    f = tuple(sorted(-x for x in set(zm) | set(z) | set(zp)))
    return GammaFacetFunctional(pure_diagram(f), -z[k] - 1, k + 1)
