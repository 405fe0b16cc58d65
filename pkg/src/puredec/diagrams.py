"""Betti diagrams, degree sequences, windows and pure diagrams.

Diagrams are stored sparsely and keyed by ``(i, j)`` where ``i`` is the
homological column and ``j`` the true internal degree, so the Betti number
of ``S(-j)`` in the ``i``-th term of a resolution lives at key ``(i, j)``.
The shifted display (column ``i``, row ``j - i``) is only produced by the
printers in :mod:`puredec.formats`.

All values are :class:`fractions.Fraction`; there are no tolerances.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import NotStrictlyIncreasing, ZeroColumnGap


def degree_sequence(d: Iterable[int]) -> tuple[int, ...]:
    """Validate ``d`` as a strictly increasing integer sequence and return it as a tuple."""
    d = tuple(int(x) for x in d)
    if not d:
        raise NotStrictlyIncreasing("degree sequence must be nonempty")
    if any(x >= y for x, y in zip(d, d[1:])):
        raise NotStrictlyIncreasing(f"degree sequence {d} is not strictly increasing")
    return d


class BettiDiagram(Mapping):
    """Immutable sparse diagram ``(i, j) -> Fraction``.

    Zero values are dropped on construction, so ``len`` counts the nonzero
    positions and missing keys read as zero. Entries may be negative; the
    decomposition routines check nonnegativity themselves.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data = {}
        for (i, j), v in items:
            i, j = int(i), int(j)
            if i < 0:
                raise ValueError(f"negative column index {i}")
            v = Fraction(v)
            if v:
                data[(i, j)] = data.get((i, j), 0) + v
                if not data[(i, j)]:
                    del data[(i, j)]
        self._entries = data
        self._hash = None

    @classmethod
    def from_columns(cls, columns: Mapping[int, Mapping[int, object]]) -> BettiDiagram:
        return cls({(i, j): v for i, col in columns.items() for j, v in col.items()})

    def __getitem__(self, key):
        return self._entries.get(key, Fraction(0))

    def __iter__(self):
        return iter(sorted(self._entries))

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def __eq__(self, other):
        if isinstance(other, BettiDiagram):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in self.items())
        return f"BettiDiagram({{{body}}})"

    def __add__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return BettiDiagram(list(self.items()) + list(other.items()))

    def __neg__(self):
        return BettiDiagram({k: -v for k, v in self.items()})

    def __sub__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self + (-other)

    def __mul__(self, q):
        q = Fraction(q)
        return BettiDiagram({k: q * v for k, v in self.items()})

    __rmul__ = __mul__

    @property
    def ncols(self) -> int:
        """One more than the largest column index carrying a nonzero entry."""
        return max((i for i, _ in self._entries), default=-1) + 1

    def is_zero(self) -> bool:
        return not self._entries

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._entries.values())

    def column(self, i: int) -> dict[int, Fraction]:
        return {j: v for (k, j), v in self.items() if k == i}

    def degree_range(self) -> tuple[int, int]:
        js = [j for _, j in self._entries]
        if not js:
            raise ValueError("zero diagram has no degree range")
        return min(js), max(js)

    def bounding_window(self) -> Window:
        """Smallest window containing the support (columns ``0..ncols-1``).

        Columns must be nonempty and their minima and maxima strictly
        increasing for the result to be a window; otherwise the usual
        sequence validation error is raised.
        """
        cols = range(self.ncols)
        lows, highs = [], []
        for i in cols:
            js = [j for (k, j) in self._entries if k == i]
            if not js:
                raise ZeroColumnGap(f"column {i} is zero")
            lows.append(min(js))
            highs.append(max(js))
        return Window(lows, highs)


@dataclass(frozen=True)
class Window:
    """The box ``a_i <= j <= b_i``, ``0 <= i <= c`` bounding a diagram's support."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __init__(self, a, b):
        a, b = degree_sequence(a), degree_sequence(b)
        if len(a) != len(b):
            raise ValueError("window bounds must have equal length")
        if any(x > y for x, y in zip(a, b)):
            raise ValueError(f"window bound {a} is not <= {b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def codim(self) -> int:
        return len(self.a) - 1

    @property
    def dimension(self) -> int:
        """Dimension of the Herzog-Kuehl subspace: number of pure diagrams on a maximal chain."""
        return 1 + sum(y - x for x, y in zip(self.a, self.b))

    def positions(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.a)) for j in range(self.a[i], self.b[i] + 1)]

    def __contains__(self, key) -> bool:
        i, j = key
        return 0 <= i < len(self.a) and self.a[i] <= j <= self.b[i]

    def contains_diagram(self, beta: Mapping) -> bool:
        return all(key in self for key in beta)

    def contains_sequence(self, d) -> bool:
        return len(d) == len(self.a) and all(x <= y <= z for x, y, z in zip(self.a, d, self.b))


@dataclass(frozen=True)
class PureDiagram:
    """Smallest integral diagram on the ray of a pure resolution of type ``degrees``."""

    degrees: tuple[int, ...]
    values: tuple[int, ...]

    def diagram(self) -> BettiDiagram:
        return BettiDiagram({(i, d): v for i, (d, v) in enumerate(zip(self.degrees, self.values))})

    def __len__(self):
        return len(self.degrees)


def pure_diagram(d: Iterable[int]) -> PureDiagram:
    """Return the pure diagram of type ``d``.

    ``values[i]`` is proportional to ``prod_{k != i} 1/|d_k - d_i|``; the
    common factor is chosen so the values are coprime positive integers.

    >>> pure_diagram((0, 3, 4, 5)).values
    (1, 10, 15, 6)
    """
    d = degree_sequence(d)
    raw = []
    for i, di in enumerate(d):
        denom = math.prod(abs(dk - di) for k, dk in enumerate(d) if k != i)
        raw.append(Fraction(1, denom))
    scale = reduce(math.lcm, (q.denominator for q in raw), 1)
    ints = [int(q * scale) for q in raw]
    g = reduce(math.gcd, ints)
    return PureDiagram(d, tuple(v // g for v in ints))


def hk_residual(beta: Mapping, c: int) -> list[Fraction]:
    """Herzog-Kuehl residuals ``sum_{i,j} (-1)^i j^p beta_ij`` for ``p = 0..c-1``.

    ``0**0`` is taken to be 1, so the first residual is the alternating sum
    of all entries.
    """
    if c < 0:
        raise ValueError("c must be nonnegative")
    out = []
    for p in range(c):
        total = Fraction(0)
        for (i, j), v in beta.items():
            total += (-1) ** i * j**p * v
        out.append(total)
    return out


def lower_bound_sequence(beta: BettiDiagram) -> tuple[int, ...]:
    """Column minima ``d_i = min{j : beta_ij != 0}`` for columns ``0..s``.

    Raises :class:`ZeroColumnGap` when a column before the last nonzero one
    is empty and :class:`NotStrictlyIncreasing` when the minima do not form
    a degree sequence. Either signals a diagram outside the cone.
    """
    if beta.is_zero():
        raise ZeroColumnGap("zero diagram has no lower bound")
    mins: dict[int, int] = {}
    for i, j in beta:
        if i not in mins or j < mins[i]:
            mins[i] = j
    s = max(mins)
    missing = [i for i in range(s + 1) if i not in mins]
    if missing:
        raise ZeroColumnGap(f"column {missing[0]} is zero but column {s} is not")
    return degree_sequence(mins[i] for i in range(s + 1))


class Order(enum.Enum):
    LESS = "<"
    GREATER = ">"
    EQUAL = "="
    INCOMPARABLE = "||"


def _geq(d, e) -> bool:
    # missing trailing entries of the shorter sequence count as +infinity
    return len(d) <= len(e) and all(x >= y for x, y in zip(d, e))


def compare_deg(d, e) -> Order:
    """Compare degree sequences in the partial order padded by ``+inf``.

    A shorter sequence is larger: ``(0, 3) > (0, 3, 4)``.
    """
    d, e = tuple(d), tuple(e)
    if d == e:
        return Order.EQUAL
    if _geq(d, e):
        return Order.GREATER
    if _geq(e, d):
        return Order.LESS
    return Order.INCOMPARABLE
