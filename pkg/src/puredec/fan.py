"""The simplicial fan of pure diagrams: chains, exterior facets, facet equations, pairing.

Facet equation coefficients are computed in closed form. For a type 3 facet
``facet(f, tau)`` let ``fhat`` be ``-f`` with positions ``tau`` and ``tau+1``
removed and ``p(t) = prod (t - fhat_k)``. The full table is
``H[i, d] = (-1)**i * p(-d)``; the upper equation keeps ``H[i, d]`` only
for ``d < f_plus[i]`` and the lower equation is the rest.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagrams import BettiDiagram, Window, degree_sequence
from .errors import InsufficientTableRange, InvalidFacet, NotStrictlyDecreasing, SupportOutsideWindow


def _successors(d, b):
    # covers of d inside [d, b], in increasing order of the bumped position
    last = len(d) - 1
    for i in range(len(d)):
        if d[i] < b[i] and (i == last or d[i] + 1 < d[i + 1]):
            yield d[:i] + (d[i] + 1,) + d[i + 1 :]


def maximal_chains(a, b) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every maximal chain from ``a`` to ``b`` in the degree-sequence poset.

    Consecutive members differ by +1 in a single coordinate. Chains come out
    in lexicographic order of the bumped positions.
    """
    window = Window(a, b)
    a, b = window.a, window.b

    def walk(chain):
        d = chain[-1]
        if d == b:
            yield tuple(chain)
            return
        for nxt in _successors(d, b):
            chain.append(nxt)
            yield from walk(chain)
            chain.pop()

    yield from walk([a])


def count_maximal_chains(a, b) -> int:
    """Number of maximal chains in ``[a, b]``, by memoised recursion over covers."""
    window = Window(a, b)
    b = window.b

    @lru_cache(maxsize=None)
    def count(d):
        if d == b:
            return 1
        return sum(count(n) for n in _successors(d, b))

    return count(window.a)


class FacetKind(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3


@dataclass(frozen=True)
class FacetDescriptor:
    """An exterior facet ``sigma(D minus {f})``.

    ``f_minus``/``f_plus`` are the chain neighbours of ``f`` (``None`` at an
    end of the chain). ``tau`` is the changed position for type 2 and the
    position of ``r - 1`` in ``f`` for type 3.
    """

    f_minus: tuple[int, ...] | None
    f: tuple[int, ...]
    f_plus: tuple[int, ...] | None
    tau: int | None
    kind: FacetKind


def classify_facet(chain, omitted_index: int) -> FacetDescriptor | None:
    """Classify the facet obtained by dropping ``chain[omitted_index]``.

    Returns ``None`` for interior facets.
    """
    chain = [tuple(d) for d in chain]
    f = chain[omitted_index]
    if omitted_index in (0, len(chain) - 1):
        fm = chain[omitted_index - 1] if omitted_index > 0 else None
        fp = chain[omitted_index + 1] if omitted_index < len(chain) - 1 else None
        return FacetDescriptor(fm, f, fp, None, FacetKind.TYPE1)
    fm, fp = chain[omitted_index - 1], chain[omitted_index + 1]
    diff = [k for k in range(len(f)) if fm[k] != fp[k]]
    if len(diff) == 1:
        return FacetDescriptor(fm, f, fp, diff[0], FacetKind.TYPE2)
    if len(diff) == 2 and diff[1] == diff[0] + 1:
        t = diff[0]
        r = fm[t] + 1
        if fm[t : t + 2] == (r - 1, r) and f[t : t + 2] == (r - 1, r + 1) and fp[t : t + 2] == (r, r + 1):
            return FacetDescriptor(fm, f, fp, t, FacetKind.TYPE3)
    return None


@dataclass(frozen=True)
class CoefficientDiagram:
    """A linear functional on diagrams, given by signed coefficients on a window."""

    entries: BettiDiagram
    window: Window

    def __getitem__(self, key) -> Fraction:
        return self.entries[key]

    def __add__(self, other):
        return CoefficientDiagram(self.entries + other.entries, self.window)

    def __sub__(self, other):
        return CoefficientDiagram(self.entries - other.entries, self.window)

    def __call__(self, beta) -> Fraction:
        return evaluate_functional(self, beta)


def _hk_polynomial(z):
    return lambda t: math.prod(t - zk for zk in z)


def h_table(z, window: Window) -> CoefficientDiagram:
    """The diagram ``H(z)[i, d] = (-1)**i * p(-d)`` with ``p(t) = prod (t - z_k)``, restricted to ``window``."""
    z = tuple(int(x) for x in z)
    if any(x <= y for x, y in zip(z, z[1:])):
        raise NotStrictlyDecreasing(f"{z} is not strictly decreasing")
    p = _hk_polynomial(z)
    return CoefficientDiagram(
        BettiDiagram({(i, d): (-1) ** i * p(-d) for i, d in window.positions()}), window
    )


def facet_neighbours(f, tau: int):
    """Return ``(f_minus, f_plus)`` for a type 3 facet, validating the pattern."""
    f = degree_sequence(f)
    if not 0 <= tau < len(f) - 1:
        raise InvalidFacet(f"tau={tau} out of range for {f}")
    if f[tau + 1] != f[tau] + 2:
        raise InvalidFacet(f"positions {tau},{tau + 1} of {f} do not differ by 2")
    fm = f[: tau + 1] + (f[tau + 1] - 1,) + f[tau + 2 :]
    fp = f[:tau] + (f[tau] + 1,) + f[tau + 1 :]
    return fm, fp


def _fhat(f, tau):
    return tuple(-x for k, x in enumerate(f) if k not in (tau, tau + 1))


def upper_facet_equation(f, tau: int, window: Window) -> CoefficientDiagram:
    """Coefficients of the upper equation of ``facet(f, tau)`` on ``window``.

    Positions ``(i, d)`` keep the value of ``H(fhat)`` when ``d < f_i``
    (``d <= f_tau`` in column ``tau``) and are zero otherwise.
    """
    f = degree_sequence(f)
    facet_neighbours(f, tau)
    if len(window.a) != len(f):
        raise InvalidFacet("window and facet have different numbers of columns")
    p = _hk_polynomial(_fhat(f, tau))
    entries = {}
    for i, d in window.positions():
        keep = d <= f[i] if i == tau else d < f[i]
        if keep:
            entries[(i, d)] = (-1) ** i * p(-d)
    return CoefficientDiagram(BettiDiagram(entries), window)


def lower_facet_equation(f, tau: int, window: Window) -> CoefficientDiagram:
    return h_table(_fhat(degree_sequence(f), tau), window) - upper_facet_equation(f, tau, window)


def evaluate_functional(coeffs: CoefficientDiagram, beta: Mapping) -> Fraction:
    if not coeffs.window.contains_diagram(beta):
        raise SupportOutsideWindow("diagram is not supported inside the functional's window")
    return sum((coeffs[key] * v for key, v in beta.items()), Fraction(0))


def _partial_alternating(gamma, i, d):
    # gamma_{<= i, d}; an empty sum (i < 0) is zero
    return sum(((-1) ** k * gamma[k, d] for k in range(i + 1)), Fraction(0))


def pairing(beta: Mapping, gamma, e: int, tau: int) -> Fraction:
    """The pairing ``<beta, gamma>_{e, tau}`` between a diagram and a cohomology table.

    Column ``i`` of ``beta`` at degree ``d`` is weighted by a partial
    alternating sum of ``gamma`` at twist ``-d``: rows up to ``i`` before
    column ``tau``, rows up to ``i - 2`` after column ``tau + 1``, and in
    columns ``tau``, ``tau + 1`` rows up to ``tau`` or ``tau - 1`` depending
    on which side of ``e`` (resp. ``e + 1``) the degree falls.
    """
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    lo, hi = gamma.d_min, gamma.d_max
    total = Fraction(0)
    for (i, d), v in beta.items():
        if not lo <= -d <= hi:
            raise InsufficientTableRange(f"table range [{lo},{hi}] misses twist {-d}")
        if i < tau:
            rows = i
        elif i == tau:
            rows = tau if d <= e else tau - 1
        elif i == tau + 1:
            rows = tau if d <= e + 1 else tau - 1
        else:
            rows = i - 2
        total += (-1) ** i * v * _partial_alternating(gamma, rows, -d)
    return total
