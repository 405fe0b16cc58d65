"""Greedy decomposition of Betti diagrams into pure diagrams.

The greedy step subtracts the largest multiple of ``pi(lower bound)`` that
keeps the diagram nonnegative. :func:`oracle_membership` solves the same
problem independently by trying every maximal chain of a window.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import _linalg
from .diagrams import (
    BettiDiagram,
    Order,
    PureDiagram,
    Window,
    compare_deg,
    lower_bound_sequence,
    pure_diagram,
)
from .errors import (
    MismatchedSupport,
    NotInCone,
    NotStrictlyIncreasing,
    SupportOutsideWindow,
    WindowTooLarge,
    ZeroColumnGap,
)
from .fan import count_maximal_chains, maximal_chains

DEFAULT_CHAIN_CAP = 10**6


@dataclass(frozen=True)
class Decomposition:
    """Ordered terms ``(coefficient, degree sequence)`` with ``beta = sum c * pi(d)``."""

    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __init__(self, terms=()):
        object.__setattr__(
            self, "terms", tuple((Fraction(c), tuple(int(x) for x in d)) for c, d in terms)
        )

    def __iter__(self) -> Iterator[tuple[Fraction, tuple[int, ...]]]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def coefficients(self) -> list[Fraction]:
        return [c for c, _ in self.terms]

    @property
    def degree_sequences(self) -> list[tuple[int, ...]]:
        return [d for _, d in self.terms]

    def resum(self) -> BettiDiagram:
        total = BettiDiagram()
        for c, d in self.terms:
            total = total + c * pure_diagram(d).diagram()
        return total

    def is_chain(self) -> bool:
        seqs = self.degree_sequences
        return all(compare_deg(x, y) is Order.LESS for x, y in zip(seqs, seqs[1:]))


@dataclass(frozen=True)
class IntegralityReport:
    denominator_lcm: int
    minimal_integer_multiple: int


def max_peel_coefficient(beta: BettiDiagram, pi: PureDiagram) -> Fraction:
    """Largest ``c`` such that ``beta - c * pi`` stays nonnegative on the support of ``pi``."""
    ratios = []
    for i, (d, v) in enumerate(zip(pi.degrees, pi.values)):
        if beta[i, d] <= 0:
            raise MismatchedSupport(f"diagram is not positive at ({i},{d})")
        ratios.append(beta[i, d] / v)
    return min(ratios)


def _step_cap(beta: BettiDiagram, mode: str) -> int:
    try:
        window = beta.bounding_window()
    except (ZeroColumnGap, NotStrictlyIncreasing):
        # malformed support; the first greedy step will reject it anyway
        return len(beta) + 1
    cap = window.dimension + 1
    if mode == "general":
        # each shortening of the degree sequence is an extra chain step
        cap += window.codim
    return cap


def decompose_betti(beta: BettiDiagram, mode: str = "cm", codim: int | None = None) -> Decomposition:
    """Decompose ``beta`` as a positive combination of pure diagrams along a chain.

    ``mode="cm"`` needs the codimension ``codim``: every degree sequence then
    has length ``codim + 1``. ``mode="general"`` lets sequences shorten along
    the chain (the padded order of :func:`compare_deg`).

    Raises :class:`NotInCone` when some greedy step meets a diagram whose
    lower bound is not a degree sequence, or a negative entry.

    >>> ex = BettiDiagram({(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 1})
    >>> [(str(c), d) for c, d in decompose_betti(ex, codim=2)]
    [('1/2', (0, 2, 3)), ('1/4', (0, 2, 4)), ('1/4', (0, 3, 4))]
    """
    if mode not in ("cm", "general"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "cm" and codim is None:
        raise ValueError("CM mode needs an explicit codimension")
    if beta.is_zero():
        raise NotInCone("empty")
    if not beta.is_nonnegative():
        raise NotInCone("negative entry")
    if mode == "cm" and beta.ncols != codim + 1:
        raise NotInCone(f"diagram has {beta.ncols} columns, expected {codim + 1}")

    cap = _step_cap(beta, mode)
    terms = []
    rest = beta
    while not rest.is_zero():
        if len(terms) >= cap:
            raise NotInCone(f"no decomposition within {cap} steps")
        try:
            d = lower_bound_sequence(rest)
        except (ZeroColumnGap, NotStrictlyIncreasing) as exc:
            raise NotInCone(str(exc)) from exc
        if mode == "cm" and len(d) != codim + 1:
            raise NotInCone(f"lower bound {d} has the wrong length for codimension {codim}")
        if terms and compare_deg(terms[-1][1], d) is not Order.LESS:
            raise NotInCone(f"lower bound {d} does not increase the chain")
        pi = pure_diagram(d)
        c = max_peel_coefficient(rest, pi)
        rest = rest - c * pi.diagram()
        if not rest.is_nonnegative():
            raise NotInCone("negative remainder")
        terms.append((c, d))
    return Decomposition(terms)


def verify_decomposition(beta: BettiDiagram, dec: Decomposition) -> bool:
    """True when ``dec`` is a positive chain combination resumming to ``beta`` exactly."""
    return all(c > 0 for c in dec.coefficients) and dec.is_chain() and dec.resum() == beta


def integrality_report(dec: Decomposition) -> IntegralityReport:
    m = reduce(math.lcm, (c.denominator for c in dec.coefficients), 1)
    return IntegralityReport(denominator_lcm=m, minimal_integer_multiple=m)


def _chain_cap(cap):
    if cap is not None:
        return cap
    env = os.environ.get("PUREDEC_CHAIN_CAP")
    return int(env) if env else DEFAULT_CHAIN_CAP


def oracle_membership(beta: BettiDiagram, window: Window, chain_cap: int | None = None) -> Decomposition | None:
    """Find the chain decomposition of ``beta`` by brute force over maximal chains.

    For each maximal chain of ``window`` the coordinates of ``beta`` in the
    basis of its pure diagrams are solved for exactly. The first chain with
    all coordinates nonnegative wins (zeros dropped). ``None`` means
    ``beta`` is outside the cone, either off the Herzog-Kuehl subspace or
    with a negative coordinate in every chain.

    The chain count is bounded by ``chain_cap`` (or ``PUREDEC_CHAIN_CAP``,
    default one million) and :class:`WindowTooLarge` is raised beyond it.
    """
    if not window.contains_diagram(beta):
        raise SupportOutsideWindow("diagram is not supported in the window")
    cap = _chain_cap(chain_cap)
    n = count_maximal_chains(window.a, window.b)
    if n > cap:
        raise WindowTooLarge(f"{n} maximal chains exceed the cap {cap}")

    positions = window.positions()
    rhs = [beta[p] for p in positions]
    columns = {}
    for chain in maximal_chains(window.a, window.b):
        for d in chain:
            if d not in columns:
                pd = pure_diagram(d).diagram()
                columns[d] = [pd[p] for p in positions]
        matrix = [[columns[d][r] for d in chain] for r in range(len(positions))]
        coords = _linalg.solve(matrix, rhs)
        if coords is None:
            # every chain spans the same subspace, so beta is off it
            return None
        if all(x >= 0 for x in coords):
            return Decomposition((x, d) for x, d in zip(coords, chain) if x)
    return None
