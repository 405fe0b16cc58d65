import itertools
from fractions import Fraction
from math import factorial

import networkx as nx
import pytest
import sympy

import _gen
from puredec import (
    BettiDiagram,
    FacetKind,
    Window,
    classify_facet,
    count_maximal_chains,
    evaluate_functional,
    h_table,
    hk_residual,
    lower_facet_equation,
    maximal_chains,
    pairing,
    pure_diagram,
    supernatural_table,
    upper_facet_equation,
)
from puredec.diagrams import Order, compare_deg
from puredec.errors import InsufficientTableRange, InvalidFacet, NotStrictlyDecreasing, SupportOutsideWindow

CHAIN_D = [(0, 1, 3), (0, 2, 3), (0, 2, 4), (0, 3, 4)]
CHAIN_E = [(0, 1, 3), (0, 1, 4), (0, 2, 4), (0, 3, 4)]


def hasse_count(a, b):
    """Independent count: number of paths from a to b in the Hasse diagram."""
    n = len(a)
    nodes = [d for d in itertools.product(*(range(x, y + 1) for x, y in zip(a, b)))
             if all(p < q for p, q in zip(d, d[1:]))]
    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    node_set = set(nodes)
    for d in nodes:
        for i in range(n):
            e = d[:i] + (d[i] + 1,) + d[i + 1:]
            if e in node_set:
                g.add_edge(d, e)
    counts = {tuple(a): 1}
    for d in nx.topological_sort(g):
        for e in g.successors(d):
            counts[e] = counts.get(e, 0) + counts.get(d, 0)
    return counts.get(tuple(b), 0)


def test_chains_small_example():
    chains = list(maximal_chains((0, 1, 3), (0, 3, 4)))
    assert sorted(map(list, chains)) == sorted([CHAIN_D, CHAIN_E])
    assert count_maximal_chains((0, 1, 3), (0, 3, 4)) == 2
    assert list(maximal_chains((0, 2), (0, 2))) == [((0, 2),)]


def test_chain_count_matches_lattice_paths():
    assert count_maximal_chains((0, 1, 2), (1, 2, 3)) == hasse_count((0, 1, 2), (1, 2, 3))
    rng = _gen.rng_for("chains")
    for _ in range(30):
        w = _gen.random_window(rng, max_spread=7)
        chains = list(maximal_chains(w.a, w.b))
        assert len(chains) == count_maximal_chains(w.a, w.b) == hasse_count(w.a, w.b)
        assert len(set(chains)) == len(chains)
        for ch in chains:
            assert len(ch) == w.dimension
            for x, y in zip(ch, ch[1:]):
                assert sum(q - p for p, q in zip(x, y)) == 1 and compare_deg(x, y) is Order.LESS


def test_chain_basis():
    rng = _gen.rng_for("basis")
    for _ in range(20):
        w = _gen.random_window(rng)
        pos = w.positions()
        chain = _gen.random_chain(rng, w)
        cols = [pure_diagram(d).diagram() for d in chain]
        m = sympy.Matrix([[c[p] for c in cols] for p in pos])
        assert m.rank() == w.dimension
        # the Herzog-Kuehl conditions cut out exactly the span
        hk = sympy.Matrix([[(-1) ** i * sympy.Integer(j) ** k for i, j in pos] for k in range(w.codim)])
        assert len(pos) - hk.rank() == w.dimension
        assert (hk * m).is_zero_matrix


def test_classify_examples():
    f = classify_facet(CHAIN_D, 0)
    assert f.kind is FacetKind.TYPE1
    assert classify_facet(CHAIN_D, 3).kind is FacetKind.TYPE1
    assert classify_facet(CHAIN_E, 2).kind is FacetKind.TYPE2
    f = classify_facet(CHAIN_D, 2)
    assert f.kind is FacetKind.TYPE3
    assert (f.f_minus, f.f, f.f_plus, f.tau) == ((0, 2, 3), (0, 2, 4), (0, 3, 4), 1)
    # (0,2,3) between (0,1,3) and (0,2,4): the two bumps are not the type 3 pattern
    assert classify_facet(CHAIN_D, 1) is None


def test_h_table_values():
    w = Window((-4, -3, -2, -1), (0, 1, 2, 3))
    h = h_table((1, -3), w)
    assert h[0, -4] == 21 and h[1, -3] == -12
    for i, d in w.positions():
        if (i + 1, d) in w:
            assert h[i + 1, d] == -h[i, d]
    with pytest.raises(NotStrictlyDecreasing):
        h_table((1, 2), w)


def test_upper_equation_worked_example():
    w = Window((-4, -3, -2, -1), (0, 1, 2, 3))
    u = upper_facet_equation((-1, 0, 2, 3), 1, w)
    true_degree_values = {(0, -4): 21, (1, -3): -12, (1, 0): 3, (2, 1): -4, (3, 2): 3, (0, -1): 0, (2, 2): 0}
    for key, v in true_degree_values.items():
        assert u[key] == v


def test_upper_and_lower_small_window():
    w = Window((0, 1, 2), (1, 3, 4))
    u = upper_facet_equation((0, 2, 4), 1, w)
    assert (u[0, 0], u[0, 1], u[1, 1], u[1, 2], u[1, 3], u[2, 2], u[2, 3], u[2, 4]) == (0, 0, 1, 2, 0, -2, -3, 0)
    low = lower_facet_equation((0, 2, 4), 1, w)
    assert (low[0, 1], low[1, 3], low[2, 4], low[2, 2]) == (-1, 3, -4, 0)
    h = h_table((0,), w)
    assert (u + low).entries == h.entries


def test_facet_errors():
    w = Window((0, 1, 2), (1, 3, 4))
    with pytest.raises(InvalidFacet):
        upper_facet_equation((0, 1, 4), 1, w)
    with pytest.raises(InvalidFacet):
        upper_facet_equation((0, 2, 4), 2, w)
    with pytest.raises(SupportOutsideWindow):
        evaluate_functional(upper_facet_equation((0, 2, 4), 1, w), BettiDiagram({(0, 9): 1}))


def test_evaluation_examples():
    w = Window((0, 1, 2), (1, 3, 4))
    u = upper_facet_equation((0, 2, 4), 1, w)
    assert u(pure_diagram((0, 2, 4)).diagram()) > 0
    assert u(BettiDiagram()) == 0
    w2 = Window((-4, -3, -2, -1), (0, 1, 2, 3))
    assert upper_facet_equation((-1, 0, 2, 3), 1, w2)(pure_diagram((-1, 1, 2, 3)).diagram()) == 0


def type3_facets(w):
    seen = set()
    for chain in maximal_chains(w.a, w.b):
        for k in range(1, len(chain) - 1):
            desc = classify_facet(chain, k)
            if desc and desc.kind is FacetKind.TYPE3 and (desc.f, desc.tau) not in seen:
                seen.add((desc.f, desc.tau))
                yield desc


def test_facet_sign_law_and_hk_span():
    rng = _gen.rng_for("facets")
    checked = 0
    for _ in range(12):
        w = _gen.random_window(rng, max_spread=5)
        seqs = [d for d in itertools.product(*(range(x, y + 1) for x, y in zip(w.a, w.b)))
                if all(p < q for p, q in zip(d, d[1:]))]
        for desc in type3_facets(w):
            u = upper_facet_equation(desc.f, desc.tau, w)
            low = lower_facet_equation(desc.f, desc.tau, w)
            assert u(pure_diagram(desc.f).diagram()) > 0
            for g in seqs:
                pg = pure_diagram(g).diagram()
                if compare_deg(g, desc.f_plus) in (Order.GREATER, Order.EQUAL):
                    assert u(pg) == 0
                if compare_deg(g, desc.f_minus) in (Order.LESS, Order.EQUAL):
                    assert u(pg) == 0
                # H = U + lower kills every Herzog-Kuehl diagram
                assert u(pg) + low(pg) == 0
            checked += 1
    assert checked > 0


def direct_pairing(beta, gamma, e, tau):
    """Block by block sum of the pairing, written out independently."""

    def part(i, d):
        return sum((-1) ** k * gamma[k, d] for k in range(0, i + 1)) if i >= 0 else 0

    total = Fraction(0)
    for (i, d), v in beta.items():
        sign = (-1) ** i
        if i < tau:
            total += sign * v * part(i, -d)
        elif i == tau and d <= e:
            total += sign * v * part(tau, -d)
        elif i == tau:
            total += sign * v * part(tau - 1, -d)
        elif i == tau + 1 and d <= e + 1:
            total += sign * v * part(tau, -d)
        elif i == tau + 1:
            total += sign * v * part(tau - 1, -d)
        else:
            total += sign * v * part(i - 2, -d)
    return total


def test_pairing_reduces_to_upper_equation():
    f, tau = (0, 2, 4), 1
    w = Window((0, 1, 2), (1, 3, 4))
    gamma = supernatural_table((0,), -10, 10)
    u = upper_facet_equation(f, tau, w)
    for d in [(0, 2, 4), (0, 1, 2), (1, 3, 4), (0, 3, 4), (0, 1, 3)]:
        beta = pure_diagram(d).diagram()
        # the canonical table is 1/m! times the one behind the upper equation
        assert pairing(beta, gamma, f[tau], tau) * factorial(1) == u(beta)
    assert pairing(BettiDiagram(), gamma, 2, 1) == 0


def test_pairing_matches_direct_sum_and_upper_equation():
    rng = _gen.rng_for("pairing-u")
    for _ in range(10):
        w = _gen.random_window(rng, max_spread=5)
        for desc in type3_facets(w):
            f, tau = desc.f, desc.tau
            hat = tuple(-x for k, x in enumerate(f) if k not in (tau, tau + 1))
            lo = min(w.a) - 1
            hi = max(w.b) + 1
            gamma = supernatural_table(hat, -hi, -lo)
            u = upper_facet_equation(f, tau, w)
            beta, _ = _gen.random_cone_member(rng, w)
            assert pairing(beta, gamma, f[tau], tau) * factorial(len(hat)) == u(beta)
            for e in range(lo, hi):
                assert pairing(beta, gamma, e, tau) == direct_pairing(beta, gamma, e, tau)


def test_pairing_positive_on_cone():
    rng = _gen.rng_for("positivity")
    for _ in range(200):
        w = _gen.random_window(rng)
        beta, _ = _gen.random_cone_member(rng, w)
        lo, hi = beta.degree_range()
        c = w.codim
        for s in range(c):
            for z in itertools.combinations(range(2, -3, -1), s):
                gamma = supernatural_table(z, -hi, -lo)
                for tau in range(c):
                    for e in range(lo - 1, hi + 1):
                        assert pairing(beta, gamma, e, tau) >= 0


def test_pairing_range_error():
    gamma = supernatural_table((0,), -1, 1)
    with pytest.raises(InsufficientTableRange):
        pairing(pure_diagram((0, 2, 4)).diagram(), gamma, 2, 1)


def test_chain_members_satisfy_hk():
    for d in itertools.chain.from_iterable(maximal_chains((0, 1, 3), (1, 3, 4))):
        assert hk_residual(pure_diagram(d).diagram(), 2) == [0, 0]
