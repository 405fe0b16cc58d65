"""Shared fixtures data and random generators for the test suite."""

import itertools
import random
from fractions import Fraction

from puredec import BettiDiagram, Window, pure_diagram, supernatural_table
from puredec.fan import maximal_chains

# codimension two diagram whose decomposition has three terms
EX11 = BettiDiagram({(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 1})
EX11_TERMS = [
    (Fraction(1, 2), (0, 2, 3)),
    (Fraction(1, 4), (0, 2, 4)),
    (Fraction(1, 4), (0, 3, 4)),
]

# a non Cohen-Macaulay quotient, needs sequences of several lengths
GENERAL = BettiDiagram({(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 2, (3, 5): 1})
GENERAL_TERMS = [
    (Fraction(1, 5), (0, 2, 3, 5)),
    (Fraction(1, 10), (0, 2, 4, 5)),
    (Fraction(1, 6), (0, 3, 4)),
    (Fraction(1, 3), (0, 3)),
]


def two_points_table(d_min=-6, d_max=6):
    """Cohomology of the ideal sheaf of two points in the plane."""
    from math import comb

    from puredec import CohomologyTable

    e = {}
    for d in range(d_min, d_max + 1):
        if d >= 1:
            e[(0, d)] = comb(d + 2, 2) - 2
        if d <= -1:
            e[(1, d)] = 2
        if d == 0:
            e[(1, 0)] = 1
        if d <= -3:
            e[(2, d)] = comb(-d - 1, 2)
    return CohomologyTable(e, 3, d_min, d_max)


def random_window(rng, max_cols=4, max_spread=6, lo=-3, hi=3):
    """A random window with at most ``max_spread`` total slack."""
    while True:
        c = rng.randint(1, max_cols - 1)
        a = sorted(rng.sample(range(lo, hi + c + 2), c + 1))
        budget = rng.randint(0, max_spread)
        b = list(a)
        for _ in range(budget):
            i = rng.randrange(c + 1)
            b[i] += 1
        # keep b strictly increasing
        for i in range(1, c + 1):
            b[i] = max(b[i], b[i - 1] + 1)
        if sum(y - x for x, y in zip(a, b)) <= max_spread:
            return Window(a, b)


def random_chain(rng, window):
    """Walk a uniformly chosen step at each cover; gives some maximal chain."""
    from puredec.fan import _successors

    d = window.a
    chain = [d]
    while d != window.b:
        d = rng.choice(list(_successors(d, window.b)))
        chain.append(d)
    return chain


def random_cone_member(rng, window, max_terms=None):
    """A positive combination of pure diagrams along a subchain that reaches the window corners.

    Returns the diagram and the generating terms, which is its own decomposition.
    """
    chain = random_chain(rng, window)
    k = rng.randint(1, max_terms or len(chain))
    picks = sorted(rng.sample(range(len(chain)), min(k, len(chain))))
    terms = [(Fraction(rng.randint(1, 9), rng.randint(1, 6)), chain[i]) for i in picks]
    beta = BettiDiagram()
    for q, d in terms:
        beta = beta + q * pure_diagram(d).diagram()
    return beta, terms


def perturb(rng, beta):
    """Lower one entry by a positive amount, leaving the Herzog-Kuehl subspace."""
    key = rng.choice(sorted(beta))
    delta = beta[key] * Fraction(rng.randint(1, 5), 4)
    return beta - BettiDiagram({key: delta})


def random_root_chain(rng, span=5, lo=-4, max_len=3):
    """A strictly decreasing chain of root sequences, each coordinatewise below the last."""
    s = rng.randint(1, max_len)
    z = sorted(rng.sample(range(lo, lo + span + 1), s), reverse=True)
    chain = [tuple(z)]
    for _ in range(rng.randint(0, 3)):
        z = list(chain[-1])
        moves = [k for k in range(len(z)) if (k == len(z) - 1 or z[k] - 1 > z[k + 1]) and z[k] - 1 >= lo]
        if len(z) > 1 and rng.random() < 0.2:
            chain.append(tuple(z[:-1]))
            continue
        if not moves:
            break
        k = rng.choice(moves)
        z[k] -= 1
        chain.append(tuple(z))
    return chain


def supernatural_combination(rng, chain, d_min, d_max):
    terms = [(Fraction(rng.randint(1, 9), rng.randint(1, 5)), z) for z in chain]
    nrows = max(len(z) for z in chain) + 1
    total = None
    for q, z in terms:
        t = q * supernatural_table(z, d_min, d_max, nrows=nrows)
        total = t if total is None else total + t
    return total, terms


def all_sequences(lo, hi, length):
    return [tuple(c) for c in itertools.combinations(range(lo, hi + 1), length)]


def all_chains(window):
    return list(maximal_chains(window.a, window.b))


def rng_for(name):
    return random.Random(f"puredec-{name}")
