# %% [markdown]
# # Decomposing Betti diagrams
#
# A Betti diagram of a Cohen-Macaulay module is a positive rational
# combination of pure diagrams along a chain of degree sequences.
# The greedy algorithm finds that chain one step at a time.

# %%
from fractions import Fraction

from puredec import BettiDiagram, decompose_betti, integrality_report, oracle_membership, pure_diagram
from puredec.formats import render_betti

beta = BettiDiagram({(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 1})
print(render_betti(beta))

# %% [markdown]
# Each step reads the lowest degree in every column, subtracts as much of
# that pure diagram as keeps the entries nonnegative, and repeats.

# %%
dec = decompose_betti(beta, codim=2)
for c, d in dec:
    print(c, d, pure_diagram(d).values)
print("lcm of denominators:", integrality_report(dec).denominator_lcm)

# %% [markdown]
# The brute-force oracle solves the same problem in every chain basis of
# the window and keeps the one with nonnegative coordinates.

# %%
window = beta.bounding_window()
print(window, oracle_membership(beta, window) == dec)

# %% [markdown]
# Modules that are not Cohen-Macaulay need the general mode, where the
# degree sequences may get shorter along the chain.

# %%
general = BettiDiagram({(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 2, (3, 5): 1})
for c, d in decompose_betti(general, mode="general"):
    print(f"{str(c):>5}  {d}")

# %%
# scaling a diagram scales every coefficient
print(decompose_betti(Fraction(3) * beta, codim=2).coefficients)
