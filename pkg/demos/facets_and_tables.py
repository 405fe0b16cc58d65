# %% [markdown]
# # Facet equations and supernatural tables
#
# The upper equation of a facet is a signed table of coefficients. Pairing a
# diagram with the supernatural table on the remaining negated degrees gives
# the same number up to a factorial.

# %%
from math import factorial

from puredec import Window, pairing, pure_diagram, supernatural_table, upper_facet_equation
from puredec.formats import render_betti, render_cohtab

window = Window((-4, -3, -2, -1), (0, 1, 2, 3))
upper = upper_facet_equation((-1, 0, 2, 3), 1, window)
print(render_betti(upper.entries, window))

# %%
gamma = supernatural_table((1, -3), -3, 4)
print(render_cohtab(2 * gamma))

# %%
for d in [(-1, 0, 2, 3), (-1, 1, 2, 3), (-2, 0, 1, 3)]:
    beta = pure_diagram(d).diagram()
    print(d, upper(beta), pairing(beta, gamma, 0, 1) * factorial(2))

# %% [markdown]
# Tables also decompose greedily: read the root sequence from where rows
# stop, then peel using the corner values.

# %%
from puredec import decompose_cohomology

mix = 2 * supernatural_table((2, -1), -8, 6) + 3 * supernatural_table((1, -2), -8, 6)
res = decompose_cohomology(mix, 10)
print(res.terms, res.stop_reason)
