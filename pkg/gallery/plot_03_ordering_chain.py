"""
The eight largest supertrees
============================

With m edges the eight supertrees of largest alpha-spectral radius come in
a fixed order. ``verify_chain`` computes all of them, cross-checks four
against their scalar equations, and reports the smallest gap.
"""

from alphaspec.ordering import verify_chain

##############################################################################
rep = verify_chain(13, 3, 0.5)
for e in rep.entries:
    print(f"{e.name:<10} {e.rho:.12f}  {e.method}")
print("verdict", rep.verdict, "smallest gap", rep.min_margin)

##############################################################################
# Gaps shrink as alpha grows; near alpha = 1 the radius of every graph here
# approaches the maximum degree, so the supertrees sharing a degree class
# become hard to separate numerically.
for alpha in (0.0, 0.5, 0.9, 0.95):
    print(alpha, verify_chain(13, 4, alpha).min_margin)

##############################################################################
# The double stars S_{a, m-1-a} decrease as the two centres balance out.
rep = verify_chain(13, 3, 0.5, include_double_stars=True)
for c in rep.comparisons[8:]:
    print(f"{c.larger} > {c.smaller}  by {c.gap:.3e}")
