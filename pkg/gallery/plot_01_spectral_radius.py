"""
Spectral radius of a supertree
==============================

Build a few small supertrees and compute their alpha-spectral radius with
the shifted power iteration. Every iterate gives a lower and an upper bound,
so the number printed comes with its own error bar.
"""

import numpy as np

from alphaspec import alpha_spectral_radius, apply_alpha
from alphaspec.families import star, t_supertree

##############################################################################
# A single 3-edge has radius 1 for every alpha.
H = star(1, 3)
print(alpha_spectral_radius(H, 0.5).rho)

##############################################################################
# For the star with 13 edges and alpha = 0 the radius is the cube root of 13.
H = star(13, 3)
res = alpha_spectral_radius(H, 0.0)
print(res.rho, 13 ** (1 / 3))
print("enclosure", res.lower_bound, res.upper_bound, "after", res.iterations, "iterations")

##############################################################################
# The Perron vector is positive and satisfies A_alpha x = rho x^(k-1).
x = res.eigenvector
print(np.max(np.abs(apply_alpha(H, 0.0, x) - res.rho * x**2)))

##############################################################################
# The enclosure shrinks monotonically; look at the first few steps.
T, _ = t_supertree(1, 2, 9, 3)
res = alpha_spectral_radius(T, 0.5)
for lo, hi in res.history[:5]:
    print(f"{lo:.8f} <= rho <= {hi:.8f}")
print("final", res.rho)
