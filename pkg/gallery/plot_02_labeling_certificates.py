"""
Weighted incidence certificates
===============================

A weighted incidence matrix B certifies how the spectral radius of a
hypergraph compares to a reference value rho. When every vertex sum equals
rho and every edge product equals (1 - alpha)^k, rho is the spectral radius.
When the sums fall short (or overshoot) the radius is smaller (or larger).
"""

from alphaspec.families import triple_star
from alphaspec.labeling import (
    build_lemma_certificate,
    check_normal,
    labeling_from_eigenvector,
)
from alphaspec.spectral import alpha_spectral_radius, rho_alpha

##############################################################################
# Any Perron vector yields a normal labeling.
H, roles = triple_star(1, 9, 1, 3)
res = alpha_spectral_radius(H, 0.3)
rho, B = labeling_from_eigenvector(H, 0.3, res.eigenvector)
report = check_normal(H, 0.3, rho, B)
print(report.classification, report.max_sum_violation)

##############################################################################
# The explicit certificates compare two supertrees without computing the
# second radius. Here T(1,2,9) is labelled against rho of S_{4,8}.
cert = build_lemma_certificate("L43-T12m4-super", 13, 3, 0.25)
print(cert.check().classification)
print("designated vertex sum", cert.check().vertex_sums[cert.designated_vertex], "vs", cert.rho_ref)

##############################################################################
# The power method agrees with the conclusion.
print(rho_alpha(cert.graph, 0.25) - cert.rho_ref)
