"""
Degree classes and their maximizers
===================================

Supertrees with m edges are grouped by their non-leaf degrees, which form a
partition of m - 1. In each class the BFS supertree T* has the largest
radius, and majorization between classes orders these maxima.
"""

from alphaspec.families import bfs_supertree, enumerate_degree_classes, enumerate_supertrees
from alphaspec.ordering import (
    is_majorized_by,
    verify_class_maximizer_bruteforce,
    verify_maximizer_bound,
)
from alphaspec.spectral import rho_alpha

##############################################################################
classes = enumerate_degree_classes(6)
for pi in classes:
    print(pi.degrees, rho_alpha(bfs_supertree(pi, 3), 0.0))

##############################################################################
# Majorization compares full degree sequences.
print(is_majorized_by((2, 2, 1, 1), (3, 1, 1, 1)))
print(is_majorized_by((4, 4, 1, 1), (5, 2, 2, 1)), is_majorized_by((5, 2, 2, 1), (4, 4, 1, 1)))

##############################################################################
# For tiny m every supertree can be listed, so T* can be checked directly.
print(len(enumerate_supertrees(5, 3)), "supertrees with 5 edges")
print(verify_class_maximizer_bruteforce(5, 3, 0.5).verdict)

##############################################################################
# Outside six exceptional classes every maximizer sits below T(1,2,m-4).
rep = verify_maximizer_bound(13, 3, 0.5)
print(rep.details)
