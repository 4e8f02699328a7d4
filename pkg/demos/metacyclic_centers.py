"""
Centers of metacyclic p-groups
==============================

Walk the reduced parameter grid of metacyclic p-groups, build each group
and compare its computed center with the closed form ``<a^(p^u), b^(p^v)>``.
"""

import collections

from selfcent import families
from selfcent.core import center
from selfcent.membership import is_A_recursive

grid = families.king_parameter_grid([2, 3, 5], 625)
print(f"{len(grid)} valid parameter tuples of order <= 625")

by_prime = collections.Counter()
mismatches = []
for kp in grid:
    g, (u, v) = families.king_metacyclic(kp)
    # the predicted center comes from the parameters alone
    predicted = families.king_predicted_center(g, kp)
    if center(g).bits != predicted.bits or not is_A_recursive(g).in_A:
        mismatches.append(kp.label())
    by_prime[kp.p] += 1

print("groups per prime:", dict(by_prime))
print("mismatches:", mismatches or "none")

# a closer look at one group: the modular group of order 16
kp = families.KingParameters(2, 3, 1, 0, 1)
g, uv = families.king_metacyclic(kp)
print(kp.label(), "center exponents", uv, "center order", center(g).order)
