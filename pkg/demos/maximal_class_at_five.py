"""
Maximal class at p = 5
======================

For a 5-group of maximal class the 2-step centralizer P1 decides
membership.  The catalog holds pc-presented groups of order 5^4 and 5^5;
the last order-5^5 entry was found by searching commutator structure
constants and has a non-abelian P1.
"""

from selfcent import families
from selfcent.core import is_abelian_subgroup
from selfcent.errors import ConstructionError
from selfcent.membership import is_A_pairs, is_A_recursive
from selfcent.structure import exponent, p_series, two_step_centralizer

for n in (4, 5):
    for name, g in families.maxclass_catalog(5, n):
        p1 = two_step_centralizer(g)
        abelian = is_abelian_subgroup(g, p1)
        verdict = is_A_recursive(g).verdict
        series = [h.order for h in p_series(g)]
        print(f"{name:24s} exp={exponent(g):3d}  P1 abelian={abelian!s:5s}  {verdict:9s} series={series}")

# the non-abelian-P1 verdict from a second, independent method
name, g = families.maxclass_catalog(5, 5)[-1]
rep = is_A_pairs(g, cap=4096)
h, z = rep.witness
print(f"{name}: pair scan says {rep.verdict}; witness of order {h.order}, z = {z}")

# the textbook metacyclic form a^b = a^(1+p) fails to define a group here
try:
    families.metacyclic(125, 5, 0, 6)
except ConstructionError as exc:
    print("metacyclic(125, 5, 0, 6) rejected:", exc)
