"""
Self-centralizing subgroups in two small groups
===============================================

Q8 lies in the class: each of its non-abelian subgroups (only Q8 itself)
contains its own centralizer.  C2 x S3 does not, because the S3 factor is
centralized by the outside involution.
"""

from selfcent import families
from selfcent.core import direct_product
from selfcent.membership import check_witness, cross_check

# build the two groups as dense Cayley tables
q8 = families.generalized_quaternion(8)
d12 = direct_product(families.cyclic(2), families.symmetric(3), "D12")
print(q8, d12)

# every applicable method runs, and they must all agree
for g in (q8, d12):
    cc = cross_check(g)
    print(f"{g.name}: {cc.verdict}   timings (us): {cc.timings}")

# a negative verdict carries a witness (H, z) that anyone can re-check
h, z = cross_check(d12).reports["pairs"].witness
print("witness subgroup:", h.elements, " centralizing element:", z)
print("re-checked from the raw table:", check_witness(d12, h.elements, z))
