"""Finite groups in which every non-abelian subgroup is self-centralizing.

Groups are dense Cayley tables (:class:`GroupTable`) and subgroups are
bit-vectors over them (:class:`SubgroupSet`).  The membership module decides
whether every non-abelian subgroup contains its centralizer, by four
independent criteria.
"""

from .core import (
    GroupTable,
    SubgroupSet,
    center,
    centralizer,
    commutator,
    derived_subgroup,
    direct_product,
    element_order,
    frattini,
    generated_subgroup,
    inverse,
    lower_central_series,
    multiply,
    omega1,
    parse_tbl,
    power,
    power_subgroup,
    read_tbl,
    semidirect_product,
    write_tbl,
)
from .errors import (
    CapabilityError,
    ConstructionError,
    GroupError,
    InconsistentPresentation,
    InputError,
    MethodDisagreement,
)
from .families import (
    KingParameters,
    PcPresentation,
    abelian,
    cyclic,
    dihedral,
    elementary_abelian,
    from_descriptor,
    from_pc_presentation,
    generalized_quaternion,
    heisenberg,
    king_metacyclic,
    maxclass_catalog,
    minimal_nonabelian_K2,
    minimal_nonabelian_K3,
    semidihedral,
    symmetric,
)
from .membership import MembershipReport, cross_check, is_A, is_A_bruteforce, is_A_minimal, is_A_pairs, is_A_recursive
from .structure import exponent, is_maximal_class, is_metacyclic, nilpotency_class, two_step_centralizer
from .subgroups import (
    all_subgroups,
    classify_minimal_nonabelian,
    maximal_subgroups,
    minimal_nonabelian_subgroups,
    two_generated_subgroups,
)
from .theorems import TheoremReport, verify

__all__ = [
    "CapabilityError",
    "ConstructionError",
    "GroupError",
    "GroupTable",
    "InconsistentPresentation",
    "InputError",
    "KingParameters",
    "MembershipReport",
    "MethodDisagreement",
    "PcPresentation",
    "SubgroupSet",
    "TheoremReport",
    "abelian",
    "all_subgroups",
    "center",
    "centralizer",
    "classify_minimal_nonabelian",
    "commutator",
    "cross_check",
    "cyclic",
    "derived_subgroup",
    "dihedral",
    "direct_product",
    "element_order",
    "elementary_abelian",
    "exponent",
    "frattini",
    "from_descriptor",
    "from_pc_presentation",
    "generalized_quaternion",
    "generated_subgroup",
    "heisenberg",
    "inverse",
    "is_A",
    "is_A_bruteforce",
    "is_A_minimal",
    "is_A_pairs",
    "is_A_recursive",
    "is_maximal_class",
    "is_metacyclic",
    "king_metacyclic",
    "lower_central_series",
    "maxclass_catalog",
    "maximal_subgroups",
    "minimal_nonabelian_K2",
    "minimal_nonabelian_K3",
    "minimal_nonabelian_subgroups",
    "multiply",
    "nilpotency_class",
    "omega1",
    "parse_tbl",
    "power",
    "power_subgroup",
    "read_tbl",
    "semidihedral",
    "semidirect_product",
    "symmetric",
    "two_generated_subgroups",
    "two_step_centralizer",
    "verify",
    "write_tbl",
]
