import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from selfcent import core, families
from selfcent.core import (
    GroupTable,
    associativity_failure,
    center,
    centralizer,
    commutator,
    derived_subgroup,
    direct_product,
    element_order,
    frattini,
    frattini_generic,
    frattini_pgroup,
    generated_subgroup,
    is_normal,
    is_subgroup,
    lower_central_series,
    multiply,
    naive_associativity_failure,
    omega1,
    parse_tbl,
    power,
    power_subgroup,
    semidirect_product,
)
from selfcent.errors import CapabilityError, ConstructionError, InputError

I, J = 1, 4  # i = a, j = b in <a, b | a^4 = 1, b^2 = a^2, a^b = a^-1>

small_groups = st.sampled_from(
    [
        ("C6", lambda: families.cyclic(6)),
        ("C2xC4", lambda: families.abelian([2, 4])),
        ("S3", lambda: families.symmetric(3)),
        ("Q8", lambda: families.generalized_quaternion(8)),
        ("D8", lambda: families.dihedral(8)),
        ("D12", lambda: direct_product(families.cyclic(2), families.symmetric(3))),
        ("A4", lambda: families.alternating(4)),
        ("Heis3", lambda: families.heisenberg(3)),
        ("SD16", lambda: families.semidihedral(16)),
        ("C3:C4", lambda: families.metacyclic(3, 4, 0, 2)),
    ]
)


# element operations


def test_commutator_of_element_with_itself_is_identity(q8):
    assert all(commutator(q8, x, x) == 0 for x in range(8))


def test_generator_of_c6_has_order_6():
    assert element_order(families.cyclic(6), 1) == 6


def test_q8_commutator_is_the_central_involution(q8):
    c = commutator(q8, I, J)
    assert element_order(q8, c) == 2
    assert center(q8).elements == [0, c]


def test_commutator_convention(q8):
    t = oracles.rows(q8)
    for x in range(8):
        for y in range(8):
            expected = t[t[oracles.inv(t, x)][oracles.inv(t, y)]][t[x][y]]
            assert commutator(q8, x, y) == expected


def test_power_and_multiply(q8):
    assert power(q8, I, 4) == 0
    assert power(q8, I, -1) == q8.inv(I)
    assert multiply(q8, I, 0) == I


@pytest.mark.parametrize("bad", [(8, 0), (0, -1), (0, 99)])
def test_index_out_of_range(q8, bad):
    with pytest.raises(InputError):
        multiply(q8, *bad)


# closure


def test_trivial_generated_subgroup(q8):
    h = generated_subgroup(q8, {0})
    assert h.order == 1 and h.elements == [0]


def test_i_and_j_generate_q8(q8):
    assert generated_subgroup(q8, {I, J}).order == 8


def test_s3_inside_d12(d12):
    # r^2 has order 3 and s is a reflection; both live in the S3 factor
    r2 = next(x for x in range(1, 6) if element_order(d12, x) == 3)
    s = next(x for x in range(1, 6) if element_order(d12, x) == 2)
    h = generated_subgroup(d12, {r2, s})
    assert h.order == 6
    assert h.generators == tuple(sorted({r2, s}))
    assert not core.is_abelian_subgroup(d12, h)


def test_generated_subgroup_rejects_empty(q8):
    with pytest.raises(InputError):
        generated_subgroup(q8, [])


@settings(max_examples=60, deadline=None)
@given(small_groups, st.lists(st.integers(0, 10**6), min_size=1, max_size=3))
def test_closure_matches_oracle(named, raw):
    g = named[1]()
    gens = [x % g.order for x in raw]
    h = generated_subgroup(g, gens)
    assert set(h.elements) == oracles.closure(oracles.rows(g), gens)
    assert g.order % h.order == 0
    assert is_subgroup(g, h)


# centralizer and center


def test_centralizer_of_whole_group_is_center(q8):
    assert centralizer(q8, q8.whole()).bits == center(q8).bits


def test_centralizer_of_cyclic_subgroup_in_q8(q8):
    h = generated_subgroup(q8, {I})
    assert centralizer(q8, h).bits == h.bits
    assert h.order == 4


def test_centralizer_of_s3_in_d12_escapes(d12):
    s3 = generated_subgroup(d12, range(6))
    c = centralizer(d12, s3)
    assert c.order == 2
    assert not c <= s3
    assert c.elements == [0, 6]


def test_center_of_abelian_group_is_everything():
    g = families.abelian([4, 2])
    assert center(g).order == 8


def test_center_of_q8():
    assert center(families.generalized_quaternion(8)).order == 2


def test_center_of_k2_3_2_1():
    g = families.minimal_nonabelian_K2(3, 2, 1)
    a, b = 1, 9
    z = center(g)
    assert z.order == 3
    assert z.bits == generated_subgroup(g, {power(g, a, 3), power(g, b, 3)}).bits


@settings(max_examples=40, deadline=None)
@given(small_groups, st.lists(st.integers(0, 10**6), min_size=1, max_size=3))
def test_centralizer_properties(named, raw):
    g = named[1]()
    t = oracles.rows(g)
    h = generated_subgroup(g, [x % g.order for x in raw])
    c = centralizer(g, h)
    assert set(c.elements) == oracles.centralizer(t, h.elements)
    assert is_subgroup(g, c)
    # abelian exactly when contained in its own centralizer
    assert (h <= c) == oracles.is_abelian(t, h.elements)


@settings(max_examples=20, deadline=None)
@given(small_groups)
def test_center_is_intersection_over_generators(named):
    g = named[1]()
    assert set(center(g).elements) == oracles.center(oracles.rows(g))


# derived, power, omega, Frattini


def test_derived_subgroup_examples(q8):
    assert derived_subgroup(families.abelian([3, 3])).order == 1
    d = derived_subgroup(q8)
    assert d.bits == center(q8).bits and d.order == 2


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2)])
def test_derived_subgroup_of_k3_has_order_p(m, n):
    g = families.minimal_nonabelian_K3(3, m, n)
    d = derived_subgroup(g)
    assert d.order == 3
    assert d.bits == generated_subgroup(g, {1}).bits  # c has index 1


def test_power_subgroup_examples(q8):
    assert power_subgroup(families.elementary_abelian(2, 3), None, 2).order == 1
    c8 = families.cyclic(8)
    sq = power_subgroup(c8, None, 2)
    assert sq.order == 4 and sq.bits == generated_subgroup(c8, {2}).bits
    assert power_subgroup(q8, None, 2).bits == center(q8).bits


def test_omega1_examples(q8):
    e = families.elementary_abelian(3, 2)
    assert omega1(e, None, 3).order == 9
    assert omega1(families.cyclic(4), None, 2).order == 2
    assert omega1(q8, None, 2).bits == center(q8).bits


def test_frattini_examples():
    assert frattini(families.elementary_abelian(2, 3)).order == 1
    c8 = families.cyclic(8)
    assert frattini(c8).bits == generated_subgroup(c8, {2}).bits
    k2 = families.minimal_nonabelian_K2(3, 2, 1)
    assert frattini(k2).bits == center(k2).bits


@pytest.mark.parametrize(
    "g",
    [
        families.generalized_quaternion(16),
        families.dihedral(32),
        families.heisenberg(3),
        families.minimal_nonabelian_K3(2, 2, 1),
        families.abelian([4, 2, 2]),
        families.semidihedral(16),
    ],
    ids=lambda g: g.name,
)
def test_frattini_fast_path_matches_maximal_intersection(g):
    p = core.prime_power(g.order)[0]
    assert frattini_pgroup(g, g.whole(), p).bits == frattini_generic(g).bits


@settings(max_examples=20, deadline=None)
@given(small_groups)
def test_frattini_matches_oracle(named):
    g = named[1]()
    assert set(frattini(g).elements) == oracles.frattini(oracles.rows(g))


def test_frattini_generic_respects_cap():
    g = families.symmetric(4)
    with pytest.raises(CapabilityError):
        frattini(g, cap=12)


# lower central series


def test_lower_central_series_examples(q8):
    assert [h.order for h in lower_central_series(families.cyclic(5))] == [5, 1]
    assert [h.order for h in lower_central_series(q8)] == [8, 2, 1]
    # S3 stabilises at A3 and is not nilpotent
    assert [h.order for h in lower_central_series(families.symmetric(3))] == [6, 3]


@settings(max_examples=20, deadline=None)
@given(small_groups)
def test_lower_central_series_descends_through_normal_subgroups(named):
    g = named[1]()
    series = lower_central_series(g)
    for a, b in zip(series, series[1:]):
        assert b <= a and b.order < a.order
    assert all(is_normal(g, h) for h in series)
    assert series[1].bits == derived_subgroup(g).bits


# products


def test_direct_product_of_c2_and_c3_is_cyclic():
    g = direct_product(families.cyclic(2), families.cyclic(3))
    assert g.order == 6 and int(g.element_orders.max()) == 6


def test_semidirect_inversion_gives_s3():
    c3, c2 = families.cyclic(3), families.cyclic(2)
    g = semidirect_product(c3, c2, families.inversion_action(c3, c2))
    assert g.order == 6 and not g.is_abelian()
    assert naive_associativity_failure(g.table) is None


def test_semidirect_rejects_non_automorphism():
    c4, c2 = families.cyclic(4), families.cyclic(2)
    with pytest.raises(ConstructionError, match="automorphism"):
        semidirect_product(c4, c2, [[0, 1, 2, 3], [0, 2, 1, 3]])


def test_semidirect_rejects_non_homomorphism():
    c3, c3b = families.cyclic(3), families.cyclic(3)
    inv = [0, 2, 1]
    with pytest.raises(ConstructionError, match="homomorphism"):
        semidirect_product(c3, c3b, [[0, 1, 2], inv, inv])


def test_products_are_associative(d12):
    assert oracles.is_associative(oracles.rows(d12))


# validation and the .tbl format


def test_associativity_light_test_agrees_with_naive():
    # a Latin square with identity 0 that is not associative (a loop of order 5)
    t = np.array(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
    )
    assert naive_associativity_failure(t) is not None
    assert associativity_failure(t) is not None
    with pytest.raises(ConstructionError):
        GroupTable(t)


@settings(max_examples=20, deadline=None)
@given(small_groups)
def test_light_test_accepts_groups(named):
    g = named[1]()
    assert associativity_failure(g.table) is None


def test_tbl_round_trip_is_bit_exact(q8, tmp_path):
    path = tmp_path / "q8.tbl"
    core.write_tbl(q8, path)
    text = path.read_text()
    assert text.splitlines()[0] == "8" and len(text.splitlines()) == 9
    g = core.read_tbl(path)
    assert np.array_equal(g.table, q8.table)
    assert core.format_tbl(g) == text


@pytest.mark.parametrize(
    "text",
    ["", "3\n0 1 2\n1 2 0\n", "2\n0 1\n1 x\n", "2\n1 0\n0 1\n", "3\n0 1 2\n1 0 2\n2 2 0\n", "2\n0 1 1\n1 0\n"],
    ids=["empty", "truncated", "non-integer", "identity-not-0", "not-latin", "ragged"],
)
def test_parse_tbl_rejects_bad_input(text):
    with pytest.raises((InputError, ConstructionError)):
        parse_tbl(text)


def test_parse_tbl_rejects_non_associative():
    text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"
    with pytest.raises(ConstructionError, match="associative"):
        parse_tbl(text)


def test_order_cap():
    with pytest.raises(CapabilityError):
        parse_tbl(core.format_tbl(families.cyclic(10)), max_order=8)


def test_subgroup_wrapper_checks_lagrange(q8):
    with pytest.raises(InputError):
        q8.subgroup(0b111)


def test_tables_pickle(q8):
    import pickle

    g = pickle.loads(pickle.dumps(q8))
    assert np.array_equal(g.table, q8.table) and g.name == "Q8"
