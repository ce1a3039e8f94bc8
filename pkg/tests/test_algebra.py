import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schemoids.algebra import (AlgebraError, alpha_K, algebra_iso_bruteforce, bose_mesner, category_algebra,
                               center, check_algebra, hochschild_cohomology, identity_map, invariants,
                               make_algebra, quotient_category_algebra, quotient_linear_algebra,
                               require_t_i_ii, sr_pullbacks, stanley_reisner_mod_squares)
from schemoids.constructors import (SimplicialComplex, complete_graph_category, cyclic_table,
                                    group_schemoid, hamming_schemoid, powerset_difference, full_powerset,
                                    small_groups, truncated_len)
from schemoids.core import GuardError, SchemoidError, validate_schemoid
from schemoids.fields import GF, QQ
from schemoids.fincat import group_category, interval_category

from oracles import conjugacy_class_count


def test_h22_bose_mesner_table():
    A = bose_mesner(hamming_schemoid(2), QQ)
    assert A.dim == 3 and A.unit == [1, 0, 0]
    assert A.mult[(1, 1)] == {0: 2, 2: 2}
    assert A.mult[(1, 2)] == {1: 1} and A.mult[(2, 2)] == {0: 1}


@pytest.mark.parametrize("S", [hamming_schemoid(3), group_schemoid(small_groups()["S3"]), truncated_len(2),
                               powerset_difference(full_powerset(3))], ids=["H3", "S3", "len2", "P3"])
@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)], ids=lambda F: F.name)
def test_bose_mesner_is_associative(S, F):
    assert check_algebra(bose_mesner(S, F)) == []


def test_bose_mesner_without_unit():
    T = validate_schemoid(hamming_schemoid(1).cat, [0, 0, 0, 0])
    A = bose_mesner(T, QQ)
    assert A.unit is None
    assert A.mult[(0, 0)] == {0: 2}


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_group_algebra_center_is_class_count(name):
    table = small_groups()[name]
    A = category_algebra(group_category(table), QQ)
    assert center(A)[0] == conjugacy_class_count(table)


def test_matrix_algebra_center():
    A = category_algebra(complete_graph_category(4), QQ)
    assert A.dim == 16 and center(A)[0] == 1


def test_quotient_linear_algebra_truncated():
    A = quotient_linear_algebra(truncated_len(2), QQ)
    # k[x]/(x^3) with x = len1
    assert A.mult[(1, 1)] == {2: 1}
    assert (1, 2) not in A.mult and (2, 2) not in A.mult
    assert center(A)[0] == 3


def test_quotient_linear_needs_t_ii():
    T = validate_schemoid(hamming_schemoid(1).cat, [0, 0, 0, 0])
    with pytest.raises(SchemoidError):
        require_t_i_ii(T)


@pytest.mark.parametrize("name", ["Z2", "Z3", "S3", "D4"])
def test_quotient_algebras_agree_for_groups(name):
    S = group_schemoid(small_groups()[name])
    A, B = bose_mesner(S, QQ), quotient_linear_algebra(S, QQ)
    assert A.mult == B.mult
    C = quotient_category_algebra(S, QQ)
    assert C.dim == A.dim and check_algebra(C) == []


def test_stanley_reisner_relations():
    K = SimplicialComplex.generated(3, [[0, 1], [1, 2]])
    SR = stanley_reisner_mod_squares(K, QQ)
    lab = {SR.label(i): i for i in range(SR.dim)}
    x0, x1, x2 = lab["x0"], lab["x1"], lab["x2"]
    assert SR.mult.get((x0, x2), {}) == {}  # {0, 2} is not a face
    assert SR.mult.get((x0, x0), {}) == {}  # squares vanish
    assert SR.mult[(x0, x1)] == {lab["x0*x1"]: 1}


def test_alpha_on_path():
    K = SimplicialComplex.generated(3, [[0, 1], [1, 2]])
    SR, BM, a = alpha_K(K, QQ)
    assert SR.dim == BM.dim == 6
    assert a.is_bijective() and a.violations() == []


@pytest.mark.parametrize("phi,L", [
    ([0, 1, 0], SimplicialComplex.generated(2, [[0, 1]])),
    ([1, 0, 1], SimplicialComplex.generated(2, [[0, 1]])),
    ([0, 1, 2], SimplicialComplex.generated(3, [[0, 1, 2]])),
])
def test_sr_square(phi, L):
    K = SimplicialComplex.generated(3, [[0, 1], [1, 2]])
    sq = sr_pullbacks(K, L, phi, QQ)
    assert sq.commutes and sq.P_phi_star_is_algebra_map
    assert sq.phi_star.violations() == []


def test_sr_rejects_degenerate():
    K = SimplicialComplex.generated(2, [[0, 1]])
    L = SimplicialComplex.generated(2, [[0, 1]])
    with pytest.raises(SchemoidError):
        sr_pullbacks(K, L, [0, 0], QQ)


@pytest.mark.parametrize("F,expected", [(QQ, [2, 1, 1, 1]), (GF(3), [2, 1, 1, 1]), (GF(2), [2, 2, 2, 2])])
def test_hochschild_dual_numbers(F, expected):
    # k[x]/(x^2): HH^n is one-dimensional for n >= 1 unless char k = 2
    A = bose_mesner(truncated_len(1), F)
    assert hochschild_cohomology(A, 3) == expected


def test_hochschild_guard():
    A = category_algebra(complete_graph_category(4), QQ)
    with pytest.raises(GuardError):
        hochschild_cohomology(A, 1, max_dim=12)
    B = bose_mesner(hamming_schemoid(3), QQ)
    with pytest.raises(GuardError):
        hochschild_cohomology(B, 8)


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(["Z2", "Z3", "Z4", "Z2xZ2", "S3"]), st.sampled_from([QQ, GF(2), GF(3)]))
def test_hh0_is_center(name, F):
    A = category_algebra(group_category(small_groups()[name]), F)
    assert hochschild_cohomology(A, 0)[0] == center(A)[0]


def test_iso_verdicts():
    g = small_groups()
    A = category_algebra(group_category(g["Z4"]), GF(2))
    B = category_algebra(group_category(g["Z2xZ2"]), GF(2))
    v = algebra_iso_bruteforce(A, B)
    assert v.status == "not isomorphic" and "radical" in v.reason
    C = category_algebra(group_category(g["Z3"]), QQ)
    w = algebra_iso_bruteforce(C, C)
    assert w.status == "isomorphic" and w.witness.violations() == [] and w.witness.is_bijective()


def test_iso_of_bose_mesner_with_group_case():
    # the Z/2 groupoid schemoid and H(1, 2) have the same algebra
    A = bose_mesner(group_schemoid(cyclic_table(2)), GF(3))
    B = bose_mesner(hamming_schemoid(1), GF(3))
    assert algebra_iso_bruteforce(A, B).status == "isomorphic"


def test_invariants_and_identity_map():
    A = bose_mesner(truncated_len(1), GF(2))
    inv = invariants(A)
    assert inv["dim"] == 2 and inv["commutative"]
    assert identity_map(A).violations() == []


def test_make_algebra_rejects_bad_index():
    with pytest.raises(AlgebraError):
        make_algebra(QQ, 1, [(0, 0, 1, 1)])


def test_category_algebra_of_interval():
    A = category_algebra(interval_category(), QQ)
    assert A.unit == [1, 1, 0]
    assert A.mult[(2, 0)] == {2: 1} and (0, 2) not in A.mult
