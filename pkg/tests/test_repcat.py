import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schemoids import linalg as la
from schemoids.algebra import category_algebra
from schemoids.constructors import (cyclic_table, group_schemoid, hamming_schemoid, open_set_schemoid,
                                    sierpinski_space, sign_morphism, small_groups, truncated_len)
from schemoids.core import GuardError, identity_morphism, terminal_schemoid, validate_morphism, validate_schemoid
from schemoids.fields import GF, QQ
from schemoids.fincat import group_category, poset_category
from schemoids.repcat import (FunctorRep, RepError, adjunction_check, bimodule_functors, check_rep,
                              constant_rep, enumerate_functor_reps, eta, ext_dims, find_isomorphism,
                              hamming_witness, kan_left, kan_right, lc_hom, mitchell, mitchell_algebra,
                              morita_witness_check, nat_hom, projective_resolution, regular_bimodule, restrict,
                              schemoid_cohomology, swap_automorphism, tensor, validate_functor_rep, zero_rep)
from schemoids.repcat.modules import check_resolution, module_violations, trivial_module

from oracles import cyclic_cohomology_trivial, involutions_count


def z2():
    return group_schemoid(cyclic_table(2))


def two_points_one_block():
    """Two objects, no arrows between them, both identities in one block."""
    C = poset_category([0, 1], lambda a, b: a == b)
    return validate_schemoid(C, [0, 0])


# ---------------------------------------------------------------- validation


def test_validation_kinds():
    Z = z2()
    F = GF(3)
    good = FunctorRep.from_blocks(Z, F, [1, 1], {1: [[2]]})
    assert validate_functor_rep(good).ok
    bad_comp = FunctorRep.from_blocks(Z, F, [1, 1], {1: [[0]]})
    assert validate_functor_rep(bad_comp).errors[0]["kind"] == "composition"
    mats = [[[1]], [[2]], [[1]], [[1]]]
    assert validate_functor_rep(FunctorRep(Z, F, [1, 1], mats)).errors[0]["kind"] == "block"
    assert validate_functor_rep(FunctorRep(Z, F, [1, 2], mats)).errors[0]["kind"] == "shape"
    not_id = FunctorRep(Z, F, [1, 1], [[[2]], [[1]], [[1]], [[2]]])
    assert validate_functor_rep(not_id).errors[0]["kind"] in ("identity", "block")
    with pytest.raises(RepError):
        check_rep(bad_comp)


def test_from_blocks_requires_non_identity_blocks():
    with pytest.raises(RepError):
        FunctorRep.from_blocks(z2(), GF(2), [1, 1], {})


def test_restrict_along_identity():
    Z = z2()
    M = FunctorRep.from_blocks(Z, GF(3), [1, 1], {1: [[2]]})
    assert restrict(identity_morphism(Z), M).same_as(M)


# ---------------------------------------------------------------- hom spaces


def test_lc_versus_natural_hom():
    S = two_points_one_block()
    M = constant_rep(S, QQ)
    assert nat_hom(M, M).dim == 2
    assert lc_hom(M, M).dim == 1


def test_hom_contains_identity():
    for M in enumerate_functor_reps(z2(), GF(3), 2):
        H = lc_hom(M, M)
        ident = {x: la.identity(M.F, M.dims[x]) for x in M.S.cat.objects}
        assert H.coordinates(ident) is not None


def test_coordinates_rejects_non_lc_family():
    S = two_points_one_block()
    M = constant_rep(S, QQ)
    H = lc_hom(M, M)
    assert H.coordinates({0: [[QQ(1)]], 1: [[QQ(2)]]}) is None


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_conjugate_reps_are_isomorphic(entries):
    F = GF(3)
    P = [entries[:2], entries[2:]]
    if la.rank(F, P, 2) < 2:
        return
    Pinv = la.inverse(F, P)
    Z = z2()
    for M in enumerate_functor_reps(Z, F, 2):
        if M.dims[0] != 2:
            continue
        X = M.block_mats()[1]
        Y = la.matmul(F, la.matmul(F, P, X), Pinv)
        N = FunctorRep.from_blocks(Z, F, [2, 2], {1: Y})
        assert find_isomorphism(M, N) is not None


def test_non_isomorphic_reps():
    Z = z2()
    F = GF(3)
    A = FunctorRep.from_blocks(Z, F, [1, 1], {1: [[1]]})
    B = FunctorRep.from_blocks(Z, F, [1, 1], {1: [[2]]})
    assert find_isomorphism(A, B) is None


# ---------------------------------------------------------------- enumeration


@pytest.mark.parametrize("p", [2, 3])
def test_enumeration_count_matches_involutions(p):
    reps = enumerate_functor_reps(z2(), GF(p), 2)
    assert len(reps) == sum(involutions_count(p, d) for d in range(3))
    assert all(validate_functor_rep(M).ok for M in reps)


def test_enumeration_guards():
    with pytest.raises(GuardError):
        enumerate_functor_reps(z2(), GF(5), 1)
    with pytest.raises(GuardError):
        enumerate_functor_reps(z2(), QQ, 1)
    with pytest.raises(GuardError):
        enumerate_functor_reps(hamming_schemoid(2), GF(3), 3, max_candidates=1000)


def test_enumeration_is_deterministic():
    a = enumerate_functor_reps(hamming_schemoid(2), GF(2), 2)
    b = enumerate_functor_reps(hamming_schemoid(2), GF(2), 2)
    assert [m.mats for m in a] == [m.mats for m in b]


def test_sierpinski_degeneracy():
    S = open_set_schemoid(sierpinski_space())
    for p in (2, 3):
        for M in enumerate_functor_reps(S, GF(p), 2):
            if M.dims[0] == 0:
                assert M.total_dim() == 0


# ---------------------------------------------------------------- Kan extensions


def test_ran_lan_along_identity():
    Z = z2()
    for M in enumerate_functor_reps(Z, GF(3), 2):
        u = identity_morphism(Z)
        assert find_isomorphism(kan_right(u, M), M) is not None
        assert find_isomorphism(kan_left(u, M), M) is not None


def test_literal_kan_fails_on_split_identity_class():
    S = two_points_one_block()
    T = terminal_schemoid()
    u = validate_morphism(S, T, [0, 0], [0, 0])
    M = constant_rep(S, QQ)
    Fr = constant_rep(T, QQ)
    assert adjunction_check(u, M, Fr).ok
    literal = adjunction_check(u, M, Fr, locally_constant=False)
    assert not literal.ok
    assert kan_right(u, M, locally_constant=False).dims == (2,)
    assert kan_right(u, M).dims == (1,)


def test_kan_needs_tame_target():
    H = hamming_schemoid(2)
    u = identity_morphism(H)
    with pytest.raises(Exception) as exc:
        kan_right(u, constant_rep(H, GF(2)))
    assert "tame" in str(exc.value)


@pytest.mark.parametrize("p", [2, 3])
def test_adjunction_along_sign_map(p):
    v = sign_morphism(2)
    for M in enumerate_functor_reps(v.source, GF(p), 1):
        for N in enumerate_functor_reps(v.target, GF(p), 2):
            assert adjunction_check(v, M, N).ok


# ---------------------------------------------------------------- modules and Ext


def test_mitchell_round_trip():
    Z = group_schemoid(cyclic_table(3))
    for M in enumerate_functor_reps(Z, GF(2), 2):
        X = mitchell(Z, M)
        assert module_violations(X) == []
        assert find_isomorphism(eta(Z, X), M) is not None


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("p", [0, 2, 3])
def test_group_cohomology_matches_periodic_resolution(m, p):
    F = GF(p) if p else QQ
    A = category_algebra(group_category(cyclic_table(m)), F)
    k = trivial_module(A, [1] * m)
    assert ext_dims(A, k, k, 4) == cyclic_cohomology_trivial(m, p, 4)


def test_resolution_is_exact():
    A = category_algebra(group_category(small_groups()["S3"]), GF(3))
    k = trivial_module(A, [1] * 6)
    res = projective_resolution(A, k, 4)
    assert check_resolution(res) == []
    # over F3 the trivial module of S3 has no finite resolution
    assert res.length() == -1


def test_semisimple_ext_vanishes():
    # free covers never stop here since k is projective but not free
    A = category_algebra(group_category(cyclic_table(3)), GF(2))
    k = trivial_module(A, [1] * 3)
    assert check_resolution(projective_resolution(A, k, 4)) == []
    assert ext_dims(A, k, k, 4) == [1, 0, 0, 0, 0]


def test_schemoid_cohomology_z2():
    Z = z2()
    u = identity_morphism(Z)
    assert schemoid_cohomology(u, constant_rep(Z, GF(2)), 5) == [1] * 6
    assert schemoid_cohomology(u, constant_rep(Z, QQ), 3) == [1, 0, 0, 0]


def test_schemoid_cohomology_of_zero_coefficients():
    Z = z2()
    assert schemoid_cohomology(identity_morphism(Z), zero_rep(Z, GF(2)), 2) == [0, 0, 0]


def test_mitchell_algebra_dim():
    assert mitchell_algebra(group_schemoid(small_groups()["S3"]), QQ).dim == 6


# ---------------------------------------------------------------- Morita


@pytest.mark.parametrize("n", [1, 2])
def test_morita_hamming(n):
    r = morita_witness_check(*hamming_witness(n), GF(2), 2)
    assert r.ok, r.witnesses


def test_morita_perturbed():
    r = morita_witness_check(*hamming_witness(2, perturb=True), GF(2), 1)
    assert not r.clauses["v o u = 1"]
    assert r.witnesses["v o u = 1"] == {"object": 0, "image": 1}


def test_swap_is_involution():
    s = swap_automorphism()
    assert [s.mor_map[s.mor_map[f]] for f in range(4)] == [0, 1, 2, 3]


# ---------------------------------------------------------------- bimodules


@pytest.mark.parametrize("name", ["Z2", "Z3"])
def test_regular_bimodule_tensor_is_identity(name):
    S = group_schemoid(small_groups()[name])
    F = GF(2)
    U = regular_bimodule(S, F)
    check_rep(U)
    for Fr in enumerate_functor_reps(S, F, 2):
        T = tensor(Fr, U, S, S)
        check_rep(T)
        assert find_isomorphism(T, Fr) is not None


def test_bimodule_adjunction():
    S = z2()
    F = GF(3)
    U = regular_bimodule(S, F)
    reps = enumerate_functor_reps(S, F, 1)
    for Fr in reps:
        for G in reps:
            res = bimodule_functors(U, Fr, G, S, S)
            assert res.adjunction_ok


def test_truncated_len_quotient_not_available():
    with pytest.raises(Exception):
        regular_bimodule(truncated_len(1), GF(2))
