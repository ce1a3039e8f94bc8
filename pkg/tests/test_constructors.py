import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schemoids.constructors import (AssociationScheme, FiniteSpace, SimplicialComplex, SimplicialMapError,
                                    all_complexes, check_group_table, continuous_map_morphism, cyclic_table,
                                    discrete, from_association_scheme, full_powerset, group_case,
                                    group_schemoid, hamming, hamming_schemoid, height_morphism,
                                    indicator_morphism, open_set_schemoid, power_schemoid, powerset_difference,
                                    sierpinski_space, sign_morphism, simplicial_map_morphism,
                                    simplicial_schemoid, small_groups, truncated_arrow, truncated_len,
                                    validate_association_scheme, validate_complex, validate_space,
                                    word_inclusion)
from schemoids.core import BlockMapError, GuardError, SchemoidError, constant
from schemoids.fincat import interval_category

from oracles import simplices_of


def test_hamming_labels_and_guard():
    A = hamming(3)
    assert A.n_points == 8 and A.labels == ("T0", "T1", "T2", "T3")
    assert A.point_labels[5] == "101"
    with pytest.raises(GuardError):
        hamming(11)
    with pytest.raises(ValueError):
        hamming(0)


def test_association_scheme_rejects_bad_matrix():
    # a path on three points is not distance-regular enough: degree differs
    rel = ((0, 1, 2), (1, 0, 1), (2, 1, 0))
    rep = validate_association_scheme(AssociationScheme(3, rel))
    assert not rep.ok
    with pytest.raises(SchemoidError):
        from_association_scheme(AssociationScheme(3, rel))


def test_from_association_scheme_guard():
    with pytest.raises(GuardError):
        from_association_scheme(hamming(3), max_points=4)


def test_intersection_numbers_of_hamming():
    rep = validate_association_scheme(hamming(2))
    assert rep.ok
    assert rep.intersection_numbers[(1, 1, 2)] == 2


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_small_groups_are_groups(name):
    check_group_table(small_groups()[name])


def test_small_group_orders():
    orders = sorted(len(t) for t in small_groups().values())
    assert orders == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]


def test_group_case_s3():
    G = small_groups()["S3"]
    # a subgroup of order two: find an involution
    e = 0
    s = next(g for g in range(6) if g != e and G[g][g] == e)
    A = group_case(G, [e, s])
    assert A.n_points == 3 and A.n_relations == 2
    S = from_association_scheme(A)
    assert constant(S, 1, 1, 1) == 1 and constant(S, 1, 1, 0) == 2


def test_group_case_rejects_non_subgroup():
    with pytest.raises(SchemoidError):
        group_case(cyclic_table(4), [0, 1])


def test_groupoid_schemoid_indexing():
    Z = group_schemoid(cyclic_table(2))
    # (k, l): l -> k has index 2k + l
    for k in range(2):
        for l in range(2):
            f = 2 * k + l
            assert Z.cat.src[f] == l and Z.cat.tgt[f] == k
            assert Z.block_of[f] == (k + l) % 2
    assert Z.block_labels == ("G[0]", "G[1]")


def test_groupoid_rejects_non_invertible():
    from schemoids.constructors import from_groupoid
    with pytest.raises(SchemoidError):
        from_groupoid(interval_category())


def test_discrete_constants_are_composition():
    S = discrete(interval_category())
    assert S.n_blocks == 3
    assert constant(S, 2, 0, 2) == 1 and constant(S, 2, 2, 2) == 0


def test_truncated_len_layout():
    S = truncated_len(3)
    assert S.cat.n_objects == 4 and S.cat.n_morphisms == 10
    for i in range(4):
        for j in range(i, 4):
            f = truncated_arrow(3, i, j)
            assert (S.cat.src[f], S.cat.tgt[f]) == (i, j)
            assert S.block_of[f] == j - i


def test_power_schemoid_shape():
    P = power_schemoid(truncated_len(1), 2)
    assert (P.cat.n_objects, P.cat.n_morphisms, P.n_blocks) == (4, 9, 4)
    assert P.block_labels == ("(len0,len0)", "(len0,len1)", "(len1,len0)", "(len1,len1)")
    assert power_schemoid(truncated_len(1), 0).cat.n_objects == 1


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_full_powerset_constants(n):
    S = powerset_difference(full_powerset(n))
    keys = [frozenset(int(c) for c in lab[1:-2].split(",") if c) for lab in S.block_labels]
    for (s, t, m), c in S.constants.items():
        assert c in (0, 1)
        if c:
            assert keys[s].isdisjoint(keys[t]) and keys[m] == keys[s] | keys[t]


def test_complex_counts():
    assert [len(all_complexes(n)) for n in range(1, 5)] == [1, 2, 9, 114]
    with pytest.raises(GuardError):
        all_complexes(5)


@pytest.mark.parametrize("K", all_complexes(3), ids=lambda K: str(sorted(map(sorted, K.faces))))
def test_simplicial_schemoid_blocks(K):
    S = simplicial_schemoid(K)
    assert S.cat.n_objects == len(K.faces) + 1
    # one block per simplex plus the block of identities
    assert S.n_blocks == len(K.faces) + 1


def test_complex_generation_matches_oracle():
    K = SimplicialComplex.generated(4, [[0, 1, 2], [2, 3]])
    assert set(K.faces) == simplices_of(4, [[0, 1, 2], [2, 3]])
    assert K.components() == [[0, 1, 2, 3]]
    assert SimplicialComplex.generated(3, [[0, 1]]).components() == [[0, 1], [2]]


def test_validate_complex_errors():
    with pytest.raises(SchemoidError):
        validate_complex(SimplicialComplex(2, frozenset({frozenset({0})})))
    with pytest.raises(SchemoidError):
        validate_complex(SimplicialComplex(3, frozenset({frozenset({0}), frozenset({1}), frozenset({2}),
                                                         frozenset({0, 1, 2})})))


def test_sierpinski_schemoid():
    X = sierpinski_space()
    S = open_set_schemoid(X)
    assert S.cat.n_objects == 3
    assert S.block_labels == ("{}~", "{0}~", "{1}~", "{0,1}~")
    with pytest.raises(SchemoidError):
        validate_space(FiniteSpace.make(2, [[], [0], [1]]))


def test_height_and_indicator():
    S = powerset_difference(full_powerset(3))
    h = height_morphism(S)
    assert h.target.cat.n_objects == 4
    i = indicator_morphism(S)
    assert i.target.cat.n_objects == 8
    # {0} is the most significant digit
    pos = list(S.cat.obj_data).index(frozenset({0}))
    assert i.obj_map[pos] == 4


def test_simplicial_maps():
    edge = SimplicialComplex.generated(2, [[0, 1]])
    tri = SimplicialComplex.generated(3, [[0, 1, 2]])
    u = simplicial_map_morphism(edge, tri, [0, 2])
    assert u.source.cat.n_objects == 4 and u.target.cat.n_objects == 8
    with pytest.raises(SimplicialMapError):
        simplicial_map_morphism(tri, edge, [0, 1, 1])
    # a constant map on a component with an edge is simplicial but not block-preserving
    point = SimplicialComplex.generated(1, [])
    with pytest.raises(BlockMapError):
        simplicial_map_morphism(edge, point, [0, 0])
    two = SimplicialComplex.generated(2, [])
    assert simplicial_map_morphism(two, point, [0, 0]).target.cat.n_objects == 2


def test_continuous_maps():
    X = sierpinski_space()
    ident = continuous_map_morphism([0, 1], X, X)
    assert list(ident.obj_map) == [0, 1, 2]
    with pytest.raises(SchemoidError):
        continuous_map_morphism([1, 0], X, X)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hamming_witness_maps(n):
    v, u = sign_morphism(n), word_inclusion(n)
    assert v.target.cat.n_objects == 2 and u.source.cat.n_objects == 2
    H = hamming_schemoid(n)
    assert v.block_map == tuple(b % 2 for b in range(H.n_blocks))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.lists(st.integers(0, n - 1), min_size=1, max_size=3),
                                             max_size=3))))
def test_random_complexes_give_schemoids(data):
    n, facets = data
    K = SimplicialComplex.generated(n, [sorted(set(f)) for f in facets])
    S = simplicial_schemoid(K)
    assert S.n_blocks == len(K.faces) + 1
    assert all(c in (0, 1) for c in S.constants.values())
