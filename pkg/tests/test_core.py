import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schemoids.constructors import (cyclic_table, direct_product_table, group_schemoid, hamming_schemoid,
                                    powerset_difference, sign_morphism, small_groups, truncated_len,
                                    word_inclusion)
from schemoids.core import (AxiomViolation, BlockMapError, FunctorialityError, NotTameError, PartitionError,
                            SchemoidMorphism, blocks_to_block_of, check_homotopy, compose_morphisms, constant,
                            find_category_isomorphism, identity_classes, identity_morphism,
                            interval_schemoid, opposite_schemoid, product_schemoid, quotient_category,
                            relabel_schemoid, same_morphism, schemoid_from_blocks,
                            schemoid_isomorphic_bruteforce, tameness_report, terminal_schemoid,
                            validate_morphism, validate_schemoid)
from schemoids.fincat import group_category, interval_category, product_category

from oracles import hamming_intersection_numbers


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hamming_constants_match_word_count(n):
    S = hamming_schemoid(n)
    ref = hamming_intersection_numbers(n)
    for i in range(n + 1):
        for j in range(n + 1):
            for k in range(n + 1):
                assert constant(S, i, j, k) == ref.get((i, j, k), 0), (i, j, k)


def test_h22_true_values():
    S = hamming_schemoid(2)
    # T1 o T1 over a T2 morphism: both intermediate words work
    assert constant(S, 1, 1, 2) == 2
    assert constant(S, 1, 1, 0) == 2
    assert constant(S, 1, 1, 1) == 0


def test_merged_block_perturbation_rejected():
    S = hamming_schemoid(2)
    block_of = [0 if b in (0, 1) else 1 for b in S.block_of]
    with pytest.raises(AxiomViolation) as exc:
        validate_schemoid(S.cat, block_of)
    w = exc.value.witness
    assert w["count_f"] != w["count_g"]
    # recount the two fibers directly
    for h, claimed in ((w["f"], w["count_f"]), (w["g"], w["count_g"])):
        n = sum(1 for (s, t), c in S.cat.comp.items()
                if c == h and block_of[s] == w["sigma"] and block_of[t] == w["tau"])
        assert n == claimed


def test_merging_t1_t2_gives_trivial_scheme():
    S = hamming_schemoid(2)
    T = validate_schemoid(S.cat, [min(b, 1) for b in S.block_of])
    assert constant(T, 1, 1, 1) == 2 and constant(T, 1, 1, 0) == 3


def test_partition_errors():
    S = hamming_schemoid(1)
    with pytest.raises(PartitionError):
        blocks_to_block_of(4, [[0, 1], [1, 2, 3]])
    with pytest.raises(PartitionError):
        blocks_to_block_of(4, [[0, 1], [2]])
    with pytest.raises(PartitionError):
        validate_schemoid(S.cat, [0, 2, 2, 0])
    with pytest.raises(PartitionError):
        validate_schemoid(S.cat, [0, 1, 1])


def test_schemoid_from_blocks_roundtrip():
    S = hamming_schemoid(2)
    T = schemoid_from_blocks(S.cat, S.blocks, S.block_labels)
    assert T == S and T.constants == S.constants


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_relabel_invariance(rnd):
    S = group_schemoid(small_groups()[rnd.choice(["Z3", "S3", "Z2xZ2"])])
    op = list(range(S.cat.n_objects))
    mp = list(range(S.cat.n_morphisms))
    bp = list(range(S.n_blocks))
    rnd.shuffle(op)
    rnd.shuffle(mp)
    rnd.shuffle(bp)
    T = relabel_schemoid(S, op, mp, bp)
    for (s, t, m), c in S.constants.items():
        assert constant(T, bp[s], bp[t], bp[m]) == c
    assert schemoid_isomorphic_bruteforce(S, T).found


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 2), st.sampled_from(["Z2", "Z3"]))
def test_product_constants_multiply(n, g):
    S, T = hamming_schemoid(n), group_schemoid(small_groups()[g])
    P = product_schemoid(S, T)
    nb = T.n_blocks
    for (s1, t1, m1), c1 in S.constants.items():
        for (s2, t2, m2), c2 in T.constants.items():
            assert constant(P, s1 * nb + s2, t1 * nb + t2, m1 * nb + m2) == c1 * c2


def test_opposite_swaps_factors():
    S = powerset_difference([frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})])
    O = opposite_schemoid(S)
    for (s, t, m), c in S.constants.items():
        assert constant(O, t, s, m) == c


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_group_schemoids_tame_and_thin(name):
    S = group_schemoid(small_groups()[name])
    assert tameness_report(S).tame
    assert max(S.constants.values()) <= 1


def test_truncated_len_tameness():
    assert tameness_report(truncated_len(0)).tame
    for n in (1, 2, 3):
        r = tameness_report(truncated_len(n))
        assert r.unital and r.tii_holds and not r.tiii_holds
        assert any(f["problem"] == "no composable representatives" for f in r.tiii_failures)
    with pytest.raises(NotTameError):
        quotient_category(truncated_len(2))


def test_isolated_vertices_not_tame():
    S = powerset_difference([frozenset(), frozenset({0}), frozenset({1})])
    r = tameness_report(S)
    assert not r.tame
    pairs = {(S.block_label(f["sigma"]), S.block_label(f["tau"])) for f in r.tiii_failures}
    assert ("{0}~", "{1}~") in pairs


def test_non_unital_detected():
    # one block holding both identities and both swaps is still a schemoid
    T = validate_schemoid(hamming_schemoid(1).cat, [0, 0, 0, 0])
    r = tameness_report(T)
    assert not r.unital and r.unital_witness == 0
    assert "T(i)" in r.reason()


@pytest.mark.parametrize("name", ["Z2", "Z4", "S3", "Q8"])
def test_quotient_recovers_group(name):
    table = small_groups()[name]
    S = group_schemoid(table)
    Q, proj = quotient_category(S)
    assert Q.n_objects == 1
    found, _ = find_category_isomorphism(Q, group_category(table))
    assert found is not None


def test_identity_classes_of_groupoid():
    S = group_schemoid(cyclic_table(3))
    class_of, classes = identity_classes(S)
    assert classes == [[0, 1, 2]]


def test_morphism_validation_errors():
    Z = group_schemoid(cyclic_table(2))
    with pytest.raises(FunctorialityError) as exc:
        validate_morphism(Z, Z, [0, 1], [0, 0, 0, 0])
    assert exc.value.witness["kind"] in ("endpoints", "identity", "composition")
    H = hamming_schemoid(2)
    # split by the first letter: T1 then meets both blocks of the Z/2 schemoid
    obj = [0, 0, 1, 1]
    n = 4
    mor = [2 * obj[x] + obj[y] for x in range(n) for y in range(n)]
    with pytest.raises(BlockMapError):
        validate_morphism(H, Z, obj, mor)


def test_sign_after_inclusion_is_identity():
    for n in (1, 2, 3):
        u, v = word_inclusion(n), sign_morphism(n)
        assert same_morphism(compose_morphisms(v, u), identity_morphism(u.source))


def test_homotopy_ends():
    S = group_schemoid(cyclic_table(2))
    SI = product_schemoid(S, interval_schemoid())
    # projection onto S is a homotopy from the identity to itself
    mor = [f // 3 for f in SI.cat.morphisms]
    obj = [a // 2 for a in SI.cat.objects]
    H = validate_morphism(SI, S, obj, mor)
    F, G = check_homotopy(H, S)
    assert same_morphism(F, identity_morphism(S)) and same_morphism(G, identity_morphism(S))
    assert SI.cat == product_category(S.cat, interval_category())


def test_iso_search_negative():
    A = group_schemoid(cyclic_table(4))
    B = group_schemoid(direct_product_table(cyclic_table(2), cyclic_table(2)))
    assert not schemoid_isomorphic_bruteforce(A, B).found
    assert schemoid_isomorphic_bruteforce(terminal_schemoid(), terminal_schemoid()).found


def test_schemoid_morphism_is_frozen():
    u = identity_morphism(terminal_schemoid())
    assert isinstance(u, SchemoidMorphism)
    with pytest.raises(Exception):
        u.obj_map = (1,)


def test_random_block_merges_are_sound():
    rnd = random.Random(7)
    S = hamming_schemoid(3)
    for _ in range(20):
        target = [rnd.randrange(3) for _ in range(S.n_blocks)]
        used = sorted(set(target))
        block_of = [used.index(target[b]) for b in S.block_of]
        try:
            T = validate_schemoid(S.cat, block_of)
        except AxiomViolation as e:
            w = e.witness
            assert w["count_f"] != w["count_g"]
        else:
            assert T.n_blocks == len(used)
