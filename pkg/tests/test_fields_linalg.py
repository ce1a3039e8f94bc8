from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schemoids import linalg as la
from schemoids.fields import GF, QQ, parse_field

from oracles import matrix_rank_mod


def test_parse_field():
    assert parse_field("Q") == QQ
    assert parse_field("F3") == GF(3)
    with pytest.raises(ValueError):
        parse_field("F4")
    with pytest.raises(ValueError):
        parse_field("R")


def test_field_arithmetic():
    F = GF(5)
    assert F.mul(3, F.inv(3)) == 1
    assert F("-1") == 4
    assert F(Fraction(1, 2)) == 3
    assert QQ("-3/4") == Fraction(-3, 4)
    assert QQ.to_json(Fraction(1, 2)) == "1/2"
    assert QQ.to_json(Fraction(4, 2)) == 2
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def matrices(p, max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices(3))
def test_rank_against_oracle(A):
    assert la.rank(GF(3), A, len(A[0])) == matrix_rank_mod(A, 3)


@given(matrices(2))
def test_rank_nullity(A):
    F = GF(2)
    n = len(A[0])
    basis, free = la.nullspace(F, A, n)
    assert len(basis) + la.rank(F, A, n) == n
    for v in basis:
        assert all(x == 0 for x in la.matvec(F, A, v))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_over_q(rows):
    F = QQ
    A = la.convert(F, rows)
    inv = la.inverse(F, A)
    if la.rank(F, A, 3) < 3:
        assert inv is None
    else:
        assert la.matmul(F, A, inv) == la.identity(F, 3)


@settings(max_examples=50)
@given(matrices(5, 4, 4), st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_solve_consistent(A, x):
    F = GF(5)
    n = len(A[0])
    x = x[:n]
    b = la.matvec(F, A, x)
    y = la.solve(F, A, b, n)
    assert y is not None
    assert la.matvec(F, A, y) == b


def test_solve_inconsistent():
    F = QQ
    A = la.convert(F, [[1, 1], [1, 1]])
    assert la.solve(F, A, [F(1), F(2)]) is None


def test_kron_shape():
    F = QQ
    K = la.kron(F, la.identity(F, 2), la.convert(F, [[1, 2], [3, 4]]))
    assert len(K) == 4 and len(K[0]) == 4
    assert K[2][2] == 1 and K[3][2] == 3 and K[0][2] == 0
