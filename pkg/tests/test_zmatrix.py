import json
from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qupauli import (ExactMatrix, NotInvertible, ParseError, det, inverse, is_invertible,
                     minors_gcd, parse_matrix)
from qupauli.errors import NotSquare, OutOfRange, RingMismatch, ShapeMismatch
from qupauli.zmatrix import adjugate, matrix_from_json


def M(rows, d=None):
    return ExactMatrix.from_rows(rows, d)


def test_mat_mul_examples():
    A = M([[1, 1], [0, 1]])
    assert A @ M([[1, 0], [1, 1]]) == M([[2, 1], [1, 1]])
    assert M([[3]], 6) @ M([[4]], 6) == M([[0]], 6)
    assert ExactMatrix.identity(2) @ A == A


def test_ring_and_shape_checks():
    with pytest.raises(RingMismatch):
        M([[1]]) @ M([[1]], 5)
    with pytest.raises(ShapeMismatch):
        M([[1, 2]]) @ M([[1, 2]])
    with pytest.raises(OutOfRange):
        ExactMatrix(1, 1, 5, (7,))
    with pytest.raises(NotSquare):
        det(M([[1, 2]]))


def test_det_examples():
    assert det(M([[0, 3], [-3, 0]])) == 9
    assert det(ExactMatrix.identity(4, 7)) == 1
    alt = M([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    assert det(alt) == 0


def _leibniz(rows):
    from itertools import permutations
    k = len(rows)
    total = 0
    for perm in permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(k):
            term *= rows[i][perm[i]]
        total += term
    return total


small = st.integers(-9, 9)


@given(st.integers(1, 5).flatmap(lambda k: st.lists(st.lists(small, min_size=k, max_size=k),
                                                     min_size=k, max_size=k)))
def test_det_matches_leibniz(rows):
    assert det(M(rows)) == _leibniz(rows)


def test_minors_gcd():
    A = M([[2, 4], [6, 8]])
    assert minors_gcd(A, 0) == 1
    assert minors_gcd(A, 1) == 2
    assert minors_gcd(A, 2) == 8


def test_is_invertible():
    assert is_invertible(M([[3]], 10))
    assert not is_invertible(M([[2]], 6))
    assert is_invertible(ExactMatrix.identity(3, 9))
    assert not is_invertible(M([[2, 0], [0, 1]]))


@given(st.integers(2, 30), st.integers(1, 4).flatmap(
    lambda k: st.lists(st.lists(st.integers(0, 100), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_inverse_over_zd(d, rows):
    A = M(rows, d)
    if is_invertible(A):
        B = inverse(A)
        I = ExactMatrix.identity(A.rows, d)
        assert A @ B == I and B @ A == I
    else:
        with pytest.raises(NotInvertible):
            inverse(A)


def test_adjugate_singular():
    A = M([[1, 2], [2, 4]])
    assert (A @ adjugate(A)).is_zero()


def test_alternating_and_lift():
    A = M([[0, 3], [12, 0]], 15)
    assert A.is_alternating()
    L = A.lift_alternating()
    assert L == M([[0, 3], [-3, 0]]) and L.is_alternating()
    assert not M([[1, 0], [0, 0]]).is_alternating()


def test_text_round_trip():
    A = M([[1, -2, 3], [4, 0, -6]])
    assert parse_matrix(A.to_text()) == A
    B = M([[1, 2], [3, 4]], 5)
    assert parse_matrix(B.to_text()) == B
    assert matrix_from_json(json.loads(json.dumps(B.to_json()))) == B
    assert parse_matrix(json.dumps(B.to_json())) == B


@pytest.mark.parametrize("text,pos", [
    ("2 2 Z\n1 x\n3 4\n", (2, 3)),
    ("2 2 Z\n1 2\n", (3, 1)),
    ("2 2 Q\n1 2\n3 4\n", (1, 5)),
    ("2 2\n1 2\n3 4\n", (1, 1)),
    ("1 2 Z\n1 2 3\n", (2, 1)),
])
def test_parse_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert info.value.position == pos


def test_ring_tokens():
    for token in ("Z6", "Z_6", "Z<6>"):
        assert parse_matrix(f"1 1 {token}\n7\n") == M([[1]], 6)


def test_zero_dimension():
    Z0 = ExactMatrix.zeros(0, 3)
    assert Z0.shape == (0, 3) and Z0.T.shape == (3, 0)
    assert (ExactMatrix.zeros(2, 0) @ ExactMatrix.zeros(0, 3)).is_zero()


def test_apply_matches_matmul():
    A = M([[1, 2, 3], [4, 5, 6]], 7)
    for v in cartesian(range(3), repeat=3):
        col = ExactMatrix.from_columns([v], 7)
        assert A.apply(v) == (A @ col).column(0)
