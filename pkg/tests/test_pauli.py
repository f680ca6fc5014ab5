import json
from functools import reduce

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qupauli import (ExactMatrix, PauliElement, ParseError, comm_phase, commutation_matrix,
                     format_pauli, parse_pauli, parse_pauli_list, pauli_order, pmul, ppow,
                     product, tensor)
from qupauli.errors import DimensionMismatch
from qupauli.pauli import format_pauli_list, inverse, pauli_from_json, pauli_to_json
from conftest import W, X, Z


def operator(p: PauliElement) -> np.ndarray:
    """Explicit d^n x d^n matrix of ``w^j X^a Z^b (x) ...``."""
    d = p.d
    w = np.exp(2j * np.pi / d)
    shift = np.roll(np.eye(d), 1, axis=0)
    clock = np.diag([w ** k for k in range(d)])
    factors = [np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b)
               for a, b in zip(p.x, p.z)]
    return w ** p.phase * reduce(np.kron, factors, np.eye(1))


def paulis(d, n):
    return st.builds(lambda j, v: PauliElement.from_vector(d, v, j),
                     st.integers(0, d - 1),
                     st.lists(st.integers(0, d - 1), min_size=2 * n, max_size=2 * n))


spaces = st.sampled_from([(2, 1), (3, 1), (4, 1), (6, 1), (2, 2), (3, 2), (4, 2)])


@given(spaces.flatmap(lambda s: st.tuples(paulis(*s), paulis(*s))))
def test_product_matches_matrices(pq):
    p, q = pq
    assert np.allclose(operator(p) @ operator(q), operator(pmul(p, q)), atol=1e-9)


@given(spaces.flatmap(lambda s: st.tuples(paulis(*s), st.integers(0, 3 * s[0]))))
def test_power_matches_matrices(pt):
    p, t = pt
    assert np.allclose(np.linalg.matrix_power(operator(p), t), operator(ppow(p, t)), atol=1e-9)


@given(spaces.flatmap(lambda s: st.tuples(paulis(*s), paulis(*s))))
def test_group_commutator_matches_matrices(pq):
    p, q = pq
    P, Q = operator(p), operator(q)
    com = P @ Q @ np.linalg.inv(P) @ np.linalg.inv(Q)
    w = np.exp(2j * np.pi / p.d)
    assert np.allclose(com, w ** comm_phase(p, q) * np.eye(P.shape[0]), atol=1e-9)


def test_product_examples():
    assert pmul(Z(2), X(2)) == PauliElement(2, 1, 1, (1, 1))
    assert pmul(X(2), Z(2)) == PauliElement(2, 1, 0, (1, 1))
    p = PauliElement.make(10, 1, 1, [6], [0])
    assert pmul(p, p) == PauliElement(10, 1, 2, (2, 0))
    assert pmul(p, PauliElement.identity(10, 1)) == p


def test_power_examples():
    for d in (2, 4, 6, 10):
        xz = PauliElement.make(d, 1, 0, [1], [1])
        assert ppow(xz, d) == W(d, d // 2)
    p = PauliElement.make(10, 1, 1, [6], [0])
    assert ppow(p, 5) == W(10, 5)
    assert ppow(p, 0).is_identity


def test_commutator_examples():
    for d in (2, 3, 6, 12):
        assert comm_phase(X(d), Z(d)) == d - 1
        assert comm_phase(X(d), X(d)) == 0
    assert comm_phase(X(6, 3), Z(6, 3)) == 3


def test_order_examples():
    assert pauli_order(PauliElement.identity(5, 2)) == 1
    assert pauli_order(PauliElement.make(4, 1, 0, [1], [1])) == 8
    for d in (2, 3, 7, 12):
        assert pauli_order(X(d)) == d


@given(spaces.flatmap(lambda s: paulis(*s)))
def test_order_divides_2d_and_inverse(p):
    k = pauli_order(p)
    assert ppow(p, k).is_identity and (2 * p.d) % k == 0
    assert pmul(p, inverse(p)).is_identity


def test_commutation_matrix_examples():
    assert commutation_matrix([X(2), Z(2)]) == ExactMatrix.from_rows([[0, 1], [1, 0]], 2)
    assert commutation_matrix([X(3)]) == ExactMatrix.from_rows([[0]], 3)
    d, n = 6, 3
    S = [PauliElement.make(d, n, 0, [1] * 3, [0] * 3), PauliElement.make(d, n, 0, [0] * 3, [1] * 3),
         PauliElement.make(d, n, 1, [1] * 3, [1] * 3)]
    assert commutation_matrix(S) == ExactMatrix.from_rows([[0, 3, 3], [3, 0, 3], [3, 3, 0]], 6)


def test_product_ascending_order():
    d = 5
    assert product([X(d), Z(d)], [1, 1]) == pmul(X(d), Z(d))
    assert product([Z(d), X(d)], [1, 1]) == pmul(Z(d), X(d))


def test_tensor():
    t = tensor(X(3), Z(3))
    assert t == PauliElement.make(3, 2, 0, [1, 0], [0, 1])
    with pytest.raises(DimensionMismatch):
        tensor(X(3), Z(5))


def test_parse_examples():
    assert parse_pauli("w1 X6Z0", 10, 1) == PauliElement(10, 1, 1, (6, 0))
    assert parse_pauli("w0 X0Z0", 4, 1).is_identity
    assert parse_pauli("w2 X1Z1 X0Z3", 6, 2) == PauliElement(6, 2, 2, (1, 0, 1, 3))


@pytest.mark.parametrize("text,col", [("v1 X1Z0", 1), ("w1 X1Y0", 4), ("w9 X1Z0", 1),
                                      ("w1 X1Z0 X0Z0", 9), ("w1 X7Z0", 4)])
def test_parse_errors(text, col):
    with pytest.raises(ParseError) as info:
        parse_pauli(text, 6, 1)
    assert info.value.position == (1, col)


@given(spaces.flatmap(lambda s: st.lists(paulis(*s), min_size=1, max_size=5)))
def test_round_trips(S):
    d, n = S[0].d, S[0].n
    assert parse_pauli_list(format_pauli_list(S), d, n) == S
    data = json.dumps([pauli_to_json(p) for p in S])
    assert parse_pauli_list(data) == S
    assert all(pauli_from_json(pauli_to_json(p)) == p for p in S)
    assert all(parse_pauli(format_pauli(p), d, n) == p for p in S)


def test_list_parse_reports_line():
    with pytest.raises(ParseError) as info:
        parse_pauli_list("w0 X1Z0\n# comment\nw0 Q\n", 3, 1)
    assert info.value.position[0] == 3


def test_mixed_dimensions_rejected():
    with pytest.raises(DimensionMismatch):
        commutation_matrix([X(3), X(5)])
