import pytest

from qupauli import CapExceeded, PauliElement, TooLarge, pmul, totients
from qupauli.oracle import (brute_achievable_relations, brute_center, brute_identity_phases,
                            brute_kernel, brute_max_clique, brute_max_pairs, brute_min_generators,
                            brute_span, commutation_graph, enumerate_group, iter_pair_collections,
                            phase_generator)
from conftest import W, X, Z


def test_enumerate_examples():
    g = enumerate_group([PauliElement.make(10, 1, 1, [6], [0])])
    assert len(g) == 10 and g.phases() == {0, 5}
    assert len(enumerate_group([PauliElement.identity(5, 2)])) == 1
    g = enumerate_group([X(2), Z(2)])
    assert len(g) == 8 and g.phases() == {0, 1}
    assert X(2) in g and (1, (1, 1)) in g


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        enumerate_group([X(5), Z(5)], cap=100)
    with pytest.raises(ValueError):
        enumerate_group([X(5)], cap=0)


def test_enumerate_is_closed():
    g = enumerate_group([X(4), PauliElement.make(4, 1, 1, [1], [2])])
    elems = g.paulis()
    for a in elems:
        for b in elems:
            assert pmul(a, b) in g


@pytest.mark.parametrize("d", [2, 3, 4, 6])
def test_lagrange(d):
    full = d ** 3
    for S in ([X(d)], [X(d), Z(d)], [X(d, 2 % d or 1), W(d)], [PauliElement.make(d, 1, 0, [1], [1])]):
        assert full % len(enumerate_group(S)) == 0


def test_brute_center_and_phases():
    assert brute_center([X(2), Z(2)]) == {(0, (0, 0)), (1, (0, 0))}
    assert brute_identity_phases([X(6, 2), Z(6, 3)]) == {0}
    assert brute_identity_phases([X(6), Z(6, 3)]) == {0, 3}
    assert phase_generator({0, 4, 8}, 12) == 4
    assert phase_generator({0}, 12) == 12


def test_clique_values():
    expected = [3, 4, 6, 6, 12, 8, 12, 12, 18, 12, 24]
    assert [brute_max_clique(d) for d in range(2, 13)] == expected
    assert expected == [totients(d)[0] for d in range(2, 13)]
    with pytest.raises(TooLarge):
        brute_max_clique(13)


def test_clique_witness_is_clique():
    size, members = brute_max_clique(6, witness=True)
    verts, adj = commutation_graph(6)
    idx = [verts.index(v) for v in members]
    assert len(idx) == size
    assert all(adj[i] >> j & 1 for i in idx for j in idx if i != j)


def test_max_pairs_values():
    assert brute_max_pairs(2, 1) == 1
    assert brute_max_pairs(6, 1) == 2
    assert brute_max_pairs(2, 2) == 2
    size, pairs = brute_max_pairs(12, 1, witness=True)
    assert size == len(pairs) == 2
    with pytest.raises(TooLarge):
        brute_max_pairs(5, 3)


def test_pair_collections():
    assert sum(1 for _ in iter_pair_collections(6, 1, 3)) == 0
    assert brute_achievable_relations(6, 1, 2) == {(2, 3), (3, 2), (3, 4), (4, 3)}
    assert brute_achievable_relations(2, 1, 1) == {(1,)}


def test_kernel_and_span():
    K = brute_kernel([(2,), (3,)], 6)
    assert all((2 * a + 3 * b) % 6 == 0 for a, b in K) and len(K) == 6
    assert brute_span([(2, 0), (0, 3)], 6, 2) == {(a, b) for a in (0, 2, 4) for b in (0, 3)}


def test_min_generators():
    assert brute_min_generators([X(2), Z(2)]) == 2
    assert brute_min_generators([PauliElement.identity(3, 1)]) == 1
    assert brute_min_generators([X(6, 2), X(6, 3)]) == 1
