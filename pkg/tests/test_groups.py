import random

import pytest

from qupauli import (ExactMatrix, achieve_relation, NotInSpan, NotInvertible, NotPairs, PauliElement, ShapeMismatch,
                     center_of_pairs, comm_phase, decompose_in_pair_basis, example_max_pairs,
                     gram_schmidt_generating_set, identity_subgroup_generator, is_full_group,
                     minimal_generating_set, near_minimal_generating_set, pair_group_order_bound,
                     pmul, subgroup_order, transform_generators, verify_pairs)
from qupauli.groups import _gamma_chunks, pair_product
from qupauli.oracle import brute_center, brute_min_generators, enumerate_group, phase_generator
from conftest import SEED, W, X, Z, random_pauli


def same_group(A, B):
    return enumerate_group(A).elements == enumerate_group(B).elements


def random_set(rng, d, n, k):
    return [random_pauli(rng, d, n) for _ in range(k)]


# small spaces whose whole Pauli group fits comfortably in the enumerator
SMALL = [(2, 1), (2, 2), (3, 1), (4, 1), (5, 1), (6, 1), (8, 1), (9, 1), (10, 1), (12, 1), (3, 2)]


def test_identity_generator_examples():
    ig = identity_subgroup_generator([PauliElement.make(10, 1, 1, [6], [0])])
    assert ig.mu == 5 and ig.order == 2 and ig.phases() == {0, 5}
    assert identity_subgroup_generator([X(6)]).mu == 6
    assert identity_subgroup_generator([X(6), Z(6)]).mu == 1
    assert identity_subgroup_generator([X(12, 3), Z(12, 4)]).mu == 12
    assert identity_subgroup_generator([X(12, 6), Z(12, 6)]).mu == 12
    assert identity_subgroup_generator([X(12, 2), Z(12, 3)]).mu == 6


def test_identity_generator_for_phase_only_set():
    assert identity_subgroup_generator([W(12, 8)]).mu == 4
    assert identity_subgroup_generator([PauliElement.identity(7, 2)]).mu == 7


@pytest.mark.parametrize("d,n", SMALL)
def test_identity_generator_matches_enumeration(d, n):
    rng = random.Random(SEED + 10 * d + n)
    for _ in range(25):
        S = random_set(rng, d, n, rng.randint(1, 4))
        ig = identity_subgroup_generator(S)
        assert ig.phases() == enumerate_group(S).phases()
        assert ig.mu == phase_generator(enumerate_group(S).phases(), d)


def test_transform_generators():
    S = [X(10), Z(10)]
    A = ExactMatrix.from_rows([[1, 1], [0, 3]], 10)
    T = transform_generators(S, A)
    assert T[0] == X(10) and T[1] == pmul(X(10), Z(10, 3))
    assert same_group(S, T)
    with pytest.raises(NotInvertible):
        transform_generators([X(10)], ExactMatrix.from_rows([[2]], 10))
    with pytest.raises(ShapeMismatch):
        transform_generators([X(10)], ExactMatrix.identity(2, 10))


def test_near_minimal_examples():
    nm = near_minimal_generating_set([X(6), X(6, 2), Z(6, 3)])
    assert nm.r == 2
    assert same_group(nm.elements(), [X(6), X(6, 2), Z(6, 3)])
    S = [X(5), Z(5)]
    nm = near_minimal_generating_set(S)
    assert nm.T == tuple(S)


@pytest.mark.parametrize("d,n", SMALL)
def test_near_minimal_regenerates(d, n):
    rng = random.Random(SEED + 100 + 10 * d + n)
    for _ in range(20):
        S = random_set(rng, d, n, rng.randint(1, 5))
        nm = near_minimal_generating_set(S)
        assert same_group(nm.elements(), S)
        assert nm.r <= 2 * n


def test_minimal_triple():
    S2 = [PauliElement.make(2, 3, 0, [1] * 3, [0] * 3), PauliElement.make(2, 3, 0, [0] * 3, [1] * 3),
          PauliElement.make(2, 3, 1, [1] * 3, [1] * 3)]
    res = minimal_generating_set(S2)
    assert len(res.elements) == 2 and same_group(res.elements, S2)
    S6 = [PauliElement.make(6, 3, 0, [1] * 3, [0] * 3), PauliElement.make(6, 3, 0, [0] * 3, [1] * 3),
          PauliElement.make(6, 3, 1, [1] * 3, [1] * 3)]
    res = minimal_generating_set(S6)
    assert len(res.elements) == 3 and res.status == "exhaustive"
    assert same_group(res.elements, S6)
    assert subgroup_order(S6) == 216 == len(enumerate_group(S6))


def test_minimal_examples():
    res = minimal_generating_set([X(5), W(5)])
    assert len(res.elements) == 2
    # a stabilizer-like set with trivial phases needs exactly r generators
    S = [PauliElement.make(4, 2, 0, [1, 1], [0, 0]), PauliElement.make(4, 2, 0, [0, 0], [1, 1])]
    res = minimal_generating_set(S)
    assert res.r == 2 and len(res.elements) == 2
    res = minimal_generating_set([PauliElement.identity(6, 1), W(6, 2)])
    assert res.r == 0 and res.elements == (W(6, 2),)


def test_minimal_budget_capped():
    S = [PauliElement.make(6, 3, 0, [1] * 3, [0] * 3), PauliElement.make(6, 3, 0, [0] * 3, [1] * 3),
         PauliElement.make(6, 3, 1, [1] * 3, [1] * 3)]
    res = minimal_generating_set(S, budget=5)
    assert res.status == "budget-capped" and res.tried == 5
    assert same_group(res.elements, S)


@pytest.mark.parametrize("jobs", [1, 3])
def test_minimal_jobs_agree(jobs):
    rng = random.Random(SEED + 7)
    for _ in range(10):
        S = random_set(rng, 12, 1, 3)
        a = minimal_generating_set(S, jobs=1)
        b = minimal_generating_set(S, jobs=jobs)
        assert a.elements == b.elements and a.status == b.status and a.tried == b.tried


def test_gamma_chunks_cover_prefix():
    for d, r, budget, jobs in [(6, 2, 10**6, 1), (6, 2, 10**6, 4), (12, 3, 500, 3), (10, 1, 7, 2)]:
        chunks = _gamma_chunks(d, r, budget, jobs)
        assert sum(size for *_, size, _ in chunks) == min(budget, d ** r)
        assert chunks[0][0] == 0 and chunks[0][3] == 0
        for (lo, hi, size, start), nxt in zip(chunks, chunks[1:]):
            assert hi == nxt[0] and nxt[3] == start + size


@pytest.mark.parametrize("d,n", [(2, 1), (3, 1), (4, 1), (6, 1), (2, 2)])
def test_minimal_matches_brute_force(d, n):
    rng = random.Random(SEED + 200 + d + n)
    for _ in range(8):
        S = random_set(rng, d, n, rng.randint(1, 3))
        res = minimal_generating_set(S)
        assert same_group(res.elements, S)
        if res.status != "budget-capped" and len(enumerate_group(S)) <= 64:
            assert len(res.elements) == brute_min_generators(S, max_size=len(res.elements))


def test_gram_schmidt_twelve():
    S = [X(12, 3), Z(12, 6), X(12, 4), Z(12, 4)]
    gs = gram_schmidt_generating_set(S, prune=True)
    assert same_group(gs.elements(), S)
    assert subgroup_order(S) == 432
    for i, (s, t) in enumerate(zip(gs.S1, gs.S2)):
        assert comm_phase(s, t) == gs.betas[i]
    assert verify_pairs(gs.S1, gs.S2)


@pytest.mark.parametrize("d,n", SMALL)
def test_gram_schmidt_structure(d, n):
    rng = random.Random(SEED + 300 + 10 * d + n)
    for _ in range(15):
        S = random_set(rng, d, n, rng.randint(1, 5))
        for prune in (False, True):
            gs = gram_schmidt_generating_set(S, prune=prune)
            elems = gs.elements() + [gs.identity_gen]
            assert same_group(elems, S)
            assert len(gs.S1) == len(gs.S2) == len(gs.betas)
            if gs.S1:
                assert verify_pairs(gs.S1, gs.S2)
            for s, t, beta in zip(gs.S1, gs.S2, gs.betas):
                assert comm_phase(s, t) == beta
            for u in gs.U:
                assert all(comm_phase(u, g) == 0 for g in elems)


@pytest.mark.parametrize("d,n", SMALL)
def test_subgroup_order(d, n):
    rng = random.Random(SEED + 400 + 10 * d + n)
    for _ in range(25):
        S = random_set(rng, d, n, rng.randint(1, 4))
        g = enumerate_group(S)
        assert subgroup_order(S) == len(g)
        assert (d ** (2 * n + 1)) % len(g) == 0


def test_center_examples():
    assert center_of_pairs([X(2)], [Z(2)]) == [W(2, 1)]
    assert center_of_pairs([X(6, 2), X(6, 3)], [Z(6, 2), Z(6, 3)]) == [W(6, 2), W(6, 3)]
    assert center_of_pairs([X(6)], [Z(6)]) == [W(6, 5)]
    c = center_of_pairs([X(12, 2)], [Z(12, 3)])
    assert set(c) == {W(12, 6), X(12, 4), Z(12, 6)}
    with pytest.raises(NotPairs):
        center_of_pairs([X(6)], [X(6)])


def _center_matches(S, T):
    got = enumerate_group(center_of_pairs(S, T)).elements
    return got == brute_center(list(S) + list(T))


@pytest.mark.parametrize("d", [2, 3, 4, 6, 8, 10, 12])
def test_center_matches_enumeration(d):
    for f in range(1, d):
        for a in range(1, d):
            S, T = [X(d, a)], [Z(d, f)]
            if comm_phase(S[0], T[0]):
                assert _center_matches(S, T)
    pc = example_max_pairs(1, d)
    assert _center_matches(pc.S, pc.T)


def test_decompose_example():
    a, b, c = decompose_in_pair_basis(PauliElement.make(3, 1, 1, [2], [1]), [X(3)], [Z(3)])
    assert pair_product([X(3)], [Z(3)], a, b, c) == PauliElement.make(3, 1, 1, [2], [1])


@pytest.mark.parametrize("d", [2, 3, 6, 12])
def test_decompose_round_trip(d):
    rng = random.Random(SEED + 500 + d)
    pcs = [example_max_pairs(1, d), example_max_pairs(2, d)]
    pcs.append(type(pcs[0])((X(d, 2 if d > 2 else 1),), (Z(d),)))
    for pc in pcs:
        elems = enumerate_group(list(pc.S) + list(pc.T), cap=10**6).paulis()
        for p in rng.sample(elems, min(60, len(elems))):
            a, b, c = decompose_in_pair_basis(p, pc.S, pc.T)
            assert pair_product(pc.S, pc.T, a, b, c) == p


def test_decompose_outside_span():
    with pytest.raises(NotInSpan):
        decompose_in_pair_basis(X(6), [X(6, 2)], [Z(6)])
    with pytest.raises(NotInSpan):
        decompose_in_pair_basis(Z(12), [X(12, 2)], [Z(12, 3)])
    with pytest.raises(NotInSpan):
        # the scalars of <X^2, Z^3> at d = 12 are the multiples of w^6
        decompose_in_pair_basis(PauliElement.make(12, 1, 1, [2], [0]), [X(12, 2)], [Z(12, 3)])


def test_pair_bound_and_full_group():
    pc = achieve_relation((6, 8), 12)
    assert pair_group_order_bound(pc.S, pc.T) == 36
    S, T = [X(12, 3), X(12, 4)], [Z(12, 6), Z(12, 4)]
    assert not is_full_group(S, T)
    for d in (6, 10, 15):
        pc = example_max_pairs(1, d)
        assert is_full_group(pc.S, pc.T)
        assert len(enumerate_group(list(pc.S) + list(pc.T))) == d ** 3
    assert not is_full_group([X(6, 2)], [Z(6)])


def test_center_twelve_pairs_matches_enumeration():
    assert _center_matches([X(12, 3), X(12, 4)], [Z(12, 6), Z(12, 4)])
