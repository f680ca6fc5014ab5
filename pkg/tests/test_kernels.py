import random

import pytest

from qupauli import kernels
from qupauli import _pykernels as py
from qupauli.groups import _kernel_columns, _power_phases, _commutator_gcd, near_minimal_generating_set
from qupauli.oracle import commutation_graph
from qupauli.pauli import product
from conftest import SEED, random_pauli

pytestmark = pytest.mark.skipif(kernels.compiled_backend is None,
                                reason="compiled kernels not built")
C = kernels.compiled_backend


def _sorted(elems):
    return sorted(elems)


@pytest.mark.parametrize("d,n", [(2, 1), (2, 2), (3, 1), (6, 1), (12, 1), (4, 2)])
def test_closure_agrees(d, n):
    rng = random.Random(SEED + d + n)
    for _ in range(10):
        gens = [(p.phase, p.vec) for p in (random_pauli(rng, d, n) for _ in range(rng.randint(1, 3)))]
        a = py.closure(gens, d, n, 10**5)
        b = C.closure(gens, d, n, 10**5)
        assert _sorted(a) == _sorted(b)


def test_closure_cap_agrees():
    gens = [(0, (1, 0)), (0, (0, 1))]
    assert py.closure(gens, 5, 1, 10) is None and C.closure(gens, 5, 1, 10) is None


@pytest.mark.parametrize("d", range(2, 11))
def test_clique_agrees(d):
    verts, adj = commutation_graph(d)
    a, b = py.max_clique(adj, len(verts)), C.max_clique(adj, len(verts))
    assert a[0] == b[0]


def _comm_bits(d, n):
    verts, adj = commutation_graph(d, n)
    full = (1 << len(verts)) - 1
    return [full & ~bits for bits in adj], len(verts)


@pytest.mark.parametrize("d,n", [(2, 1), (4, 1), (6, 1), (2, 2), (3, 1)])
def test_pairs_agree(d, n):
    comm, nv = _comm_bits(d, n)
    for cap in (1, nv):
        assert py.max_pairs(comm, nv, cap) == C.max_pairs(comm, nv, cap)


@pytest.mark.parametrize("d", [6, 10, 12])
def test_gamma_search_agrees(d):
    rng = random.Random(SEED + 900 + d)
    for _ in range(15):
        S = [random_pauli(rng, d, 2) for _ in range(4)]
        T = list(near_minimal_generating_set(S).T)
        if not T:
            continue
        kcols = _kernel_columns(T, d, 2)
        base = [product(T, c).phase for c in kcols]
        mu0 = _commutator_gcd(T, _power_phases(T, d))
        delta = rng.choice([1, 2, 3, d // 2])
        args = (base, [list(c) for c in kcols], delta, mu0, d, len(T))
        for budget, lo, hi in [(10**5, 0, None), (17, 0, None), (10**5, 1, 3)]:
            assert py.gamma_search(*args, budget, lo, hi) == C.gamma_search(*args, budget, lo, hi)
