"""Subgroups of the qudit Pauli group: identity phases, generating sets, orders and centers."""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd, prod
from typing import List, Optional, Sequence, Tuple

from . import kernels
from .errors import NotInSpan, NotInvertible, NotPairs, ShapeMismatch
from .normal_forms import asnf, kernel_generators, snf, solve_in_span
from .pauli import (PauliElement, comm_phase, common_space, commutation_matrix, pmul, ppow,
                    product, symplectic_matrix)
from .relations import verify_pairs
from .zmatrix import ExactMatrix, inverse, is_invertible
from .zring import Dimension, solve_congruence

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class IdentityGenerator:
    """``w^mu I`` generating the scalar elements of a subgroup; ``mu == d`` means only ``I``."""

    d: int
    n: int
    mu: int

    @property
    def element(self) -> PauliElement:
        return PauliElement.phase_only(self.d, self.n, self.mu % self.d)

    @property
    def order(self) -> int:
        return self.d // self.mu

    def phases(self) -> frozenset:
        return frozenset(range(0, self.d, self.mu))

    def contains(self, phase: int) -> bool:
        return phase % self.mu == 0


def _power_phases(S: Sequence[PauliElement], d: int) -> int:
    """``d/2`` if some generator has ``q^d = -I``, else ``d``."""
    if d % 2 == 0:
        for q in S:
            if ppow(q, d).phase == d // 2:
                return d // 2
    return d


def _commutator_gcd(S: Sequence[PauliElement], mu: int) -> int:
    for j in range(len(S)):
        for l in range(j + 1, len(S)):
            if mu == 1:
                return 1
            mu = gcd(comm_phase(S[j], S[l]), mu)
    return mu


def _kernel_columns(S: Sequence[PauliElement], d: int, n: int) -> List[Tuple[int, ...]]:
    K = kernel_generators(symplectic_matrix(S, d, n))
    return [K.column(c) for c in range(K.cols)]


def identity_subgroup_generator(S: Sequence[PauliElement]) -> IdentityGenerator:
    """Generator of ``{g in <S> : g is a phase times I}``.

    Phases come from d-th powers, pairwise commutators and the products
    ``prod_j q_j^{K_ji}`` over kernel generators K of the symplectic matrix.
    """
    d, n = common_space(S)
    mu = _power_phases(S, d)
    mu = _commutator_gcd(S, mu)
    if mu == 1:
        return IdentityGenerator(d, n, 1)
    for col in _kernel_columns(S, d, n):
        mu = gcd(product(S, col).phase, mu)
        if mu == 1:
            break
    return IdentityGenerator(d, n, mu)


def transform_generators(S: Sequence[PauliElement], A: ExactMatrix) -> List[PauliElement]:
    """``t_i = prod_j s_j^{A_ji}``; generates the same group when ``A`` is invertible."""
    d, _ = common_space(S)
    if A.rows != len(S) or not A.is_square:
        raise ShapeMismatch(f"need a {len(S)}x{len(S)} matrix, got {A.rows}x{A.cols}")
    A = A if A.modulus == d else A.reduce(d)
    if not is_invertible(A):
        raise NotInvertible("transformation matrix is not invertible over Z_d")
    return [product(S, A.column(i)) for i in range(A.cols)]


@dataclass(frozen=True)
class NearMinimal:
    """``<T' + [p]> = <S>`` with ``|T'|`` the number of invariant factors of the vectors."""

    T: Tuple[PauliElement, ...]
    p: PauliElement
    identity: IdentityGenerator
    right: ExactMatrix  # column i gives the exponents of T[i] over S

    @property
    def r(self) -> int:
        return len(self.T)

    def elements(self) -> List[PauliElement]:
        return list(self.T) + [self.p]


def near_minimal_generating_set(S: Sequence[PauliElement]) -> NearMinimal:
    d, n = common_space(S)
    ident = identity_subgroup_generator(S)
    res = snf(symplectic_matrix(S))
    r = len(res.invariant_factors)
    if r == len(S):
        T = tuple(S)
        right = ExactMatrix.identity(len(S), d)
    else:
        T = tuple(product(S, res.right.column(i)) for i in range(r))
        right = res.right
    return NearMinimal(T, ident.element, ident, right)


@dataclass(frozen=True)
class MinimalGeneratingSet:
    """``status`` is ``minimal`` (size proven least), ``exhaustive`` (no size-r set
    exists, so the near-minimal set is minimal) or ``budget-capped``."""

    elements: Tuple[PauliElement, ...]
    status: str
    r: int
    tried: int = 0
    gamma: Optional[Tuple[int, ...]] = None
    near: Optional[NearMinimal] = field(default=None, compare=False)


def _gamma_chunks(d: int, r: int, budget: int, jobs: int):
    """Split the first ``min(budget, d^r)`` tuples, in lexicographic order, by leading entry."""
    block = d ** (r - 1)
    total = min(budget, d ** r)
    lead = -(-total // block)
    step = -(-lead // jobs)
    chunks, start = [], 0
    for lo in range(0, lead, step):
        hi = min(lead, lo + step)
        size = min((hi - lo) * block, total - start)
        chunks.append((lo, hi, size, start))
        start += size
    return chunks


def _search_chunk(args):
    base, kcols, delta, mu0, d, r, lo, hi, size = args
    return kernels.gamma_search(base, kcols, delta, mu0, d, r, size, lo, hi)


def minimal_generating_set(S: Sequence[PauliElement], budget: int = DEFAULT_BUDGET,
                           jobs: int = 1) -> MinimalGeneratingSet:
    """Smallest generating set, searching phase adjustments ``p^gamma_i q_i`` of a
    near-minimal set when the size is not settled directly."""
    d, n = common_space(S)
    near = near_minimal_generating_set(S)
    T, p, mu, r = near.T, near.p, near.identity.mu, near.r
    if r == 0:
        return MinimalGeneratingSet((p,), "minimal", 0, near=near)
    if mu == d:
        return MinimalGeneratingSet(T, "minimal", r, near=near)
    if r == len(S):
        return MinimalGeneratingSet(tuple(S), "minimal", r, near=near)
    if Dimension.of(d).is_prime:
        if identity_subgroup_generator(T).mu != d:
            return MinimalGeneratingSet(T, "minimal", r, gamma=(0,) * r, near=near)
        return MinimalGeneratingSet(T + (p,), "exhaustive", r, near=near)

    mu0 = _commutator_gcd(T, _power_phases(T, d))
    kcols = _kernel_columns(T, d, n)
    base = [product(T, col).phase for col in kcols]
    delta = mu
    chunks = _gamma_chunks(d, r, budget, max(1, jobs))
    tasks = [(base, [list(c) for c in kcols], delta, mu0, d, r, lo, hi, size)
             for lo, hi, size, _ in chunks]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_chunk, tasks))
    else:
        results = []
        for task in tasks:
            results.append(_search_chunk(task))
            if results[-1][0] is not None:
                break
    tried = 0
    for (gamma, count), (_, _, _, start) in zip(results, chunks):
        if gamma is not None:
            tried = start + count
            out = tuple(pmul(ppow(p, g), q) for g, q in zip(gamma, T))
            return MinimalGeneratingSet(out, "minimal", r, tried, tuple(gamma), near)
        tried = start + count
    status = "exhaustive" if tried >= d ** r else "budget-capped"
    return MinimalGeneratingSet(T + (p,), status, r, tried, near=near)


@dataclass(frozen=True)
class GenSetDecomposition:
    """Pairs ``(S1[i], S2[i])`` with commutator ``betas[i]`` and central ``U``."""

    S1: Tuple[PauliElement, ...]
    S2: Tuple[PauliElement, ...]
    U: Tuple[PauliElement, ...]
    identity_gen: PauliElement
    betas: Tuple[int, ...]
    L: ExactMatrix

    def elements(self) -> List[PauliElement]:
        out = []
        for s, t in zip(self.S1, self.S2):
            out += [s, t]
        return out + list(self.U)


def gram_schmidt_generating_set(S: Sequence[PauliElement], prune: bool = False) -> GenSetDecomposition:
    """Rewrite ``S`` as non-commuting pairs plus central elements via the
    alternating Smith form of its commutation matrix."""
    d, n = common_space(S)
    dec = asnf(commutation_matrix(S))
    Linv = inverse(dec.L)
    new = [product(S, Linv.row(i)) for i in range(len(S))]
    r = dec.r
    S1 = tuple(new[2 * t] for t in range(r))
    S2 = tuple(new[2 * t + 1] for t in range(r))
    U = list(new[2 * r:])
    ident = identity_subgroup_generator(S).element
    if prune and U:
        target = subgroup_order(S)
        i = 0
        while i < len(U):
            rest = list(S1) + list(S2) + U[:i] + U[i + 1:]
            if rest and subgroup_order(rest) == target:
                del U[i]
            else:
                i += 1
    return GenSetDecomposition(S1, S2, tuple(U), ident, dec.betas, dec.L)


def subgroup_order(S: Sequence[PauliElement]) -> int:
    """``|I_S| * prod_i d / gcd(d_i, d)`` over the invariant factors ``d_i`` of the vectors."""
    d, _ = common_space(S)
    ident = identity_subgroup_generator(S)
    factors = snf(symplectic_matrix(S)).invariant_factors
    return ident.order * prod(d // gcd(f, d) for f in factors)


def _check_pairs(S, T) -> None:
    v = verify_pairs(S, T)
    if not v:
        raise NotPairs(f"{v.reason} at {v.where}")


def _annihilator(f: int, d: int) -> int:
    return d // gcd(f, d)


def center_of_pairs(S: Sequence[PauliElement], T: Sequence[PauliElement]) -> List[PauliElement]:
    """Generators of the center of ``<S, T>``; identities are omitted."""
    _check_pairs(S, T)
    d, n = common_space(list(S) + list(T))
    out = []
    for s, t in zip(S, T):
        f = comm_phase(s, t)
        a = _annihilator(f, d)
        for g in (PauliElement.phase_only(d, n, f), ppow(s, a), ppow(t, a)):
            if not g.is_identity and g not in out:
                out.append(g)
    return out or [PauliElement.identity(d, n)]


def pair_product(S, T, a, b, c: int = 0) -> PauliElement:
    """``w^c s_0^a_0 t_0^b_0 s_1^a_1 t_1^b_1 ...``"""
    d, n = common_space(list(S) + list(T))
    out = PauliElement.phase_only(d, n, c)
    for s, t, x, y in zip(S, T, a, b):
        out = pmul(pmul(out, ppow(s, x % d)), ppow(t, y % d))
    return out


def decompose_in_pair_basis(p: PauliElement, S: Sequence[PauliElement],
                            T: Sequence[PauliElement]) -> Tuple[Tuple[int, ...], Tuple[int, ...], int]:
    """Exponents ``(a, b, c)`` with ``p == w^c prod_i s_i^a_i t_i^b_i``."""
    _check_pairs(S, T)
    d, n = common_space(list(S) + list(T) + [p])
    a, b = [], []
    for s, t in zip(S, T):
        f = comm_phase(s, t)
        x = solve_congruence(f, comm_phase(p, t), d)
        y = solve_congruence(f, comm_phase(s, p), d)
        if x is None or y is None:
            raise NotInSpan("commutators of p are incompatible with the pairs")
        a.append(x)
        b.append(y)
    if pair_product(S, T, a, b).vec != p.vec:
        # the formula fixes a_i, b_i only modulo the annihilator of f_i
        cols = []
        for s, t in zip(S, T):
            cols += [s.vec, t.vec]
        x = solve_in_span(ExactMatrix.from_columns(cols, d, rows=2 * n), p.vec)
        if x is None:
            raise NotInSpan("vector part of p is outside the span of the pairs")
        a, b = list(x[0::2]), list(x[1::2])
    c = (p.phase - pair_product(S, T, a, b).phase) % d
    if not identity_subgroup_generator(list(S) + list(T)).contains(c):
        raise NotInSpan("phase of p is not reachable from the pairs")
    return tuple(a), tuple(b), c


def pair_group_order_bound(S: Sequence[PauliElement], T: Sequence[PauliElement]) -> int:
    """``prod_i a_i^2`` where ``a_i`` is the additive order of the commutator of pair i."""
    _check_pairs(S, T)
    d, _ = common_space(list(S) + list(T))
    return prod(_annihilator(comm_phase(s, t), d) ** 2 for s, t in zip(S, T))


def is_full_group(S: Sequence[PauliElement], T: Sequence[PauliElement]) -> bool:
    _check_pairs(S, T)
    d, n = common_space(list(S) + list(T))
    return subgroup_order(list(S) + list(T)) == d ** (2 * n + 1)
