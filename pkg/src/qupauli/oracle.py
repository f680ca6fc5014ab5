"""Brute-force reference computations for small instances.

Nothing here uses the normal forms or the structural results; every answer is
obtained by enumeration so it can be used to check the analytic code.
"""
from dataclasses import dataclass
from itertools import combinations, permutations
from itertools import product as cartesian
from math import gcd
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from . import kernels
from .errors import CapExceeded, TooLarge
from .pauli import PauliElement, common_space

DEFAULT_CAP = 10**5

Element = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class EnumeratedGroup:
    d: int
    n: int
    elements: FrozenSet[Element]
    cap: int

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        if isinstance(p, PauliElement):
            p = (p.phase, p.vec)
        return p in self.elements

    def paulis(self) -> List[PauliElement]:
        return [PauliElement(self.d, self.n, j, v) for j, v in sorted(self.elements)]

    def phases(self) -> FrozenSet[int]:
        """Phase exponents of the scalar elements."""
        return frozenset(j for j, v in self.elements if not any(v))


def enumerate_group(S: Sequence[PauliElement], cap: int = DEFAULT_CAP) -> EnumeratedGroup:
    """Breadth-first closure of ``S`` under right multiplication."""
    if cap < 1:
        raise ValueError("cap must be positive")
    d, n = common_space(S)
    gens = [(p.phase, p.vec) for p in S]
    elems = kernels.closure(gens, d, n, cap)
    if elems is None:
        raise CapExceeded(f"group has more than {cap} elements")
    return EnumeratedGroup(d, n, frozenset(elems), cap)


def brute_identity_phases(S: Sequence[PauliElement], cap: int = DEFAULT_CAP) -> FrozenSet[int]:
    """Phase exponents j with w^j I in the group."""
    return enumerate_group(S, cap).phases()


def _commutes(u: Sequence[int], v: Sequence[int], d: int) -> bool:
    n = len(u) // 2
    return sum(u[n + i] * v[i] - u[i] * v[n + i] for i in range(n)) % d == 0


def brute_center(S: Sequence[PauliElement], cap: int = DEFAULT_CAP) -> FrozenSet[Element]:
    """Elements of the group commuting with every generator (hence with everything)."""
    group = enumerate_group(S, cap)
    d = group.d
    return frozenset(e for e in group.elements
                     if all(_commutes(e[1], p.vec, d) for p in S))


def _nonzero_vectors(d: int, n: int) -> List[Tuple[int, ...]]:
    return [v for v in cartesian(range(d), repeat=2 * n) if any(v)]


def commutation_graph(d: int, n: int = 1):
    """Vertices (nonzero vectors) and adjacency bitsets of the non-commutation graph."""
    verts = _nonzero_vectors(d, n)
    adj = []
    for u in verts:
        bits = 0
        for j, v in enumerate(verts):
            if not _commutes(u, v, d):
                bits |= 1 << j
        adj.append(bits)
    return verts, adj


def brute_max_clique(d: int, limit: int = 12, witness: bool = False):
    """Size of a largest set of pairwise non-commuting single-qudit Paulis.

    Exact branch and bound with a greedy-colouring bound over all ``d*d - 1``
    nonzero vectors (vectors in one unit-scaling class are never adjacent, so
    the colouring bound is close to tight).
    """
    if d > limit:
        raise TooLarge(f"clique search capped at d <= {limit}")
    verts, adj = commutation_graph(d, 1)
    size, members = kernels.max_clique(adj, len(verts))
    if witness:
        return size, [verts[i] for i in members]
    return size


def brute_max_pairs(d: int, n: int, cap_k: int = None, limit: int = 4096, witness: bool = False):
    """Largest number of non-commuting pairs on ``n`` qudits, by exhaustive search.

    Pairs are enumerated in canonical order (each pair sorted, pairs sorted by
    their first element) over phaseless vectors, with a counting bound.
    ``cap_k`` stops the search once that many pairs are found.
    """
    nv = d ** (2 * n) - 1
    if nv > limit:
        raise TooLarge(f"{nv} vectors exceed the search limit {limit}")
    verts = _nonzero_vectors(d, n)
    comm = []
    for u in verts:
        bits = 0
        for j, v in enumerate(verts):
            if _commutes(u, v, d):
                bits |= 1 << j
        comm.append(bits)
    if cap_k is None:
        cap_k = nv
    size, pairs = kernels.max_pairs(comm, nv, cap_k)
    if witness:
        return size, [(verts[s], verts[t]) for s, t in pairs]
    return size


def iter_pair_collections(d: int, n: int, k: int) -> Iterator[List[Tuple[Tuple[int, ...], Tuple[int, ...]]]]:
    """Every canonical collection of ``k`` non-commuting pairs of phaseless vectors."""
    verts = _nonzero_vectors(d, n)
    nv = len(verts)

    def rec(start, allowed, chosen):
        if len(chosen) == k:
            yield list(chosen)
            return
        for s in range(start, nv):
            if s not in allowed:
                continue
            for t in range(s + 1, nv):
                if t in allowed and not _commutes(verts[s], verts[t], d):
                    rest = {x for x in allowed if x > s
                            and _commutes(verts[x], verts[s], d)
                            and _commutes(verts[x], verts[t], d)}
                    chosen.append((verts[s], verts[t]))
                    yield from rec(s + 1, rest, chosen)
                    chosen.pop()

    yield from rec(0, set(range(nv)), [])


def brute_achievable_relations(d: int, n: int, k: int) -> FrozenSet[Tuple[int, ...]]:
    """All commutator tuples (f_0..f_{k-1}) realized by some ordered collection of k pairs."""
    found = set()
    for coll in iter_pair_collections(d, n, k):
        phases = []
        for s, t in coll:
            c = sum(s[n + i] * t[i] - s[i] * t[n + i] for i in range(n)) % d
            phases.append(c)
        for perm in permutations(range(k)):
            for signs in cartesian((1, -1), repeat=k):
                found.add(tuple(signs[i] * phases[perm[i]] % d for i in range(k)))
    return frozenset(found)


def brute_kernel(columns: Sequence[Sequence[int]], d: int) -> FrozenSet[Tuple[int, ...]]:
    """All x in Z_d^l with sum_j x_j * columns[j] == 0."""
    l = len(columns)
    rows = len(columns[0]) if columns else 0
    out = set()
    for x in cartesian(range(d), repeat=l):
        if all(sum(x[j] * columns[j][i] for j in range(l)) % d == 0 for i in range(rows)):
            out.add(x)
    return frozenset(out)


def brute_span(columns: Sequence[Sequence[int]], d: int, rows: int) -> FrozenSet[Tuple[int, ...]]:
    """Every Z_d-combination of the given columns."""
    span = {(0,) * rows}
    frontier = list(span)
    while frontier:
        new = []
        for v in frontier:
            for c in columns:
                w = tuple((a + b) % d for a, b in zip(v, c))
                if w not in span:
                    span.add(w)
                    new.append(w)
        frontier = new
    return frozenset(span)


def brute_min_generators(S: Sequence[PauliElement], max_size: int = 3,
                         cap: int = DEFAULT_CAP) -> int:
    """Smallest size of a generating subset drawn from the enumerated group (tiny groups only)."""
    group = enumerate_group(S, cap)
    d, n = group.d, group.n
    target = group.elements
    elems = sorted(target)
    if len(target) == 1:
        return 1
    for size in range(1, max_size + 1):
        for combo in combinations(elems, size):
            gens = [PauliElement(d, n, j, v) for j, v in combo]
            got = kernels.closure([(p.phase, p.vec) for p in gens], d, n, len(target))
            if got is not None and len(got) == len(target):
                return size
    raise CapExceeded(f"no generating subset of size <= {max_size}")


def phase_generator(phases, d: int) -> int:
    """Smallest mu with <mu> equal to the given subgroup of Z_d (d when trivial)."""
    g = d
    for j in phases:
        g = gcd(g, j)
    return g
