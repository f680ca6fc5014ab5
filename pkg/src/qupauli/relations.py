"""Non-commuting pairs and sets: extremal counts, constructions and achievability.

Commutators follow the literal symplectic convention, so ``[[X, Z^b]] = -b``.
"""
from dataclasses import dataclass
from math import gcd, prod
from typing import List, Optional, Sequence, Tuple

from .errors import (InvalidRelation, InvalidScaling, NotAlternating, NotNonCommuting,
                     ShapeMismatch)
from .normal_forms import asnf
from .pauli import PauliElement, comm_phase, common_space, tensor
from .zmatrix import ExactMatrix
from .zring import Dimension, solve_congruence


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural check; falsy on failure, with the first offending indices."""

    ok: bool
    where: Optional[Tuple[int, int]] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PairCollection:
    S: Tuple[PauliElement, ...]
    T: Tuple[PauliElement, ...]

    def __post_init__(self):
        if len(self.S) != len(self.T):
            raise ShapeMismatch(f"{len(self.S)} vs {len(self.T)} elements")

    def __len__(self) -> int:
        return len(self.S)

    @property
    def n(self) -> int:
        return self.S[0].n if self.S else 0

    def commutators(self) -> Tuple[int, ...]:
        return tuple(comm_phase(s, t) for s, t in zip(self.S, self.T))


def verify_pairs(S: Sequence[PauliElement], T: Sequence[PauliElement]) -> Verdict:
    if len(S) != len(T):
        raise ShapeMismatch(f"{len(S)} vs {len(T)} elements")
    if not S:
        return Verdict(True)
    common_space(list(S) + list(T))
    k = len(S)
    for i in range(k):
        for j in range(i + 1, k):
            if comm_phase(S[i], S[j]):
                return Verdict(False, (i, j), "S elements do not commute")
            if comm_phase(T[i], T[j]):
                return Verdict(False, (i, j), "T elements do not commute")
    for i in range(k):
        for j in range(k):
            c = comm_phase(S[i], T[j])
            if i == j and c == 0:
                return Verdict(False, (i, j), "matched pair commutes")
            if i != j and c != 0:
                return Verdict(False, (i, j), "unmatched pair does not commute")
    return Verdict(True)


def verify_noncomm_set(S: Sequence[PauliElement]) -> Verdict:
    for i in range(len(S)):
        for j in range(i + 1, len(S)):
            if comm_phase(S[i], S[j]) == 0:
                return Verdict(False, (i, j), "elements commute")
    return Verdict(True)


def max_pairs_count(n: int, d: int) -> int:
    return n * Dimension.of(d).m


def _x_power(d: int, n: int, qudit: int, a: int) -> PauliElement:
    x = [0] * n
    x[qudit] = a
    return PauliElement.make(d, n, 0, x, [0] * n)


def _z_power(d: int, n: int, qudit: int, b: int) -> PauliElement:
    z = [0] * n
    z[qudit] = b
    return PauliElement.make(d, n, 0, [0] * n, z)


def example_max_pairs(n: int, d: int) -> PairCollection:
    """X- and Z-powers by ``d / p^alpha`` for each prime power, on every qudit.

    Pair ``i + j*n`` lives on qudit ``i`` and uses the j-th prime power.
    """
    dim = Dimension.of(d)
    S, T = [], []
    for q in dim.prime_powers:
        for i in range(n):
            S.append(_x_power(d, n, i, d // q))
            T.append(_z_power(d, n, i, d // q))
    return PairCollection(tuple(S), tuple(T))


def _check_relation(f: Sequence[int], d: int) -> List[int]:
    f = [int(x) % d for x in f]
    if not f:
        raise InvalidRelation("relation tuple is empty")
    if any(x == 0 for x in f):
        raise InvalidRelation("relation entries must be nonzero modulo d")
    return f


def _support_groups(f: Sequence[int], dim: Dimension) -> List[List[int]]:
    """For each prime power q_j, indices i with f_i not divisible by q_j."""
    return [[i for i, x in enumerate(f) if x % q] for q in dim.prime_powers]


def min_qudits_for_relation(f: Sequence[int], d: int) -> int:
    dim = Dimension.of(d)
    f = _check_relation(f, d)
    return max(len(g) for g in _support_groups(f, dim))


def achieve_relation(f: Sequence[int], d: int) -> PairCollection:
    """CSS pairs (X-type S, Z-type T) with ``[[s_i, t_i]] = f_i`` on the fewest qudits.

    Every entry not divisible by the prime power q_j receives its own qudit
    label in column j of a label matrix.  The X part of s_i on qudit h is the
    product of the prime powers whose label for row i differs from h, and
    ``t_i`` is the Z-type Pauli on ``-beta_i`` times that vector, with
    ``beta_i`` solving a linear congruence.
    """
    dim = Dimension.of(d)
    f = _check_relation(f, d)
    k = len(f)
    groups = _support_groups(f, dim)
    n = max(len(g) for g in groups)
    qs = dim.prime_powers

    labels = [[0] * dim.m for _ in range(k)]
    for j, members in enumerate(groups):
        for h, i in enumerate(members, start=1):
            labels[i][j] = h

    S, T = [], []
    for i in range(k):
        u = [prod(q for j, q in enumerate(qs) if labels[i][j] != h) % d
             for h in range(1, n + 1)]
        divisible = prod(q for j, q in enumerate(qs) if labels[i][j] == 0)
        gamma = f[i] // divisible
        # the commutator equals beta' * f_i * d'' with d'' defined below
        inner = sum(prod(q * q for j, q in enumerate(qs)
                         if labels[i][j] not in (0, h)) for h in range(1, n + 1))
        d2 = divisible * inner
        beta_prime = solve_congruence(f[i] * d2, f[i], d)
        if beta_prime is None:  # pragma: no cover - solvable by construction
            raise ArithmeticError("label congruence has no solution")
        beta = gamma * beta_prime
        S.append(PauliElement.make(d, n, 0, u, [0] * n))
        T.append(PauliElement.make(d, n, 0, [0] * n, [-beta * e for e in u]))
    return PairCollection(tuple(S), tuple(T))


def is_achievable_max_relation(f: Sequence[int], n: int, d: int) -> bool:
    """Whether ``f`` of length n*m is realized by a maximum collection on ``n`` qudits.

    Each entry must be a multiple ``t * d / q_j`` (t not divisible by q_j) for
    exactly one prime power q_j, and every q_j must receive exactly n entries.
    """
    dim = Dimension.of(d)
    if len(f) != n * dim.m:
        raise ShapeMismatch(f"expected {n * dim.m} entries, got {len(f)}")
    f = _check_relation(f, d)
    counts = [0] * dim.m
    for x in f:
        owners = [j for j, q in enumerate(dim.prime_powers) if x % q]
        if len(owners) != 1:
            return False
        j = owners[0]
        q = dim.prime_powers[j]
        if x % (d // q):
            return False
        counts[j] += 1
    return all(c == n for c in counts)


def scale_relation(f: Sequence[int], beta: Sequence[int], d: int) -> Tuple[int, ...]:
    if len(f) != len(beta):
        raise ShapeMismatch("scaling vector has the wrong length")
    out = tuple(b * x % d for b, x in zip(beta, f))
    if any(x == 0 for x in out):
        raise InvalidScaling("scaling sends an entry to zero")
    return out


def permute_relation(f: Sequence[int], sigma: Sequence[int]) -> Tuple[int, ...]:
    """Entry i of the result is ``f[sigma[i]]``."""
    if sorted(sigma) != list(range(len(f))):
        raise ShapeMismatch("sigma is not a permutation of the indices")
    return tuple(f[s] for s in sigma)


def symplectic_gram(P: ExactMatrix) -> ExactMatrix:
    """``P @ Lambda @ P.T`` for the standard alternating form on Z_d^{2n}."""
    d = P.modulus
    rows = [P.row(i) for i in range(P.rows)]
    n = P.cols // 2
    out = [[sum(u[n + t] * v[t] - u[t] * v[n + t] for t in range(n)) % d for v in rows]
           for u in rows]
    return ExactMatrix.from_rows(out, d, cols=P.rows)


def realize_commutation_matrix(C: ExactMatrix) -> Tuple[ExactMatrix, int]:
    """Rows of ``P`` are Pauli vectors on ``n`` qudits whose commutators form ``C``.

    ``n`` is half the rank of ``C``, the least possible.
    """
    d = C.modulus
    if d is None or not C.is_alternating():
        raise NotAlternating("need an alternating matrix over Z_d")
    k = C.rows
    dec = asnf(C)
    r = dec.r
    if r == 0:
        return ExactMatrix.zeros(k, 0, d), 0
    pairs = achieve_relation(dec.betas, d)
    n = pairs.n
    Q = []
    for s, t in zip(pairs.S, pairs.T):
        Q.append(list(s.vec))
        Q.append(list(t.vec))
    Q += [[0] * (2 * n) for _ in range(k - 2 * r)]
    P = dec.L @ ExactMatrix.from_rows(Q, d, cols=2 * n)
    return P, n


def paulis_from_rows(P: ExactMatrix) -> List[PauliElement]:
    return [PauliElement.from_vector(P.modulus, P.row(i)) for i in range(P.rows)]


def max_noncomm_set_single_qudit(d: int) -> List[PauliElement]:
    """One representative (lexicographically least) of each unit-scaling class
    of primitive vectors ``(a, b)``; these pairwise fail to commute."""
    units = [u for u in range(1, d) if gcd(u, d) == 1]
    reps = set()
    for a in range(d):
        for b in range(d):
            if gcd(gcd(a, b), d) == 1:
                reps.add(min(((u * a) % d, (u * b) % d) for u in units))
    return [PauliElement(d, 1, 0, v) for v in sorted(reps)]


def jordan_wigner_compose(S: Sequence[PauliElement], S2: Sequence[PauliElement]) -> List[PauliElement]:
    """Combine non-commuting sets on n and n' qudits into one on n + n' qudits."""
    for name, X in (("first", S), ("second", S2)):
        if not X:
            raise NotNonCommuting(f"{name} set is empty")
        v = verify_noncomm_set(X)
        if not v:
            raise NotNonCommuting(f"{name} set fails at {v.where}")
    d, _ = common_space(S)
    d2, n2 = common_space(S2)
    if d != d2:
        raise NotNonCommuting("sets use different dimensions")
    ident = PauliElement.identity(d, n2)
    out = [tensor(s, ident) for s in S[1:]]
    out += [tensor(S[0], s) for s in S2]
    return out
