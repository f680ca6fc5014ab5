"""Smith, alternating Smith and Howell normal forms with transformation witnesses.

All routines accept matrices over Z (``modulus is None``) or over Z_d where
that makes sense, and return immutable ``ExactMatrix`` witnesses that
reconstruct the input exactly.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import NotAlternating, RingMismatch, ShapeMismatch
from .zmatrix import ExactMatrix
from .zring import ext_gcd, normalizing_unit, unit_inverse


@dataclass(frozen=True)
class SnfResult:
    D: ExactMatrix
    left: ExactMatrix
    right: ExactMatrix
    invariant_factors: Tuple[int, ...]


@dataclass(frozen=True)
class AsnfResult:
    B: ExactMatrix
    L: ExactMatrix
    betas: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.betas)


@dataclass(frozen=True)
class HnfResult:
    H: ExactMatrix
    L: ExactMatrix
    kernel: ExactMatrix
    pivots: Tuple[Tuple[int, int], ...]  # (row, column) of each pivot, in column order

    def kernel_of_input(self, cols: int) -> ExactMatrix:
        """Generators of the kernel of the original ``k x cols`` input."""
        lg = self.L @ self.kernel
        return ExactMatrix.from_rows(lg.to_lists()[:cols], lg.modulus, cols=lg.cols)


def _identity(k: int) -> List[List[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _to_matrix(rows: List[List[int]], modulus, cols: int) -> ExactMatrix:
    return ExactMatrix.from_rows(rows, modulus, cols=cols)


# Smith normal form


def snf(a: ExactMatrix) -> SnfResult:
    """Diagonalize ``a`` as ``left @ a @ right == D`` with a divisibility chain.

    Pivots are the smallest nonzero entry by absolute value.  Over Z_d every
    invariant factor is normalized to ``gcd(value, d)``.
    """
    m = a.modulus
    k, l = a.rows, a.cols
    D = a.to_lists()
    left, right = _identity(k), _identity(l)

    def red(x):
        return x % m if m else x

    def row_combine(t, i, x, y, u, v):
        # row_t, row_i <- x*row_t + y*row_i, u*row_t + v*row_i
        for M in (D, left):
            rt, ri = M[t], M[i]
            M[t] = [red(x * p + y * q) for p, q in zip(rt, ri)]
            M[i] = [red(u * p + v * q) for p, q in zip(rt, ri)]

    def col_combine(t, j, x, y, u, v):
        # col_t, col_j <- x*col_t + y*col_j, u*col_t + v*col_j
        for M in (D, right):
            for r in M:
                p, q = r[t], r[j]
                r[t], r[j] = red(x * p + y * q), red(u * p + v * q)

    for t in range(min(k, l)):
        best = None
        for i in range(t, k):
            for j in range(t, l):
                e = D[i][j]
                if e and (best is None or abs(e) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            for M in (D, left):
                M[t], M[i] = M[i], M[t]
        if j != t:
            for M in (D, right):
                for r in M:
                    r[t], r[j] = r[j], r[t]

        while True:
            for i in range(t + 1, k):
                if D[i][t]:
                    g, x, y = ext_gcd(D[t][t], D[i][t])
                    row_combine(t, i, x, y, -(D[i][t] // g), D[t][t] // g)
            for j in range(t + 1, l):
                if D[t][j]:
                    g, x, y = ext_gcd(D[t][t], D[t][j])
                    col_combine(t, j, x, y, -(D[t][j] // g), D[t][t] // g)
            if any(D[i][t] for i in range(t + 1, k)):
                continue
            p = D[t][t]
            bad = next((i for i in range(t + 1, k)
                        if any(D[i][j] % p for j in range(t + 1, l))), None)
            if bad is None:
                break
            row_combine(t, bad, 1, 1, 0, 1)

        if m is None:
            if D[t][t] < 0:
                for M in (D, left):
                    M[t] = [-e for e in M[t]]
        else:
            u = normalizing_unit(D[t][t], m)
            if u != 1:
                for M in (D, left):
                    M[t] = [e * u % m for e in M[t]]

    factors = tuple(D[t][t] for t in range(min(k, l)) if D[t][t])
    return SnfResult(_to_matrix(D, m, l), _to_matrix(left, m, k), _to_matrix(right, m, l), factors)


def snf_rank(a: ExactMatrix) -> int:
    """Number of invariant factors, i.e. the minimal number of generators of the column span."""
    return len(snf(a).invariant_factors)


# Alternating Smith normal form


class _Congruence:
    """Integer alternating matrix B with a witness L such that A = L B L^T."""

    def __init__(self, rows: List[List[int]]):
        self.k = len(rows)
        self.B = [list(r) for r in rows]
        self.L = _identity(self.k)

    def pair(self, al: int, be: int, k11: int, k12: int, k21: int, k22: int) -> None:
        """B <- K B K^T for the unimodular K acting on indices (al, be)."""
        B = self.B
        ra, rb = B[al], B[be]
        B[al] = [k11 * p + k12 * q for p, q in zip(ra, rb)]
        B[be] = [k21 * p + k22 * q for p, q in zip(ra, rb)]
        for r in B:
            p, q = r[al], r[be]
            r[al], r[be] = k11 * p + k12 * q, k21 * p + k22 * q
        # L <- L K^{-1}, where K^{-1} = [[k22, -k12], [-k21, k11]]
        for r in self.L:
            p, q = r[al], r[be]
            r[al], r[be] = k22 * p - k21 * q, -k12 * p + k11 * q

    def add(self, t: int, s: int, c: int) -> None:
        """Add c times index s to index t (rows and columns)."""
        B = self.B
        B[t] = [p + c * q for p, q in zip(B[t], B[s])]
        for r in B:
            r[t] += c * r[s]
        for r in self.L:
            r[s] -= c * r[t]

    def negate(self, t: int) -> None:
        B = self.B
        B[t] = [-p for p in B[t]]
        for r in B:
            r[t] = -r[t]
        for r in self.L:
            r[t] = -r[t]

    def permute(self, order: List[int]) -> None:
        B = self.B
        self.B = [[B[a][b] for b in order] for a in order]
        self.L = [[r[a] for a in order] for r in self.L]

    def pivotal(self, i: int) -> bool:
        return sum(1 for e in self.B[i] if e) == 1

    def paired(self, i: int) -> bool:
        """Row i and its partner row each hold a single nonzero entry."""
        if not self.pivotal(i):
            return False
        j = next(j for j, e in enumerate(self.B[i]) if e)
        return self.pivotal(j)


def _asnf_integer(rows: List[List[int]]) -> Tuple[List[List[int]], List[List[int]], List[int]]:
    cg = _Congruence(rows)
    B, k = cg.B, cg.k

    for i in range(k):
        B = cg.B
        if cg.paired(i) or not any(B[i]):
            continue
        j = next(j for j in range(k) if B[j][i])
        while not (cg.pivotal(i) and cg.pivotal(j)):
            # clear column i except at row j
            for jp in range(k):
                if jp != j and cg.B[jp][i]:
                    a, b = cg.B[j][i], cg.B[jp][i]
                    g, x, y = ext_gcd(a, b)
                    cg.pair(j, jp, x, y, -(b // g), a // g)
            # clear column j except at row i
            for ip in range(k):
                if ip != i and cg.B[ip][j]:
                    a, b = cg.B[i][j], cg.B[ip][j]
                    g, x, y = ext_gcd(a, b)
                    cg.pair(i, ip, x, y, -(b // g), a // g)

    B = cg.B
    firsts, seconds = [], []
    for i in range(k):
        if cg.pivotal(i):
            j = next(j for j in range(k) if B[i][j])
            if i < j:
                firsts.append(i)
                seconds.append(j)
    used = set(firsts) | set(seconds)
    order = [x for pair in zip(firsts, seconds) for x in pair]
    order += [i for i in range(k) if i not in used]
    cg.permute(order)
    r = len(firsts)
    for t in range(r):
        if cg.B[2 * t][2 * t + 1] < 0:
            cg.negate(2 * t + 1)

    # enforce beta_i | beta_j by turning each block pair into (gcd, lcm)
    for i in range(r):
        for j in range(i + 1, r):
            e1, e2, e3, e4 = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
            a, b = cg.B[e1][e2], cg.B[e3][e4]
            if b % a == 0:
                continue
            cg.add(e1, e3, 1)
            g, x, y = ext_gcd(a, b)
            cg.pair(e2, e4, x, y, -(b // g), a // g)
            cg.add(e3, e1, -(cg.B[e3][e2] // g))
            if cg.B[e3][e4] < 0:
                cg.negate(e4)

    betas = [cg.B[2 * t][2 * t + 1] for t in range(r)]
    return cg.B, cg.L, betas


def asnf(a: ExactMatrix) -> AsnfResult:
    """Congruence ``a == L @ B @ L.T`` with ``B`` a direct sum of blocks
    ``[[0, beta], [-beta, 0]]`` (then zeros) and ``beta_1 | beta_2 | ...``.

    Over Z_d the integer algorithm runs on an alternating lift; blocks that
    vanish mod d are dropped and each beta is normalized to ``gcd(beta, d)``.
    """
    if not a.is_alternating():
        raise NotAlternating("input matrix is not alternating")
    m = a.modulus
    k = a.rows
    if m is None:
        B, L, betas = _asnf_integer(a.to_lists())
        return AsnfResult(_to_matrix(B, None, k), _to_matrix(L, None, k), tuple(betas))

    B, L, betas = _asnf_integer(a.lift_alternating().to_lists())
    B = [[e % m for e in r] for r in B]
    L = [[e % m for e in r] for r in L]
    kept = []
    for t, beta in enumerate(betas):
        beta %= m
        if beta == 0:
            break
        u = normalizing_unit(beta, m)
        g = beta * u % m
        B[2 * t][2 * t + 1] = g
        B[2 * t + 1][2 * t] = (-g) % m
        if u != 1:
            s = unit_inverse(u, m)
            for r in L:
                r[2 * t] = r[2 * t] * s % m
        kept.append(g)
    return AsnfResult(_to_matrix(B, m, k), _to_matrix(L, m, k), tuple(kept))


# Howell normal form


class _ColumnOps:
    """Column operations applied simultaneously to W and to the witness L."""

    def __init__(self, W: List[List[int]], d: int):
        self.W = W
        self.d = d
        self.ncols = len(W[0]) if W else 0
        self.L = _identity(self.ncols)

    def _each(self):
        yield self.W
        yield self.L

    def bezout(self, p: int, c: int, row: int) -> None:
        """Move gcd of W[row][p], W[row][c] into column p and zero W[row][c]."""
        d = self.d
        a, b = self.W[row][p], self.W[row][c]
        g, x, y = ext_gcd(a, b)
        w, z = b // g, a // g
        for M in self._each():
            for r in M:
                cp, cc = r[p], r[c]
                r[p] = (x * cp + y * cc) % d
                r[c] = (z * cc - w * cp) % d

    def swap(self, p: int, c: int) -> None:
        for M in self._each():
            for r in M:
                r[p], r[c] = r[c], r[p]

    def scale(self, p: int, u: int) -> None:
        d = self.d
        for M in self._each():
            for r in M:
                r[p] = r[p] * u % d

    def add(self, t: int, s: int, c: int) -> None:
        """col_t += c * col_s"""
        d = self.d
        for M in self._each():
            for r in M:
                r[t] = (r[t] + c * r[s]) % d

    def gather(self, row: int, p: int) -> None:
        """Combine the entries of ``row`` in columns >= p into column p."""
        W = self.W[row]
        for c in range(p + 1, self.ncols):
            if W[c]:
                if W[p] == 0:
                    self.swap(p, c)
                else:
                    self.bezout(p, c, row)

    def is_zero_column(self, c: int) -> bool:
        return not any(r[c] for r in self.W)

    def echelon(self, start_row: int, start_col: int) -> None:
        """Plain column echelon form of the block below/right of the start."""
        p = start_col
        for i in range(start_row, len(self.W)):
            if p >= self.ncols:
                return
            self.gather(i, p)
            if self.W[i][p]:
                p += 1


def _greedy_solve(columns: List[List[int]], pivots, target: List[int], d: int):
    """Write ``target`` in the span of Howell-form columns, one pivot row at a time.

    ``pivots`` lists (row, column) pairs in increasing order.  Returns the
    coefficient dictionary or None when the target is outside the span.
    """
    res = list(target)
    coeffs = {}
    for row, t in pivots:
        if any(res[r] for r in range(row)):
            return None
        col = columns[t]
        h = col[row]
        if res[row] % h:
            return None
        c = res[row] // h
        if c:
            coeffs[t] = c
            res = [(x - c * y) % d for x, y in zip(res, col)]
    if any(res):
        return None
    return coeffs


def hnf(a: ExactMatrix) -> HnfResult:
    """Howell normal form ``H = [a | 0] @ L`` of a matrix over Z_d.

    Also returns generators of ``Ker(H)``; ``result.kernel_of_input(a.cols)``
    turns them into generators of ``Ker(a)``.
    """
    d = a.modulus
    if d is None:
        raise RingMismatch("Howell form is defined over Z_d only")
    k, l = a.rows, a.cols
    n = l + k
    W = [list(a.row(i)) + [0] * k for i in range(k)]
    ops = _ColumnOps(W, d)
    ops.ncols = n
    ops.L = _identity(n)

    pivots = []
    p = 0
    for i in range(k):
        if p >= n:
            break
        ops.gather(i, p)
        if W[i][p] == 0:
            continue
        u = normalizing_unit(W[i][p], d)
        if u != 1:
            ops.scale(p, u)
        h = W[i][p]
        pivots.append((i, p))
        if h != 1 and any(W[r][p] * (d // h) % d for r in range(k)):
            free = next((c for c in range(p + 1, n) if ops.is_zero_column(c)), None)
            if free is None:
                ops.echelon(i + 1, p + 1)
                free = next(c for c in range(p + 1, n) if ops.is_zero_column(c))
            ops.add(free, p, d // h)
        p += 1

    for t, (row, _) in enumerate(pivots):
        h = W[row][t]
        for s in range(t):
            q = W[row][s] // h
            if q:
                ops.add(s, t, -q)

    H = _to_matrix(W, d, n)
    columns = [list(H.column(c)) for c in range(n)]
    gens = []
    for t, (row, _) in enumerate(pivots):
        h = W[row][t]
        if h == 1:
            continue
        ann = [e * (d // h) % d for e in columns[t]]
        coeffs = _greedy_solve(columns, pivots[t + 1:], ann, d)
        if coeffs is None:  # pragma: no cover - guaranteed by the construction
            raise ArithmeticError("Howell span condition violated")
        vec = [0] * n
        vec[t] = d // h
        for s, c in coeffs.items():
            vec[s] = (vec[s] - c) % d
        gens.append(vec)
    for c in range(len(pivots), n):
        gens.append([int(i == c) for i in range(n)])
    kernel = ExactMatrix.from_columns(gens, d, rows=n)
    return HnfResult(H, _to_matrix(ops.L, d, n), kernel, tuple(pivots))


def solve_in_span(a: ExactMatrix, b) -> Optional[Tuple[int, ...]]:
    """Some ``x`` with ``a @ x == b`` over Z_d, or None when ``b`` is not in the column span."""
    d = a.modulus
    if d is None:
        raise RingMismatch("solve_in_span works over Z_d")
    b = [int(e) % d for e in b]
    if len(b) != a.rows:
        raise ShapeMismatch(f"right-hand side of length {len(b)} for {a.rows} rows")
    res = hnf(a)
    n = res.H.cols
    columns = [list(res.H.column(c)) for c in range(n)]
    coeffs = _greedy_solve(columns, res.pivots, b, d)
    if coeffs is None:
        return None
    y = [coeffs.get(c, 0) for c in range(n)]
    x = res.L.apply(y)[:a.cols]
    if a.apply(x) != tuple(b):  # pragma: no cover - exactness guard
        raise ArithmeticError("span solution failed to verify")
    return tuple(x)


def kernel_generators(a: ExactMatrix) -> ExactMatrix:
    """Columns generating ``{x : a @ x == 0}`` over Z_d."""
    return hnf(a).kernel_of_input(a.cols)
