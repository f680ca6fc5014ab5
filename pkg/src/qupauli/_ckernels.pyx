# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Signatures and results match ``_pykernels`` exactly."""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t, int64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def closure(list gens, int d, int n, long long cap):
    cdef int w = 2 * n + 1
    cdef int g = len(gens)
    cdef long long space = 1
    cdef int i, k, t
    for i in range(w):
        space *= d
        if space > (1LL << 40):
            raise OverflowError("element space too large for the compiled closure")
    cdef int *gd = <int *> malloc(max(g, 1) * w * sizeof(int))
    cdef int *cur = <int *> malloc(w * sizeof(int))
    cdef int *nxt = <int *> malloc(w * sizeof(int))
    cdef unsigned char *seen = NULL
    cdef bint use_bytes = space <= (1LL << 28)
    cdef set seen_set = set()
    cdef list codes = [0]
    cdef long long code, head = 0, c
    cdef long long cross
    try:
        for k in range(g):
            phase, vec = gens[k]
            gd[k * w] = phase
            for i in range(w - 1):
                gd[k * w + 1 + i] = vec[i]
        if use_bytes:
            seen = <unsigned char *> calloc(space, 1)
            seen[0] = 1
        else:
            seen_set.add(0)
        while head < len(codes):
            code = codes[head]
            head += 1
            c = code
            for i in range(w):
                cur[i] = c % d
                c //= d
            for k in range(g):
                cross = 0
                for i in range(n):
                    cross += cur[1 + n + i] * gd[k * w + 1 + i]
                nxt[0] = (cur[0] + gd[k * w] + cross) % d
                for i in range(1, w):
                    nxt[i] = (cur[i] + gd[k * w + i]) % d
                c = 0
                for t in range(w - 1, -1, -1):
                    c = c * d + nxt[t]
                if use_bytes:
                    if seen[c]:
                        continue
                    seen[c] = 1
                else:
                    if c in seen_set:
                        continue
                    seen_set.add(c)
                codes.append(c)
                if len(codes) > cap:
                    return None
        out = []
        for code in codes:
            c = code
            phase = c % d
            c //= d
            vec = []
            for i in range(w - 1):
                vec.append(c % d)
                c //= d
            out.append((phase, tuple(vec)))
        return out
    finally:
        free(gd)
        free(cur)
        free(nxt)
        if seen != NULL:
            free(seen)


# maximum clique: bitsets of `nw` 64-bit words

cdef struct CliqueState:
    int nv
    int nw
    uint64_t *adj
    int *R
    int rlen
    int *best
    int bestlen


cdef void _color_sort(CliqueState *st, uint64_t *P, int *verts, int *colors, int *count,
                      uint64_t *U, uint64_t *Q) nogil:
    cdef int nw = st.nw
    cdef int i, t, v, color = 0, cnt = 0
    cdef bint any_left
    for i in range(nw):
        U[i] = P[i]
    while True:
        any_left = False
        for i in range(nw):
            if U[i]:
                any_left = True
                break
        if not any_left:
            break
        color += 1
        for i in range(nw):
            Q[i] = U[i]
        i = 0
        while i < nw:
            if Q[i] == 0:
                i += 1
                continue
            v = i * 64 + __builtin_ctzll(Q[i])
            verts[cnt] = v
            colors[cnt] = color
            cnt += 1
            U[i] &= ~((<uint64_t> 1) << (v & 63))
            Q[i] &= ~((<uint64_t> 1) << (v & 63))
            for t in range(nw):
                Q[t] &= ~st.adj[v * nw + t]
    count[0] = cnt


cdef void _expand(CliqueState *st, uint64_t *P, int depth, uint64_t *work) nogil:
    cdef int nw = st.nw, nv = st.nv
    cdef int *verts = <int *> malloc(nv * sizeof(int))
    cdef int *colors = <int *> malloc(nv * sizeof(int))
    cdef uint64_t *newP = work + (depth * 3 + 0) * nw
    cdef uint64_t *U = work + (depth * 3 + 1) * nw
    cdef uint64_t *Q = work + (depth * 3 + 2) * nw
    cdef int cnt, idx, v, i
    cdef bint nonempty
    _color_sort(st, P, verts, colors, &cnt, U, Q)
    idx = cnt - 1
    while idx >= 0:
        if st.rlen + colors[idx] <= st.bestlen:
            break
        v = verts[idx]
        st.R[st.rlen] = v
        st.rlen += 1
        nonempty = False
        for i in range(nw):
            newP[i] = P[i] & st.adj[v * nw + i]
            if newP[i]:
                nonempty = True
        if nonempty:
            _expand(st, newP, depth + 1, work)
        elif st.rlen > st.bestlen:
            st.bestlen = st.rlen
            for i in range(st.rlen):
                st.best[i] = st.R[i]
        st.rlen -= 1
        P[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
        idx -= 1
    free(verts)
    free(colors)


def max_clique(list adj, int nv):
    if nv == 0:
        return 0, ()
    cdef int nw = (nv + 63) // 64
    cdef CliqueState st
    cdef int v, i
    cdef object bits
    st.nv = nv
    st.nw = nw
    st.adj = <uint64_t *> calloc(nv * nw, sizeof(uint64_t))
    st.R = <int *> malloc((nv + 1) * sizeof(int))
    st.best = <int *> malloc((nv + 1) * sizeof(int))
    st.rlen = 0
    st.bestlen = 0
    cdef uint64_t *P = <uint64_t *> calloc(nw, sizeof(uint64_t))
    cdef uint64_t *work = <uint64_t *> calloc((nv + 2) * 3 * nw, sizeof(uint64_t))
    try:
        for v in range(nv):
            bits = adj[v]
            for i in range(nw):
                st.adj[v * nw + i] = <uint64_t> ((bits >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)
        for v in range(nv):
            P[v >> 6] |= (<uint64_t> 1) << (v & 63)
        with nogil:
            _expand(&st, P, 0, work)
        members = []
        for i in range(st.bestlen):
            members.append(st.best[i])
        return st.bestlen, tuple(sorted(members))
    finally:
        free(st.adj)
        free(st.R)
        free(st.best)
        free(P)
        free(work)


# non-commuting pair collections

cdef struct PairState:
    int nv
    int nw
    uint64_t *comm
    int cap_k
    int *chosen
    int clen
    int *best
    int bestlen
    bint done


cdef void _pairs_rec(PairState *st, uint64_t *C, int depth, uint64_t *work) nogil:
    cdef int nw = st.nw
    cdef int i, s, t, pc = 0
    cdef uint64_t *base = work + (depth * 3 + 0) * nw
    cdef uint64_t *partners = work + (depth * 3 + 1) * nw
    cdef uint64_t *child = work + (depth * 3 + 2) * nw
    cdef uint64_t bit
    if st.clen > st.bestlen:
        st.bestlen = st.clen
        for i in range(2 * st.clen):
            st.best[i] = st.chosen[i]
        if st.clen >= st.cap_k:
            st.done = True
            return
    for i in range(nw):
        pc += __builtin_popcountll(C[i])
    if st.clen + pc // 2 <= st.bestlen:
        return
    for s in range(st.nv):
        if not (C[s >> 6] >> (s & 63)) & 1:
            continue
        for i in range(nw):
            partners[i] = C[i] & ~st.comm[s * nw + i]
            base[i] = C[i] & st.comm[s * nw + i]
        # keep indices strictly above s
        for i in range(nw):
            if i < (s >> 6):
                partners[i] = 0
                base[i] = 0
            elif i == (s >> 6):
                bit = ((<uint64_t> 1) << (s & 63))
                partners[i] &= ~(bit | (bit - 1))
                base[i] &= ~(bit | (bit - 1))
        for t in range(s + 1, st.nv):
            if not (partners[t >> 6] >> (t & 63)) & 1:
                continue
            for i in range(nw):
                child[i] = base[i] & st.comm[t * nw + i]
            st.chosen[2 * st.clen] = s
            st.chosen[2 * st.clen + 1] = t
            st.clen += 1
            _pairs_rec(st, child, depth + 1, work)
            st.clen -= 1
            if st.done:
                return


def max_pairs(list comm, int nv, int cap_k):
    if nv == 0 or cap_k <= 0:
        return 0, ()
    cdef int nw = (nv + 63) // 64
    cdef PairState st
    cdef int v, i
    st.nv = nv
    st.nw = nw
    st.cap_k = cap_k
    st.clen = 0
    st.bestlen = 0
    st.done = False
    st.comm = <uint64_t *> calloc(nv * nw, sizeof(uint64_t))
    st.chosen = <int *> malloc((2 * nv + 2) * sizeof(int))
    st.best = <int *> malloc((2 * nv + 2) * sizeof(int))
    cdef uint64_t *C = <uint64_t *> calloc(nw, sizeof(uint64_t))
    cdef uint64_t *work = <uint64_t *> calloc((nv + 2) * 3 * nw, sizeof(uint64_t))
    try:
        for v in range(nv):
            bits = comm[v]
            for i in range(nw):
                st.comm[v * nw + i] = <uint64_t> ((bits >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)
            C[v >> 6] |= (<uint64_t> 1) << (v & 63)
        with nogil:
            _pairs_rec(&st, C, 0, work)
        pairs = []
        for i in range(st.bestlen):
            pairs.append((st.best[2 * i], st.best[2 * i + 1]))
        return st.bestlen, tuple(pairs)
    finally:
        free(st.comm)
        free(st.chosen)
        free(st.best)
        free(C)
        free(work)


cdef inline long long _gcd(long long a, long long b) nogil:
    while b:
        a, b = b, a % b
    return a


def gamma_search(list base, list kernel_cols, long long delta, long long mu0, long long d,
                 int r, long long budget, long long first_lo=0, first_hi=None):
    cdef long long hi = d if first_hi is None else first_hi
    if r == 0 or first_lo >= hi:
        return None, 0
    cdef int s = len(base)
    cdef long long *b = <long long *> malloc(max(s, 1) * sizeof(long long))
    cdef long long *K = <long long *> malloc(max(s * r, 1) * sizeof(long long))
    cdef long long *acc = <long long *> malloc(max(s, 1) * sizeof(long long))
    cdef long long *gamma = <long long *> calloc(r, sizeof(long long))
    cdef long long tried = 0, mu, limit
    cdef int j, pos
    cdef bint found = False, exhausted = False
    try:
        for j in range(s):
            b[j] = base[j] % d
            for pos in range(r):
                K[j * r + pos] = (delta * (kernel_cols[j][pos] % d)) % d
        gamma[0] = first_lo
        for j in range(s):
            acc[j] = (first_lo % d) * K[j * r] % d
        with nogil:
            while tried < budget:
                tried += 1
                mu = mu0
                for j in range(s):
                    mu = _gcd(mu, (b[j] + acc[j]) % d)
                if mu and delta % mu == 0:
                    found = True
                    break
                pos = r - 1
                while pos >= 0:
                    gamma[pos] += 1
                    for j in range(s):
                        acc[j] = (acc[j] + K[j * r + pos]) % d
                    limit = hi if pos == 0 else d
                    if gamma[pos] < limit:
                        break
                    if pos == 0:
                        exhausted = True
                        break
                    gamma[pos] = 0
                    pos -= 1
                if exhausted:
                    break
        if found:
            out = []
            for j in range(r):
                out.append(gamma[j])
            return tuple(out), tried
        return None, tried
    finally:
        free(b)
        free(K)
        free(acc)
        free(gamma)
