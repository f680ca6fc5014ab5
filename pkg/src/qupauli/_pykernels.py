"""Pure-Python kernels; the reference behaviour for the compiled module."""
from math import gcd


def closure(gens, d, n, cap):
    """All products of ``gens`` as (phase, vec) tuples in BFS order, or None past ``cap``."""
    w = 2 * n
    start = (0, (0,) * w)
    seen = {start}
    order = [start]
    i = 0
    while i < len(order):
        phase, vec = order[i]
        i += 1
        zpart = vec[n:]
        for gphase, gvec in gens:
            cross = 0
            for a, b in zip(zpart, gvec):
                cross += a * b
            elem = ((phase + gphase + cross) % d,
                    tuple((a + b) % d for a, b in zip(vec, gvec)))
            if elem not in seen:
                seen.add(elem)
                order.append(elem)
                if len(order) > cap:
                    return None
    return order


def _color_sort(P, adj):
    """Greedy coloring; returns vertices and their colors in nondecreasing color order."""
    verts, colors = [], []
    uncolored = P
    color = 0
    while uncolored:
        color += 1
        Q = uncolored
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            verts.append(v)
            colors.append(color)
            uncolored &= ~low
            Q &= ~low & ~adj[v]
    return verts, colors


def max_clique(adj, nv):
    """Maximum clique of a graph given by adjacency bitsets; returns (size, members)."""
    best = [()]

    def expand(R, P):
        verts, colors = _color_sort(P, adj)
        for idx in range(len(verts) - 1, -1, -1):
            if len(R) + colors[idx] <= len(best[0]):
                return
            v = verts[idx]
            R2 = R + (v,)
            newP = P & adj[v]
            if newP:
                expand(R2, newP)
            elif len(R2) > len(best[0]):
                best[0] = R2
            P &= ~(1 << v)

    if nv:
        expand((), (1 << nv) - 1)
    return len(best[0]), tuple(sorted(best[0]))


def max_pairs(comm, nv, cap_k):
    """Largest collection of non-commuting pairs (up to ``cap_k``).

    ``comm[v]`` is the bitset of vertices commuting with ``v`` (including ``v``).
    Pairs ``(s, t)`` have ``s < t`` and are listed by increasing ``s``.
    """
    best = [()]
    full = (1 << nv) - 1

    def rec(C, chosen):
        if len(chosen) > len(best[0]):
            best[0] = chosen
            if len(chosen) >= cap_k:
                return True
        if len(chosen) + bin(C).count("1") // 2 <= len(best[0]):
            return False
        rest = C
        while rest:
            low = rest & -rest
            s = low.bit_length() - 1
            rest &= ~low
            above = full & ~((low << 1) - 1)
            partners = C & ~comm[s] & above
            base = C & comm[s] & above
            while partners:
                tlow = partners & -partners
                t = tlow.bit_length() - 1
                partners &= ~tlow
                if rec(base & comm[t], chosen + ((s, t),)):
                    return True
        return False

    if cap_k > 0 and nv:
        rec(full, ())
    return len(best[0]), best[0]


def gamma_search(base, kernel_cols, delta, mu0, d, r, budget, first_lo=0, first_hi=None):
    """Search gamma in Z_d^r (lexicographic) for gcd(mu0, phases) dividing delta.

    ``base[j]`` is the phase of the j-th kernel product and ``kernel_cols[j]``
    its exponent column.  Only tuples with ``first_lo <= gamma[0] < first_hi``
    are visited.  Returns (gamma or None, number of tuples tried).
    """
    if first_hi is None:
        first_hi = d
    if r == 0 or first_lo >= first_hi:
        return None, 0
    s = len(base)
    gamma = [0] * r
    gamma[0] = first_lo
    acc = [(delta * first_lo * kernel_cols[j][0]) % d for j in range(s)]
    tried = 0
    while tried < budget:
        tried += 1
        mu = mu0
        for j in range(s):
            mu = gcd(mu, (base[j] + acc[j]) % d)
        if mu and delta % mu == 0:
            return tuple(gamma), tried
        pos = r - 1
        while pos >= 0:
            gamma[pos] += 1
            for j in range(s):
                acc[j] = (acc[j] + delta * kernel_cols[j][pos]) % d
            limit = first_hi if pos == 0 else d
            if gamma[pos] < limit:
                break
            if pos == 0:
                return None, tried
            gamma[pos] = 0  # acc is unchanged: d steps add a multiple of d
            pos -= 1
    return None, tried
