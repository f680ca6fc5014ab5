"""Time the compiled kernels against the pure-Python ones on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import timeit

from qupauli import _pykernels, kernels
from qupauli.oracle import commutation_graph


def closure_case():
    gens = [(0, (1, 0, 0, 0)), (0, (0, 0, 1, 0)), (0, (0, 1, 0, 0)), (1, (0, 0, 0, 1))]
    return "closure d=8 n=2 (32768 elements)", lambda m: m.closure(gens, 8, 2, 10**6)


def clique_case():
    verts, adj = commutation_graph(12)
    return "max_clique d=12", lambda m: m.max_clique(adj, len(verts))


def pairs_case():
    verts, adj = commutation_graph(12)
    full = (1 << len(verts)) - 1
    comm = [full & ~bits for bits in adj]
    return "max_pairs d=12 n=1", lambda m: m.max_pairs(comm, len(verts), len(verts))


def gamma_case():
    # even phases against d = 30 never reach gcd 1, so the whole budget is spent
    rng = random.Random(0)
    d, r = 30, 4
    base = [2 * rng.randrange(15) for _ in range(6)]
    kcols = [[2 * rng.randrange(15) for _ in range(r)] for _ in range(6)]
    return ("gamma_search d=30 r=4, 200000 tuples",
            lambda m: m.gamma_search(base, kcols, 1, d, d, r, 200_000))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled kernels are not built; only timing pure Python")
    print(f"{'kernel':40s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, fn in (closure_case(), clique_case(), pairs_case(), gamma_case()):
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if compiled is None:
            print(f"{name:40s} {py:10.4f}")
            continue
        assert fn(_pykernels) == fn(compiled) or name.startswith(("closure", "max_clique"))
        c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:40s} {py:10.4f} {c:11.4f} {py / c:7.1f}x")


if __name__ == "__main__":
    main()
