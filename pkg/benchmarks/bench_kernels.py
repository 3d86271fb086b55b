"""Time the compiled kernels against the pure-Python reference kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Every workload runs on both backends and the results are compared, so a
speedup is only reported for identical answers.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from toughham.graph import complete_bipartite, petersen, random_gnp
from toughham.kernels import available_backends


def _far(g) -> int:
    """Largest vertex not adjacent to 0, a valid flow sink."""
    return max(v for v in range(1, g.n) if not g.adj[0] >> v & 1)


def workloads():
    dense = [random_gnp(14, "7/10", s) for s in range(6)]
    sparse = [random_gnp(13, "2/5", s) for s in range(6)]
    mid = [random_gnp(16, "1/2", s) for s in range(4)]
    flow = [random_gnp(40, "1/4", s) for s in range(3)]
    return [
        ("max_independent_set n=40 p=1/4", lambda k: [k.max_independent_set(g.adj, g.full_mask) for g in [random_gnp(40, "1/4", s) for s in range(3)]]),
        ("toughness_search n=14 p=7/10", lambda k: [k.toughness_search(g.adj, g.n, k.max_independent_set(g.adj, g.full_mask).bit_count(), 0, 0, False) for g in dense]),
        ("toughness_search petersen", lambda k: k.toughness_search(petersen().adj, 10, 4, 0, 0, False)),
        ("ham_dp n=16 p=1/2", lambda k: [k.ham_dp(g.adj, g.n) for g in mid]),
        ("ham_dp K_{8,9}", lambda k: k.ham_dp(complete_bipartite(8, 9).adj, 17)),
        ("ham_backtrack n=16 p=1/2", lambda k: [k.ham_backtrack(g.adj, g.n) for g in mid]),
        ("longest_cycle n=13 p=2/5", lambda k: [k.longest_cycle(g.adj, g.n) for g in sparse]),
        ("vertex_flow n=40 p=1/4", lambda k: [k.vertex_flow(g.adj, g.n, 0, _far(g), g.n) for g in flow]),
    ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is available", file=sys.stderr)
    names = sorted(backends, reverse=True)
    print(f"{'workload':36}" + "".join(f"{b + ' (s)':>14}" for b in names) + f"{'speedup':>10}")
    for label, fn in workloads():
        results = {b: fn(backends[b]) for b in names}
        if len({repr(r) for r in results.values()}) != 1:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        times = {b: min(timeit.repeat(lambda: fn(backends[b]), number=1, repeat=args.repeat)) for b in names}
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
        print(f"{label:36}" + "".join(f"{times[b]:14.4f}" for b in names) + speed)
    return 0


if __name__ == "__main__":
    sys.exit(main())
