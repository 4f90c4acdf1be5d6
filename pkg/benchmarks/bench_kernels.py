"""Compiled vs pure-Python kernels: Wilson sampling and Bareiss determinants.

    python benchmarks/bench_kernels.py [--samples 2000] [--repeat 3]
"""

import argparse
import time

from hanoispan import _fallback
from hanoispan.graph import build_graph
from hanoispan.oracle import laplacian, minor

try:
    from hanoispan import _kernels
except ImportError:  # extension not built
    _kernels = None


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = [("python", _fallback)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{'kernel':<28}{'backend':<10}{'seconds':>10}{'speedup':>10}")

    for n in (3, 4, 5):
        g = build_graph(n)
        indptr, indices = g.csr
        base = None
        for name, mod in backends:
            t = best_of(args.repeat, mod.wilson_degree_counts, indptr, indices, 0, 1, 7, 0, args.samples)
            base = base or t
            print(f"{f'wilson H_{n} x{args.samples}':<28}{name:<10}{t:>10.4f}{base / t:>9.1f}x")

    for n in (3, 4):
        g = build_graph(n)
        rows = minor(laplacian(g.vertices, g.edges), [0])
        base = None
        for name, mod in backends:
            t = best_of(args.repeat, mod.bareiss_det, rows)
            base = base or t
            print(f"{f'bareiss {len(rows)}x{len(rows)}':<28}{name:<10}{t:>10.4f}{base / t:>9.1f}x")


if __name__ == "__main__":
    main()
