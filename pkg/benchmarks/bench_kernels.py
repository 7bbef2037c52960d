"""Time the compiled and pure-Python route kernels on the synthetic fixture.

    python benchmarks/bench_kernels.py [--sources 200] [--hops 3] [--repeat 3]
"""

import argparse
import random
import time

from trustrecruit import _kernels
from trustrecruit.config import SimConfig
from trustrecruit.fixture import load_graph


def bench(fn, csr, sources, hops, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for s in sources:
            fn(*csr, s, hops)
        best = min(best, time.perf_counter() - t0)
    return best / len(sources)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sources", type=int, default=200)
    parser.add_argument("--hops", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    graph = load_graph(SimConfig())
    csr = graph.csr()
    sources = random.Random(0).sample(range(graph.node_count), args.sources)
    print(f"graph: {graph.node_count} nodes, {graph.edge_count} edges; L={args.hops}; {args.sources} sources")
    if "cython" not in _kernels.BACKENDS:
        print("compiled backend not built; only the pure-Python kernels are timed")

    timings = {}
    for name, mod in sorted(_kernels.BACKENDS.items()):
        for kernel in ("hop_ball", "best_routes"):
            t = bench(getattr(mod, kernel), csr, sources, args.hops, args.repeat)
            timings[name, kernel] = t
            print(f"{name:>7} {kernel:<12} {t * 1e6:10.1f} us/source")
    if len(_kernels.BACKENDS) == 2:
        for kernel in ("hop_ball", "best_routes"):
            print(f"speedup {kernel:<12} {timings['python', kernel] / timings['cython', kernel]:10.1f}x")


if __name__ == "__main__":
    main()
