"""Compare the compiled and pure-Python kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

import argparse
import random
import timeit

from strongdim import graph as gr
from strongdim import kernels
from strongdim.metric import resolver_masks
from strongdim.spectral import laplacian


def workloads(seed: int):
    rng = random.Random(seed)
    dims_graphs = [gr.generate(gr.GraphFamilySpec("gnp-random-connected", 14, 0.3, rng.getrandbits(32)))
                   for _ in range(5)]
    clique_graphs = [gr.generate(gr.GraphFamilySpec("gnp-random-connected", 30, 0.5, rng.getrandbits(32)))
                     for _ in range(5)]
    masks = [(g.n, resolver_masks(g)) for g in dims_graphs]
    adjs = [(g.n, list(g.masks)) for g in clique_graphs]
    laps = [laplacian(g) for g in clique_graphs]
    return {
        "min_hitting_set": lambda mod: [mod.min_hitting_set(n, m) for n, m in masks],
        "max_clique": lambda mod: [mod.max_clique(n, a) for n, a in adjs],
        "jacobi_eigenvalues": lambda mod: [mod.jacobi_eigenvalues(a, 1e-12) for a in laps],
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if kernels.compiled is None:
        print("compiled extension not built; only the Python backend is timed")
    backends = {"python": kernels.python, "compiled": kernels.compiled}
    print(f"{'kernel':<20}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, job in workloads(args.seed).items():
        times = {}
        for label, mod in backends.items():
            if mod is not None:
                times[label] = min(timeit.repeat(lambda: job(mod), number=1, repeat=args.repeat))
        py, c = times["python"], times.get("compiled")
        if c is None:
            print(f"{name:<20}{py:>12.4f}{'-':>12}{'-':>10}")
        else:
            print(f"{name:<20}{py:>12.4f}{c:>12.4f}{py / c:>9.1f}x")


if __name__ == "__main__":
    main()
