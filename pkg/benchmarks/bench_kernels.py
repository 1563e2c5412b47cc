"""Compare the compiled and pure-Python kernels on the workloads that dominate certification.

    python benchmarks/bench_kernels.py [--repeat 3] [--n 8]

Each kernel is timed on the same inputs through both backends; the last row
times a full isomorph-free enumeration with each backend in a subprocess,
since the backend is fixed at import.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from edgelab import _pycore
from edgelab.enumeration import all_graphs

try:
    from edgelab import _core
except ImportError:
    _core = None


def random_graphs(count: int, n: int, seed: int = 7) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.random()
        adj = [0] * n
        for j in range(n):
            for i in range(j):
                if rng.random() < p:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        out.append(tuple(adj))
    return out


def time_kernel(module, name: str, inputs, repeat: int) -> float:
    fn = getattr(module, name)

    def run():
        for n, adj in inputs:
            fn(n, adj)

    return min(timeit.repeat(run, number=1, repeat=repeat))


def time_enumeration(n: int, pure: bool) -> float:
    env = dict(os.environ)
    env.pop("EDGELAB_PURE_PYTHON", None)
    if pure:
        env["EDGELAB_PURE_PYTHON"] = "1"
    code = (
        "import time; from edgelab.enumeration import all_graphs; "
        f"t = time.perf_counter(); sum(1 for _ in all_graphs({n})); print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--n", type=int, default=8, help="order for the full enumeration row")
    args = parser.parse_args()
    if _core is None:
        sys.exit("compiled extension edgelab._core is not built; run `pip install -e . --no-build-isolation`")

    seven = [(7, g.adj) for g in all_graphs(7)]
    rand16 = [(16, adj) for adj in random_graphs(300, 16)]
    rand30 = [(30, adj) for adj in random_graphs(100, 30)]
    workloads = [
        ("canon_search", "all 1044 graphs, n=7", seven),
        ("canon_search", "300 random, n=16", rand16),
        ("max_matching_mate", "all 1044 graphs, n=7", seven),
        ("max_matching_mate", "100 random, n=30", rand30),
        ("max_independent_set", "all 1044 graphs, n=7", seven),
        ("max_independent_set", "100 random, n=30", rand30),
    ]
    print(f"{'kernel':<22}{'workload':<24}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
    for name, label, inputs in workloads:
        py = time_kernel(_pycore, name, inputs, args.repeat)
        cy = time_kernel(_core, name, inputs, args.repeat)
        print(f"{name:<22}{label:<24}{py * 1e3:>11.1f}{cy * 1e3:>11.2f}{py / cy:>8.1f}x")
    py = time_enumeration(args.n, pure=True)
    cy = time_enumeration(args.n, pure=False)
    print(f"{'all_graphs':<22}{f'full enumeration, n={args.n}':<24}{py * 1e3:>11.1f}{cy * 1e3:>11.2f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
