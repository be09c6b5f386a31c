#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled twin on the workloads
that dominate real runs: batches of small Smith normal forms (the verify
suites) and single larger reductions/determinants.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from stablekh import _snf_pure

try:
    from stablekh import _snf_core
except ImportError:
    _snf_core = None


def random_batch(count, dim, lo, hi, seed):
    rng = random.Random(seed)
    return [
        [[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)]
        for _ in range(count)
    ]


def circulant(n, length):
    return [
        [sum(1 for t in range(length) if (j + t) % n == i) for j in range(n)]
        for i in range(n)
    ]


def workloads():
    yield "snf  5x5  x500", "snf", random_batch(500, 5, -9, 9, seed=11)
    yield "snf 12x12 x50", "snf", random_batch(50, 12, -20, 20, seed=12)
    yield "snf 32x32 circulant x20", "snf", [circulant(32, 48)] * 20
    yield "det 10x10 x200", "det", random_batch(200, 10, -50, 50, seed=13)
    yield "det 60x60 x3", "det", random_batch(3, 60, -9, 9, seed=14)


def run(kernel_mod, kind, batch):
    start = time.perf_counter()
    for rows in batch:
        n = len(rows)
        copy = [list(r) for r in rows]
        if kind == "snf":
            kernel_mod.snf_kernel(n, n, copy)
        else:
            kernel_mod.det_kernel(n, copy)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repeats")
    args = parser.parse_args()

    lanes = [("pure", _snf_pure)]
    if _snf_core is not None:
        lanes.append(("compiled", _snf_core))
    else:
        print("compiled lane unavailable; timing pure only")

    print(f"{'workload':<26} " + " ".join(f"{name:>10}" for name, _ in lanes)
          + ("    speedup" if len(lanes) == 2 else ""))
    for label, kind, batch in workloads():
        times = []
        for _, mod in lanes:
            best = min(run(mod, kind, batch) for _ in range(args.repeat))
            times.append(best)
        row = f"{label:<26} " + " ".join(f"{t * 1000:9.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"    {times[0] / times[1]:5.2f}x"
        print(row)


if __name__ == "__main__":
    main()
