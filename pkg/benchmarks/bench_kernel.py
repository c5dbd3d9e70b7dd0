#!/usr/bin/env python3
"""Benchmark the sweep kernels: full-S_n pyramid-key aggregation per backend.

    python benchmarks/bench_kernel.py [--n 8] [--repeat 3]

Reports wall time and throughput for the pure-Python kernel and, when built,
the compiled one, and verifies that both produce identical tallies.
"""
from __future__ import annotations

import argparse
import time
from math import factorial

from sswilf import _pykernel

try:
    from sswilf import _ckernel
except ImportError:
    _ckernel = None


def run(module, n: int, repeat: int):
    total = factorial(n)
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = module.sweep_block(n, 0, total)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=8, help="symmetric group size")
    parser.add_argument("--repeat", type=int, default=3, help="runs per backend")
    args = parser.parse_args()

    total = factorial(args.n)
    print(f"sweeping all {total:,} permutations of size {args.n}")

    backends = [("pure-python", _pykernel)]
    if _ckernel is not None:
        backends.append(("compiled", _ckernel))
    else:
        print("compiled kernel not built; benchmarking the fallback only")

    results = {}
    timings = {}
    for name, module in backends:
        best, result = run(module, args.n, args.repeat)
        results[name] = result
        timings[name] = best
        print(f"  {name:>12}: {best:8.3f}s  ({total / best / 1e6:6.2f} M perms/s)")

    if len(results) == 2:
        assert results["pure-python"] == results["compiled"], "backends disagree"
        speedup = timings["pure-python"] / timings["compiled"]
        print(f"  backends agree on {len(results['compiled']):,} classes; "
              f"compiled speedup {speedup:.1f}x")


if __name__ == "__main__":
    main()
