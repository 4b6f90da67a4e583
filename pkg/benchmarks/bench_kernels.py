#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure NumPy fallbacks.

Runs each kernel on both backends and prints a timing table. numba
functions are called once before timing so compilation is not measured.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --sieve-limit 50000000 --repeat 5
"""
from __future__ import annotations

import argparse
import time

from starseq.kernels import _numpy

try:
    from starseq.kernels import _numba

    HAS_NUMBA = True
except ImportError:
    _numba = None
    HAS_NUMBA = False


def best_of(repeat: int, fn, *args) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sieve-limit", type=int, default=20_000_000)
    parser.add_argument("--factor-range", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not HAS_NUMBA:
        print("numba not importable; only the NumPy fallback is timed\n")

    cases = [
        ("primes_upto", lambda impl: impl.primes_upto(args.sieve_limit)),
        ("factor_range", lambda impl: impl.factor_range(2, args.factor_range)),
    ]
    primes_np = _numpy.primes_upto(args.sieve_limit)
    cases.append(
        ("floordiv_sum", lambda impl: impl.floordiv_sum(args.sieve_limit, primes_np))
    )
    cases.append(("reciprocal_sum", lambda impl: impl.reciprocal_sum(primes_np)))

    header = f"{'kernel':<16}{'numpy [s]':>12}"
    if HAS_NUMBA:
        header += f"{'numba [s]':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, call in cases:
        if HAS_NUMBA:
            call(_numba)  # compile outside the timed region
        t_np = best_of(args.repeat, call, _numpy)
        line = f"{name:<16}{t_np:>12.4f}"
        if HAS_NUMBA:
            t_nb = best_of(args.repeat, call, _numba)
            line += f"{t_nb:>12.4f}{t_np / t_nb:>10.1f}x"
        print(line)


if __name__ == "__main__":
    main()
