#!/usr/bin/env python3
"""Benchmark the compiled special-function backend against the pure one.

The incomplete beta/gamma kernels sit under every p-value the estimators
produce, so Monte Carlo workloads evaluate them tens of thousands of
times.  This script times identical workloads on both backends and
verifies they agree bit-for-bit.

    python3 benchmarks/bench_kernels.py [--evals N]
"""

import argparse
import time

from policytone.econ import _special_py as pure

try:
    from policytone.econ import _special_c as compiled
except ImportError:
    compiled = None


def workload_betainc(n):
    return [((i % 37) + 0.5, (i % 11) + 0.5, ((i % 97) + 1) / 100.0)
            for i in range(n)]


def workload_gammainc(n):
    return [((i % 51) + 0.5, (i % 301) / 2.0) for i in range(n)]


def workload_norm(n):
    return [((i % 1601) / 100.0 - 8.0,) for i in range(n)]


def run(fn, args_list):
    t0 = time.perf_counter()
    out = [fn(*a) for a in args_list]
    return time.perf_counter() - t0, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--evals", type=int, default=50_000,
                        help="evaluations per kernel (default 50000)")
    args = parser.parse_args()

    if compiled is None:
        print("compiled backend not built (POLICYTONE_NO_EXT or build failure); "
              "nothing to compare")
        return

    cases = [
        ("betainc", pure.betainc, compiled.betainc, workload_betainc(args.evals)),
        ("gammainc_p", pure.gammainc_p, compiled.gammainc_p,
         workload_gammainc(args.evals)),
        ("norm_cdf", pure.norm_cdf, compiled.norm_cdf, workload_norm(args.evals)),
    ]

    print(f"{args.evals} evaluations per kernel")
    print(f"{'kernel':<12}{'pure (s)':>10}{'cython (s)':>12}{'speedup':>9}  bitwise")
    for name, pure_fn, c_fn, work in cases:
        t_pure, out_pure = run(pure_fn, work)
        t_c, out_c = run(c_fn, work)
        identical = out_pure == out_c
        print(f"{name:<12}{t_pure:>10.3f}{t_c:>12.3f}{t_pure / t_c:>8.1f}x"
              f"  {'yes' if identical else 'NO'}")


if __name__ == "__main__":
    main()
