#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times LLL reduction and brute-force SVP enumeration on identical random
inputs for both backends and prints a comparison table.

    python benchmarks/bench_kernels.py [--seed N] [--repeats N]
"""

import argparse
import random
import statistics
import time

from pisot import _purekernels

try:
    from pisot import _corekernels
except ImportError:
    _corekernels = None


def random_full_rank(rng, k, bound):
    """Random square integer column basis, retried until LLL accepts it."""
    while True:
        cols = [[rng.randint(-bound, bound) for _ in range(k)] for _ in range(k)]
        try:
            _purekernels.lll_kernel([c[:] for c in cols], 3, 4)
            return cols
        except ValueError:
            continue


def bench(fn, inputs, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in inputs:
            fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def run_case(name, pure_fn, compiled_fn, inputs, repeats):
    best_pure, med_pure = bench(pure_fn, inputs, repeats)
    if compiled_fn is None:
        print(f"{name:<34} pure {best_pure * 1e3:9.2f} ms   compiled      n/a")
        return
    best_comp, med_comp = bench(compiled_fn, inputs, repeats)
    speedup = best_pure / best_comp if best_comp > 0 else float("inf")
    print(
        f"{name:<34} pure {best_pure * 1e3:9.2f} ms   "
        f"compiled {best_comp * 1e3:9.2f} ms   x{speedup:.2f}"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=12345)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    if _corekernels is None:
        print("note: compiled extension not available; timing pure backend only")
    print(f"{'case':<34} {'(best of %d repeats)' % args.repeats}")

    for k, bound, count in ((4, 1 << 20, 20), (8, 1 << 20, 8), (6, 1 << 60, 8)):
        inputs = [
            ([c[:] for c in random_full_rank(rng, k, bound)], 3, 4)
            for _ in range(count)
        ]
        run_case(
            f"LLL  k={k} |entries|<=2^{bound.bit_length() - 1} x{count}",
            lambda cols, p, q: _purekernels.lll_kernel([c[:] for c in cols], p, q),
            None
            if _corekernels is None
            else (
                lambda cols, p, q: _corekernels.lll_kernel([c[:] for c in cols], p, q)
            ),
            inputs,
            args.repeats,
        )

    for k, bound_coeff, count in ((4, 4, 10), (5, 3, 6)):
        inputs = [
            ([c[:] for c in random_full_rank(rng, k, 100)], bound_coeff)
            for _ in range(count)
        ]
        run_case(
            f"SVP  k={k} coeff_bound={bound_coeff} x{count}",
            lambda cols, b: _purekernels.svp_kernel(cols, b),
            None
            if _corekernels is None
            else (lambda cols, b: _corekernels.svp_kernel(cols, b)),
            inputs,
            args.repeats,
        )


if __name__ == "__main__":
    main()
