"""Compare the compiled combinatorial kernels against the pure-Python ones.

Times binomial coefficients, constant-weight ranking, and unranking at a few
word sizes, then prints one table row per (kernel, size) with the speedup.

Run:  python benchmarks/bench_kernels.py [--repeat N] [--sizes 64,139,512]
"""

from __future__ import annotations

import argparse
import random
import time

from womcode import _kernels_py

try:
    from womcode import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, time.perf_counter() - start)
    return best


def _workloads(backend, n: int, rng: random.Random):
    k = n // 3
    bits = [1] * k + [0] * (n - k)
    rng.shuffle(bits)
    top = backend.binomial(n, k)
    indices = [rng.randrange(top) for _ in range(32)]

    def run_binomial():
        for j in range(0, n + 1, 7):
            backend.binomial(n, j)

    def run_rank():
        backend.rank(bits)

    def run_unrank():
        for index in indices:
            backend.unrank(index, n, k)

    return [("binomial", run_binomial), ("rank", run_rank), ("unrank", run_unrank)]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=2000, help="iterations per timing")
    parser.add_argument("--sizes", default="64,139,512", help="comma-separated word sizes")
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels_c is None:
        print("compiled kernels not available; timing pure Python only")
    header = f"{'kernel':<10} {'n':>5} {'pure (ms)':>11} {'compiled (ms)':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        rng = random.Random(n)
        pure = _workloads(_kernels_py, n, rng)
        rng = random.Random(n)
        fast = _workloads(_kernels_c, n, rng) if _kernels_c else None
        for i, (name, fn) in enumerate(pure):
            t_pure = _time(fn, args.repeat) * 1000
            if fast is None:
                print(f"{name:<10} {n:>5} {t_pure:>11.2f} {'-':>14} {'-':>8}")
                continue
            t_fast = _time(fast[i][1], args.repeat) * 1000
            ratio = t_pure / t_fast if t_fast > 0 else float("inf")
            print(f"{name:<10} {n:>5} {t_pure:>11.2f} {t_fast:>14.2f} {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
