"""Compare the compiled scan kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--c-max N] [--p-max N]
"""

import argparse
import time

from circletriples import _kernels_py

try:
    from circletriples import _kernels
except ImportError:
    _kernels = None


def bench(label, fn, args_iter):
    start = time.perf_counter()
    total = 0
    for a in args_iter:
        r = fn(a)
        total += len(r) if isinstance(r, list) else (r is not None)
    elapsed = time.perf_counter() - start
    print(f"{label:32s} {elapsed:8.3f}s  (checksum {total})")
    return elapsed


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--c-max", type=int, default=3000)
    parser.add_argument("--p-max", type=int, default=100_000)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("c", _kernels))
    else:
        print("compiled kernel not built; timing the fallback only")

    times = {}
    for name, mod in backends:
        times[name] = bench(
            f"triples_scan[{name}] c<={args.c_max}",
            mod.triples_scan,
            range(1, args.c_max + 1),
        )
    for name, mod in backends:
        bench(
            f"two_squares_scan[{name}] p<={args.p_max}",
            mod.two_squares_scan,
            range(2, args.p_max + 1),
        )
    if len(times) == 2:
        print(f"triples_scan speedup: {times['python'] / times['c']:.1f}x")


if __name__ == "__main__":
    main()
