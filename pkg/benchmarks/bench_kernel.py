"""Benchmark: pure-Python vs compiled elimination core.

Times both kernel implementations on representative workloads -- dense random
row reductions at the sizes the package actually produces (Hom-space solves,
ideal closures, path-space reductions) and Bareiss determinants -- and prints
a comparison table.  Run from the repository root:

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from gmatrices import _kernel_py

try:
    from gmatrices import _speedups
except ImportError:
    _speedups = None


def random_rows(rng, nrows, ncols, bound, sparsity=0.0):
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            if sparsity and rng.random() < sparsity:
                row.append(0)
            else:
                row.append(rng.randint(-bound, bound))
        rows.append(row)
    return rows


WORKLOADS = [
    ("hom-solve 60x24", dict(nrows=60, ncols=24, bound=3, sparsity=0.6)),
    ("hom-solve 180x48", dict(nrows=180, ncols=48, bound=3, sparsity=0.7)),
    ("closure 120x30", dict(nrows=120, ncols=30, bound=5, sparsity=0.3)),
    ("dense 80x80", dict(nrows=80, ncols=80, bound=9, sparsity=0.0)),
    ("wide 40x160", dict(nrows=40, ncols=160, bound=4, sparsity=0.5)),
]


def bench_rref(impl, batches, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for rows in batches:
            impl.rref_int([list(r) for r in rows])
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_det(impl, batches, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for rows in batches:
            impl.det_int([list(r) for r in rows])
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--batch", type=int, default=20)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernel not built; benchmarking the pure kernel only")
    impls = [("pure", _kernel_py)] + (
        [("compiled", _speedups)] if _speedups else []
    )

    print(f"{'workload':<20} " + " ".join(f"{name:>12}" for name, _ in impls) + "      ratio")
    rng = random.Random(20240809)
    for label, params in WORKLOADS:
        batches = [random_rows(rng, **params) for _ in range(args.batch)]
        times = [bench_rref(impl, batches, args.repeat) for _, impl in impls]
        ratio = times[0] / times[-1] if len(times) > 1 and times[-1] else 1.0
        cols = " ".join(f"{t * 1000:>10.1f}ms" for t in times)
        print(f"{label:<20} {cols}    {ratio:>5.2f}x")
    det_batches = [random_rows(rng, 40, 40, 9) for _ in range(args.batch)]
    times = [bench_det(impl, det_batches, args.repeat) for _, impl in impls]
    ratio = times[0] / times[-1] if len(times) > 1 and times[-1] else 1.0
    cols = " ".join(f"{t * 1000:>10.1f}ms" for t in times)
    print(f"{'det 40x40':<20} {cols}    {ratio:>5.2f}x")


if __name__ == "__main__":
    main()
