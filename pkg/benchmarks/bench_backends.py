#!/usr/bin/env python3
"""Time the numba kernels against the vectorized numpy fallbacks.

Runs each hot kernel on a representative sweep workload under both backends
and prints the wall time and speedup.  The numba timings exclude the one-off
jit compilation (exercised by a warmup pass); use --quick to shrink the
workloads, e.g. on machines without a jit cache.
"""

import argparse
import time

import numpy as np

from closurespaces import _kernels, enumeration


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def space_workloads(quick):
    count = 20_000 if quick else 200_000
    rng = np.random.default_rng(12)
    random_n3 = rng.integers(0, 8, size=(count, 8), dtype=np.int64)
    yield "axiom_flags, %dk random n=3 tables" % (count // 1000), "axiom_flags", (random_n3, 3)
    yield "symmetry_flags, same batch", "symmetry_flags", (random_n3, 3)
    extsep = enumeration.extsep_tables(3)
    yield "criteria_flags, all %d extsep n=3" % extsep.shape[0], "criteria_flags", (extsep, 3)
    iso = enumeration.isotonic_tables(3)
    yield "roundtrip_flags, all 8000 isotonic n=3", "roundtrip_flags", (iso, 3)


def map_workload():
    tables = enumeration.all_tables_block(2, 0, 256)
    fmaps = enumeration.all_assignments(2, 2)
    imgs, pres = _kernels.build_map_tables(fmaps, 2, 2)
    return "map_flags, 256x256x4 instances at n=2", "map_flags", (tables, tables, imgs, pres, 2, 2)


def worker_scaling(quick):
    """The merge contract lets chunks run on a thread pool; the numba
    kernels release the GIL, so this measures real parallel speedup."""
    from concurrent.futures import ThreadPoolExecutor

    count = 200_000 if quick else 2_000_000
    rng = np.random.default_rng(5)
    tables = rng.integers(0, 8, size=(count, 8), dtype=np.int64)
    kernel = _kernels.kernel("criteria_flags", "numba")
    kernel(tables[:16], 3)
    chunks = np.array_split(tables, 32)

    def run(workers):
        start = time.perf_counter()
        if workers == 1:
            for c in chunks:
                kernel(c, 3)
        else:
            with ThreadPoolExecutor(workers) as pool:
                list(pool.map(lambda c: kernel(c, 3), chunks))
        return time.perf_counter() - start

    t1 = run(1)
    t4 = run(4)
    print(f"\ncriteria_flags on {count // 1000}k tables, chunked x32:")
    print(f"  1 worker {t1:.2f}s   4 workers {t4:.2f}s   speedup {t1 / t4:.2f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller batches")
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        parser.error("numba is not importable; nothing to compare")

    jobs = list(space_workloads(args.quick))
    jobs.append(map_workload())

    print(f"{'workload':<45} {'numba':>9} {'numpy':>9} {'speedup':>8}")
    for label, name, kargs in jobs:
        jit = _kernels.kernel(name, "numba")
        vec = _kernels.kernel(name, "numpy")
        jit(*kargs)  # warm the jit cache before timing
        t_numba = timed(jit, *kargs)
        t_numpy = timed(vec, *kargs, repeat=1 if not args.quick else 3)
        print(f"{label:<45} {t_numba:>8.3f}s {t_numpy:>8.3f}s {t_numpy / t_numba:>7.1f}x")

    worker_scaling(args.quick)


if __name__ == "__main__":
    main()
