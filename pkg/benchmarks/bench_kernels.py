#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the three hot enumeration kernels on representative inputs and prints
a table with the speedup. Run from a checkout with the extension built:

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from anglekit import cones_construction, cyl_helix, log_spiral
from anglekit import _kernels_py as kernels_py
from anglekit._triples import ordered_triple_count
from anglekit.counters import _class_table

try:
    from anglekit import _kernels as kernels_c
except ImportError:
    kernels_c = None


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_triple_cosines(backend, coords):
    n = coords.shape[0]
    out = np.empty(ordered_triple_count(n))

    def run():
        backend.fill_triple_cosines(coords, out, 0, n)

    return run


def bench_scans(backend, coords, eps=1e-9):
    n = coords.shape[0]

    def run():
        _, mask = backend.collinear_scan(coords, eps)
        backend.concyclic_scan(coords, eps, mask, 0, n)

    return run


def bench_chains(backend, table, n, k):
    def run():
        backend.chain_keys(table, n, k, False)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    args = parser.parse_args()

    helix_n = 30 if args.quick else 60
    scan_cfg = cones_construction(29) if args.quick else cones_construction(77)
    chain_cfg = log_spiral(10 if args.quick else 14, 0.1)
    chain_k = 2

    helix_coords = cyl_helix(helix_n).float_coords()
    scan_coords = scan_cfg.float_coords()
    table, _ = _class_table(chain_cfg, 1e-9, 1)
    chain_n = len(chain_cfg.points)

    cases = [
        (f"triple cosines, helix n={helix_n}",
         bench_triple_cosines(kernels_py, helix_coords),
         bench_triple_cosines(kernels_c, helix_coords) if kernels_c else None),
        (f"general-position scans, n={len(scan_coords)}",
         bench_scans(kernels_py, scan_coords),
         bench_scans(kernels_c, scan_coords) if kernels_c else None),
        (f"chain keys, spiral n={chain_n} k={chain_k}",
         bench_chains(kernels_py, table, chain_n, chain_k),
         bench_chains(kernels_c, table, chain_n, chain_k) if kernels_c else None),
    ]

    print(f"{'kernel':<42} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for name, pure_fn, c_fn in cases:
        t_pure = best_of(pure_fn)
        if c_fn is None:
            print(f"{name:<42} {t_pure:>10.4f} {'n/a':>11} {'n/a':>8}")
        else:
            t_c = best_of(c_fn)
            print(f"{name:<42} {t_pure:>10.4f} {t_c:>11.4f} {t_pure / t_c:>7.1f}x")
    if kernels_c is None:
        print("\ncompiled extension not available; built pure-only table")


if __name__ == "__main__":
    main()
