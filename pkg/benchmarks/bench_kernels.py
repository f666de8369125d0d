#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy twins.

Run from the repo root:

    python3 benchmarks/bench_kernels.py [--repeats N]

Requires numba importable and not disabled via SECTORPOLY_DISABLE_NUMBA
(otherwise only the numpy path is timed).
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from sectorpoly import kernels
from sectorpoly.poly import SignClass, from_polar
from sectorpoly.synthesis import snapped_ratio, synthesize


def _sample_polys(count: int, seed: int) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    polys = []
    while len(polys) < count:
        n = int(rng.integers(2, 13))
        r = float(rng.uniform(0.1, 10.0))
        alpha = float(rng.uniform(math.pi / n, math.pi))
        if alpha <= math.pi / n or snapped_ratio(alpha)[1]:
            continue
        result = synthesize(from_polar(r, alpha), n, SignClass.POSITIVE)
        polys.append(result.coeffs.astype(np.complex128))
    return polys


def _sample_matrices(count: int, n: int, seed: int) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    return [rng.normal(size=(n, n)).astype(np.complex128) for _ in range(count)]


def _time(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_aberth(repeats: int) -> None:
    polys = _sample_polys(400, seed=1)
    starts = [kernels.initial_guesses(c) for c in polys]

    def run(fn):
        for c, z0 in zip(polys, starts):
            fn(c, z0, 500, 1e-12)

    rows = [("numpy", _time(lambda: run(kernels.aberth_iterate_numpy), repeats))]
    if kernels.aberth_iterate_numba is not None:
        run(kernels.aberth_iterate_numba)  # warm the JIT cache
        rows.append(("numba", _time(lambda: run(kernels.aberth_iterate_numba), repeats)))
    _report("root iteration (400 polynomials, degree <= 12)", rows)


def bench_minors(repeats: int) -> None:
    mats = _sample_matrices(40, 10, seed=2)

    def run(fn):
        for a in mats:
            fn(a)

    rows = [("numpy", _time(lambda: run(kernels.minor_sums_numpy), repeats))]
    if kernels.minor_sums_numba is not None:
        run(kernels.minor_sums_numba)
        rows.append(("numba", _time(lambda: run(kernels.minor_sums_numba), repeats)))
    _report("principal minors (40 matrices, n = 10, 1023 subsets each)", rows)


def _report(title: str, rows: list[tuple[str, float]]) -> None:
    print(f"\n{title}")
    base = rows[0][1]
    for name, seconds in rows:
        speedup = base / seconds
        print(f"  {name:6s} {seconds * 1e3:9.2f} ms   x{speedup:.1f}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    print(f"selected backend: {kernels.backend_name()}")
    bench_aberth(args.repeats)
    bench_minors(args.repeats)


if __name__ == "__main__":
    main()
