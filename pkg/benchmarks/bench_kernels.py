#!/usr/bin/env python3
"""Benchmark the numba kernel against the pure-numpy fallback.

Runs full ball enumerations (kernel + shared dedup/bookkeeping) and a
kernel-only microbenchmark on the largest frontier, for each available
backend.  Invoke directly:

    python benchmarks/bench_kernels.py [--quick]

The backend used by the library elsewhere is chosen by GYOJA_BACKEND; this
script always exercises both explicitly.
"""

from __future__ import annotations

import argparse
import time

from gyoja import _kernels
from gyoja.cartan import build_affine_system, parse_cartan_type
from gyoja.weyl import enumerate_ball

FULL_CASES = [("F4", 28), ("C3", 60), ("G2", 120)]
QUICK_CASES = [("F4", 16), ("C3", 30), ("G2", 60)]


def time_enumeration(label: str, radius: int, backend: str) -> tuple[float, int]:
    system = build_affine_system(parse_cartan_type(label))
    t0 = time.perf_counter()
    ball = enumerate_ball(system, radius, backend=backend)
    return time.perf_counter() - t0, ball.total


def time_kernel(label: str, radius: int, backend: str, repeats: int = 5) -> tuple[float, int]:
    system = build_affine_system(parse_cartan_type(label))
    ball = enumerate_ball(system, radius, backend=backend)
    frontier = ball.levels[-1]
    t0 = time.perf_counter()
    for _ in range(repeats):
        _kernels.expand_frontier(
            frontier.lin, frontier.tr, system.gen_linear, system.gen_translation, backend=backend
        )
    return (time.perf_counter() - t0) / repeats, len(frontier)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller radii")
    args = parser.parse_args()
    cases = QUICK_CASES if args.quick else FULL_CASES

    backends = _kernels.available_backends()
    if "numba" in backends:
        # first call pays JIT compilation; keep it out of the measurements
        time_enumeration("C3", 4, "numba")
    else:
        print("numba not importable; benchmarking the numpy path only")

    print(f"{'case':10} {'backend':8} {'elements':>10} {'total s':>9} {'kelem/s':>9}")
    totals: dict[str, float] = {}
    for label, radius in cases:
        for backend in backends:
            dt, total = time_enumeration(label, radius, backend)
            totals[backend] = totals.get(backend, 0.0) + dt
            print(f"{label + ' N=' + str(radius):10} {backend:8} {total:>10} {dt:>9.3f} {total / dt / 1e3:>9.1f}")
    if len(backends) == 2:
        print(f"{'':10} {'speedup':8} numba vs numpy on full enumeration: "
              f"{totals['numpy'] / totals['numba']:.2f}x")

    print()
    print(f"{'kernel-only (largest frontier)':32} {'backend':8} {'frontier':>9} {'ms/call':>9}")
    label, radius = cases[0]
    per: dict[str, float] = {}
    for backend in backends:
        dt, size = time_kernel(label, radius, backend)
        per[backend] = dt
        print(f"{label + ' N=' + str(radius):32} {backend:8} {size:>9} {dt * 1e3:>9.2f}")
    if len(backends) == 2:
        print(f"{'':32} {'speedup':8} numba vs numpy on the kernel: {per['numpy'] / per['numba']:.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
