#!/usr/bin/env python3
"""Benchmark the compiled scoring kernel against the pure-Python fallback.

Builds a registrar-style corpus whose candidate pairs have multi-object
neighbor sets, then times full similarity iterations on both backends and
checks they produce identical scores.

    python benchmarks/bench_kernels.py [--students 400] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import rdfsummarize as rs
from rdfsummarize import _kernel_py
from rdfsummarize.similarity import build_candidate_pairs, build_pair_arrays

try:
    from rdfsummarize import _kernel
except ImportError:
    _kernel = None


def make_corpus(n_students: int) -> str:
    lines = []
    n_courses = max(10, n_students // 10)
    for i in range(n_students):
        s = f"<urn:b:Student{i}>"
        lines.append(f'{s} <urn:b:telephone> "xxx-xxx-{i % 50:04d}" .')
        lines.append(f"{s} <urn:b:memberOf> <urn:b:Department{i % 8}> .")
        for k in range(2 + i % 3):
            c = (i * 7 + k * 13) % n_courses
            lines.append(f"{s} <urn:b:takesCourse> <urn:b:Course{c}> .")
        lines.append(f'{s} <urn:b:name> "student number {i}" .')
        lines.append(f'{s} <urn:b:emailAddress> "student{i}@dept{i % 8}.edu" .')
    for c in range(n_courses):
        lines.append(f'<urn:b:Course{c}> <urn:b:name> "course number {c}" .')
        lines.append(f'<urn:b:Course{c}> <urn:b:level> "undergraduate" .')
    return "\n".join(lines) + "\n"


def run_iterations(module, arrays, n_pairs, beta, exact_limit, max_iter=4):
    prev = np.ones(n_pairs)
    out = np.empty(n_pairs)
    for _ in range(max_iter):
        module.score_pairs(prev, out, arrays.factor, arrays.group_start,
                           arrays.group_weight, arrays.group_rows,
                           arrays.group_cols, arrays.cell_start,
                           arrays.cell_ref, arrays.cell_const,
                           beta, exact_limit, 0, n_pairs)
        prev, out = out, prev
    return prev


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--students", type=int, default=400)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"building corpus ({args.students} students)...")
    g = rs.parse_ntriples(make_corpus(args.students))
    params = rs.IterationParams()
    t0 = time.perf_counter()
    matrix, pairs = build_candidate_pairs(g, params)
    arrays = build_pair_arrays(g, pairs, matrix, params)
    build_s = time.perf_counter() - t0
    cells = len(arrays.cell_ref)
    print(f"subjects={g.subject_count} pairs={len(pairs)} "
          f"matching-cells={cells} (built in {build_s:.2f}s)")

    results = {}
    timings = {}
    backends = [("python", _kernel_py)]
    if _kernel is not None:
        backends.insert(0, ("c", _kernel))
    else:
        print("compiled kernel not built; timing the fallback only")
    for name, module in backends:
        best = float("inf")
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            scores = run_iterations(module, arrays, len(pairs), params.beta,
                                    params.exact_limit)
            best = min(best, time.perf_counter() - t0)
        results[name] = scores
        timings[name] = best
        rate = len(pairs) * 4 / best
        print(f"{name:>7}: {best:.3f}s for 4 iterations "
              f"({rate:,.0f} pair-updates/s)")

    if len(results) == 2:
        diff = float(np.max(np.abs(results["c"] - results["python"])))
        print(f"max |c - python| = {diff:.3e}")
        assert diff == 0.0, "backends disagree"
        print(f"speedup: {timings['python'] / timings['c']:.1f}x")


if __name__ == "__main__":
    main()
