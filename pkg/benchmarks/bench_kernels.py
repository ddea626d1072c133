"""Benchmark the compiled kernels against the pure-Python fallback.

Three workloads, matching how the verification sweeps spend their time:

* ``model``    separation-model enumeration over every labeled chain
               graph on four vertices;
* ``model6``   the same for 60 random six-vertex graphs;
* ``closure``  compositional-graphoid closure of the separation model of
               40 random five-vertex graphs.

Run:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from mvrcg._kernels import load_compiled, pyfallback
from mvrcg.enumeration import enumerate_mvr_cgs, random_mvr_cg

FULL_AXIOMS = 0b11111


def workload_model(kernel):
    total = 0
    for g in enumerate_mvr_cgs(4):
        total += len(kernel.global_model_codes(g.n, g.pa, g.ch, g.nb))
    return total


def workload_model6(kernel, graphs):
    total = 0
    for g in graphs:
        total += len(kernel.global_model_codes(g.n, g.pa, g.ch, g.nb))
    return total


def workload_closure(kernel, graphs):
    total = 0
    for g in graphs:
        codes = kernel.global_model_codes(g.n, g.pa, g.ch, g.nb)
        total += len(kernel.close_codes(g.n, codes, FULL_AXIOMS))
    return total


def timed(fn, *args):
    best = float("inf")
    result = None
    for _ in range(3):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    compiled = load_compiled()
    rng = random.Random(5150)
    graphs6 = [random_mvr_cg(6, rng) for _ in range(60)]
    graphs5 = [random_mvr_cg(5, rng) for _ in range(40)]

    rows = []
    for name, fn, args in (
        ("model  (all n=4 graphs)", workload_model, ()),
        ("model6 (60 random n=6)", workload_model6, (graphs6,)),
        ("closure (40 random n=5)", workload_closure, (graphs5,)),
    ):
        py_t, py_r = timed(fn, pyfallback, *args)
        row = {"name": name, "python": py_t, "check": py_r}
        if compiled is not None:
            c_t, c_r = timed(fn, compiled, *args)
            assert c_r == py_r, f"{name}: backends disagree"
            row["compiled"] = c_t
        rows.append(row)

    print(f"{'workload':<26} {'python':>10} {'compiled':>10} {'speedup':>9}")
    for row in rows:
        if "compiled" in row:
            print(f"{row['name']:<26} {row['python']:>9.3f}s "
                  f"{row['compiled']:>9.3f}s {row['python'] / row['compiled']:>8.1f}x")
        else:
            print(f"{row['name']:<26} {row['python']:>9.3f}s {'-':>10} {'-':>9}")
    if compiled is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
