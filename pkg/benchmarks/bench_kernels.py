"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run once per available backend; the results must agree
and the best wall time of ``--repeat`` runs is reported.
"""

from __future__ import annotations

import argparse
import time

from liftmrd import kernels
from liftmrd.construct import CodeParams, build_multi, enumerate_multi
from liftmrd.mrd import MrdParams, build_mrd, enumerate_mrd


def injection_workload(q, n, k, d):
    code = build_multi(CodeParams(q, n, k, d))
    spaces = enumerate_multi(code)
    field = spaces[0].field
    bases = [list(U.rows()) for U in spaces]
    label = f"min_pair_injection q={q} n={n} k={k} d={d} ({len(bases)} subspaces)"
    return label, "min_pair_injection", (bases, n, field)


def rank_workload(q, k, w, d):
    code = build_mrd(MrdParams(q, k, w, d))
    words = enumerate_mrd(code)
    mats = [w_.tolist() for w_ in words]
    label = f"min_pair_rank_distance q={q} {k}x{w} d={d} ({len(mats)} matrices)"
    return label, "min_pair_rank_distance", (mats, words[0].cols, code.base_field)


WORKLOADS = [
    lambda: injection_workload(2, 8, 3, 2),
    lambda: injection_workload(3, 6, 2, 2),
    lambda: injection_workload(2, 7, 3, 2),
    lambda: rank_workload(2, 3, 3, 2),
    lambda: rank_workload(3, 3, 3, 2),
]


def best_time(fn, args, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    names = sorted(kernels.AVAILABLE)
    print(f"backends: {', '.join(names)}")
    for make in WORKLOADS:
        label, op, inputs = make()
        times, results = {}, {}
        for name in names:
            times[name], results[name] = best_time(getattr(kernels.get(name), op), inputs, args.repeat)
        if len(set(results.values())) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        cells = "  ".join(f"{name}={times[name] * 1e3:9.2f} ms" for name in names)
        speedup = ""
        if "cython" in times and times["cython"] > 0:
            speedup = f"  speedup={times['python'] / times['cython']:.1f}x"
        print(f"{label:<62} {cells}{speedup}  result={results[names[0]]}")


if __name__ == "__main__":
    main()
