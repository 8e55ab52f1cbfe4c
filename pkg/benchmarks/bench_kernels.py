"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends; results are checked for equality
before timings are reported.
"""

import argparse
import time

import numpy as np

from magicbases import _kernels_py

try:
    from magicbases import _kernels as compiled
except ImportError:
    compiled = None


def extremal_cells(mod, n):
    out = []
    for kind in (0, 1):
        for k in range(2, n + 1):
            for a in range(2, n - k + 3):
                out.append(mod.extremal_search(kind, k, n, (1, a)))
    return out


def magic_scans(mod, n):
    return [mod.magic_scan(n, m, first)
            for m in range(n * (n - 1) // 2 - 4, n * (n - 1) // 2 + 1)
            for first in range(1, m + 2)]


def triple_window(mod, size):
    el = sorted(set(np.random.default_rng(0).integers(0, 50 * size, size=size).tolist()))
    return np.asarray(mod.triple_counts(el, 3 * el[0], 3 * el[-1])).tolist()


WORKLOADS = [
    ("extremal_search, all prefixes, n=16", lambda mod: extremal_cells(mod, 16)),
    ("magic_scan, n=5, top five edge counts", lambda mod: magic_scans(mod, 5)),
    ("triple_counts, 300 elements", lambda mod: triple_window(mod, 300)),
]


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if compiled is None:
        raise SystemExit("compiled extension not built; run pip install --no-build-isolation -e .")

    print(f"{'workload':44s} {'compiled':>10s} {'python':>10s} {'speedup':>8s}")
    for name, work in WORKLOADS:
        tc, rc = best_of(lambda: work(compiled), args.repeat)
        tp, rp = best_of(lambda: work(_kernels_py), 1)
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:44s} {tc:10.4f} {tp:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
