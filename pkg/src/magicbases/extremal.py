"""Exact s(k,n) and d(k,n) by branch-and-bound, and the Sidon
distribution-discrepancy statistic."""

from __future__ import annotations

import bisect
import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .common import SearchResult
from .intset import IntSet

# C(28, 14) ~ 4e7 leaves is the most the pruned search handles at desk scale
MAX_N = 28

SUMS, DIFFS = 0, 1


def _search(kind: int, k: int, n: int, threads: int) -> SearchResult:
    if not 1 <= k <= n <= MAX_N:
        raise ValueError(f"need 1 <= k <= n <= {MAX_N}, got k={k}, n={n}")
    # translation invariance: the lexicographically least optimum contains 1
    if k == 1:
        prefixes = [(1,)]
    else:
        prefixes = [(1, a) for a in range(2, n - k + 3)]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(lambda p: kernels.extremal_search(kind, k, n, p), prefixes))
    best, witness = -1, None
    for value, wit, _ in results:
        if value > best:
            best, witness = value, wit
    nodes = sum(r[2] for r in results)
    return SearchResult(best, IntSet(witness), nodes, True)


def s_exact(k: int, n: int, threads: int = 1) -> SearchResult:
    """max |A + A| over k-subsets A of [1, n], with the lex-least witness."""
    return _search(SUMS, k, n, threads)


def d_exact(k: int, n: int, threads: int = 1) -> SearchResult:
    """max |A - A| over k-subsets A of [1, n], with the lex-least witness."""
    return _search(DIFFS, k, n, threads)


def exact_table(max_n: int, kind: str = "s", threads: int = 1) -> list[tuple[int, int, SearchResult]]:
    """All cells ``1 <= k <= n <= max_n`` as ``(k, n, result)``."""
    fn = {"s": s_exact, "d": d_exact}[kind]
    return [(k, n, fn(k, n, threads)) for n in range(1, max_n + 1) for k in range(1, n + 1)]


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "n", "value", "witness", "nodes_explored"])
    for k, n, res in rows:
        w.writerow([k, n, res.value, ";".join(map(str, res.witness)), res.nodes_explored])
    return buf.getvalue()


@dataclass(frozen=True)
class Discrepancy:
    n: int
    modulus: int
    worst_interval: tuple
    worst_residue: int
    observed: int
    expected: Fraction
    normalized_error: float


def grid_points(n: int, grid: int) -> list[int]:
    """``grid + 1`` equispaced cut points ``0 = x_0 < ... < x_grid = n``."""
    return sorted({round(i * n / grid) for i in range(grid + 1)})


def distribution_discrepancy(A: IntSet, n: int, m: int, grid: int) -> Discrepancy:
    """Worst ``| |A & I & (j mod m)| - |A||I|/(m n) | / sqrt(n)`` over grid
    intervals ``I = [x_i + 1, x_j]`` and residues ``j``."""
    if m < 1 or grid < 1:
        raise ValueError("modulus and grid must be positive")
    if len(A) and (A.lo < 1 or A.hi > n):
        raise ValueError("A must lie inside [1, n]")
    by_res = [[x for x in A if x % m == j] for j in range(m)]
    pts = grid_points(n, grid)
    root = math.sqrt(n)
    size = len(A)
    worst = None
    for i, lo in enumerate(pts):
        for hi in pts[i + 1:]:
            expected = Fraction(size * (hi - lo), m * n)
            for j, res in enumerate(by_res):
                obs = bisect.bisect_right(res, hi) - bisect.bisect_right(res, lo)
                err = float(abs(obs - expected)) / root
                if worst is None or err > worst.normalized_error:
                    worst = Discrepancy(n, m, (lo + 1, hi), j, obs, expected, err)
    return worst
