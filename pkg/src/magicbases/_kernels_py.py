"""Pure-Python versions of the hot kernels.

Every function here mirrors the compiled ``_kernels`` module exactly,
including the ``nodes`` counters, so results never depend on the backend.
"""

from itertools import combinations

import numpy as np


def extremal_search(kind, k, n, prefix):
    """Branch-and-bound over k-subsets of [1, n] extending ``prefix``.

    ``kind`` 0 maximises ``|A+A|``, 1 maximises ``|A-A|``. Children are tried
    in increasing order and only strict improvements replace the incumbent,
    so the witness is the lexicographically least optimum under ``prefix``.
    Returns ``(value, witness, nodes)``; value is -1 if no completion exists.
    """
    diff = kind == 1
    top = 2 * n if not diff else n - 1
    cnt = [0] * (2 * n + 2)
    chosen = []
    state = {"distinct": 0, "best": -1, "witness": None, "nodes": 0}

    def add(x):
        d = 0
        if diff:
            for a in chosen:
                v = x - a
                cnt[v] += 1
                if cnt[v] == 1:
                    d += 1
        else:
            for a in chosen:
                v = x + a
                cnt[v] += 1
                if cnt[v] == 1:
                    d += 1
            v = 2 * x
            cnt[v] += 1
            if cnt[v] == 1:
                d += 1
        chosen.append(x)
        state["distinct"] += d

    def remove():
        x = chosen.pop()
        d = 0
        if diff:
            for a in chosen:
                v = x - a
                cnt[v] -= 1
                if cnt[v] == 0:
                    d += 1
        else:
            for a in chosen:
                v = x + a
                cnt[v] -= 1
                if cnt[v] == 0:
                    d += 1
            v = 2 * x
            cnt[v] -= 1
            if cnt[v] == 0:
                d += 1
        state["distinct"] -= d

    def value(distinct):
        return 2 * distinct + 1 if diff else distinct

    def dfs():
        state["nodes"] += 1
        j = len(chosen)
        distinct = state["distinct"]
        if j == k:
            v = value(distinct)
            if v > state["best"]:
                state["best"] = v
                state["witness"] = tuple(chosen)
            return
        r = k - j
        last = chosen[-1]
        if n - last < r:
            return
        if diff:
            budget = r * j + r * (r - 1) // 2
            free = cnt[1:top + 1].count(0)
        else:
            budget = r * (k + j + 1) // 2
            lo = chosen[0] + last + 1
            free = cnt[lo:top + 1].count(0) if lo <= top else 0
        if value(distinct + min(budget, free)) <= state["best"]:
            return
        for x in range(last + 1, n - r + 2):
            add(x)
            dfs()
            remove()

    for x in prefix:
        add(x)
    if len(chosen) <= k and (not chosen or chosen[-1] <= n):
        dfs()
    return state["best"], state["witness"], state["nodes"]


def magic_scan(n, m, first):
    """First vertex-label set (lex order, minimum ``first``) and magic sum.

    Scans ``A`` with ``|A| = n``, ``min(A) = first`` inside ``[1, n+m]``;
    feasible when every label ``c`` outside ``A`` has ``s - c`` a sum of two
    distinct elements of ``A``. Returns ``(A, s, nodes)`` or ``(None, 0, nodes)``.
    """
    N = n + m
    nodes = 0
    s_min, s_max = 6, max(6, 3 * N - 3)
    if first + n - 1 > N:
        return None, 0, 0
    for tail in combinations(range(first + 1, N + 1), n - 1):
        A = (first,) + tail
        nodes += 1
        if m == 0:
            return A, s_min, nodes
        if n < 2:
            continue
        in_a = set(A)
        comp = [c for c in range(1, N + 1) if c not in in_a]
        cmin, cmax = comp[0], comp[-1]
        lo = max(s_min, A[0] + A[1] + cmax)
        hi = min(s_max, A[-2] + A[-1] + cmin)
        if lo > hi:
            continue
        sums = {a + b for a, b in combinations(A, 2)}
        if len(sums) < m:
            continue
        for s in range(lo, hi + 1):
            for c in comp:
                if s - c not in sums:
                    break
            else:
                return A, s, nodes
    return None, 0, nodes


def triple_counts(elements, lo, hi):
    """Counts of ``a + b + c`` (``a <= b <= c`` from ``elements``) on ``[lo, hi]``."""
    out = np.zeros(hi - lo + 1, dtype=np.int64)
    if not elements:
        return out
    base = elements[0]
    top = elements[-1]
    pairs = np.zeros(2 * (top - base) + 1, dtype=np.int64)  # index x -> sum x + 2*base
    seen = []
    for c in elements:
        seen.append(c)
        for a in seen:
            pairs[a + c - 2 * base] += 1
        # triple value = pair_index + 2*base + c must lie in [lo, hi]
        i0 = max(0, lo - c - 2 * base)
        i1 = min(len(pairs) - 1, hi - c - 2 * base)
        if i0 <= i1:
            o0 = i0 + 2 * base + c - lo
            out[o0:o0 + (i1 - i0 + 1)] += pairs[i0:i1 + 1]
    return out
