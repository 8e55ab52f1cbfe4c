"""Independent brute-force oracles used to derive and cross-check fixtures.

Nothing here touches the package internals: plain sets and itertools only.
"""

from itertools import combinations, permutations


def naive_sumset(xs):
    return sorted({a + b for a in xs for b in xs})


def naive_restricted(xs):
    return sorted({a + b for a in xs for b in xs if a != b})


def naive_diffset(xs):
    return sorted({a - b for a in xs for b in xs})


def naive_sidon(xs):
    sums = [a + b for i, a in enumerate(xs) for b in xs[i:]]
    return len(sums) == len(set(sums))


def brute_s(k, n):
    return max(len(naive_sumset(A)) for A in combinations(range(1, n + 1), k))


def brute_d(k, n):
    return max(len(naive_diffset(A)) for A in combinations(range(1, n + 1), k))


def sidon_exists(k, n):
    """Backtracking search for a Sidon k-subset of [1, n]."""
    def extend(chosen, diffs, start):
        if len(chosen) == k:
            return True
        for x in range(start, n + 1):
            new = {x - a for a in chosen}
            if len(new) == len(chosen) and not (new & diffs):
                if extend(chosen + [x], diffs | new, x + 1):
                    return True
        return False
    return extend([], set(), 1)


def naive_max_magic(n):
    """M(n) by enumerating graphs and injective vertex labellings.

    The magic sum follows from the label total: ``m*s = sum(edge labels) +
    sum over edges of the two vertex labels`` and the labels fill ``[n+m]``.
    """
    pairs = list(combinations(range(n), 2))
    best = 0
    for m in range(len(pairs), 0, -1):
        N = n + m
        total = N * (N + 1) // 2
        for edges in combinations(pairs, m):
            for lab in permutations(range(1, N + 1), n):
                rest = total - sum(lab)
                num = rest + sum(lab[u] + lab[v] for u, v in edges)
                if num % m:
                    continue
                s = num // m
                el = {s - lab[u] - lab[v] for u, v in edges}
                if len(el) == m and el.isdisjoint(lab) and all(1 <= x <= N for x in el):
                    return m
    return best


def permutation_magic_small(n):
    """M(n) by assigning every permutation of [n+m] to vertices and edges.

    Exponential; only for n <= 3.
    """
    pairs = list(combinations(range(n), 2))
    for m in range(len(pairs), 0, -1):
        N = n + m
        for edges in combinations(pairs, m):
            for perm in permutations(range(1, N + 1)):
                vl, el = perm[:n], perm[n:]
                sums = {vl[u] + vl[v] + e for (u, v), e in zip(edges, el)}
                if len(sums) == 1:
                    return m
    return 0
