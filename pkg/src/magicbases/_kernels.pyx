# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same signatures and node counts as ``_kernels_py``."""

from libc.stdlib cimport calloc, free

import numpy as np


cdef struct XState:
    int kind
    int k
    int n
    int top
    int depth
    long long distinct
    long long best
    long long nodes
    int *cnt
    int *chosen
    int *witness


cdef inline void _add(XState *st, int x) noexcept nogil:
    cdef int i, v
    cdef long long d = 0
    if st.kind == 1:
        for i in range(st.depth):
            v = x - st.chosen[i]
            st.cnt[v] += 1
            if st.cnt[v] == 1:
                d += 1
    else:
        for i in range(st.depth):
            v = x + st.chosen[i]
            st.cnt[v] += 1
            if st.cnt[v] == 1:
                d += 1
        v = 2 * x
        st.cnt[v] += 1
        if st.cnt[v] == 1:
            d += 1
    st.chosen[st.depth] = x
    st.depth += 1
    st.distinct += d


cdef inline void _remove(XState *st) noexcept nogil:
    cdef int i, v, x
    cdef long long d = 0
    st.depth -= 1
    x = st.chosen[st.depth]
    if st.kind == 1:
        for i in range(st.depth):
            v = x - st.chosen[i]
            st.cnt[v] -= 1
            if st.cnt[v] == 0:
                d += 1
    else:
        for i in range(st.depth):
            v = x + st.chosen[i]
            st.cnt[v] -= 1
            if st.cnt[v] == 0:
                d += 1
        v = 2 * x
        st.cnt[v] -= 1
        if st.cnt[v] == 0:
            d += 1
    st.distinct -= d


cdef inline long long _value(XState *st, long long distinct) noexcept nogil:
    if st.kind == 1:
        return 2 * distinct + 1
    return distinct


cdef void _dfs(XState *st) noexcept nogil:
    cdef int j, r, last, lo, x, i
    cdef long long budget, free_slots, v
    st.nodes += 1
    j = st.depth
    if j == st.k:
        v = _value(st, st.distinct)
        if v > st.best:
            st.best = v
            for i in range(j):
                st.witness[i] = st.chosen[i]
        return
    r = st.k - j
    last = st.chosen[j - 1]
    if st.n - last < r:
        return
    free_slots = 0
    if st.kind == 1:
        budget = <long long>r * j + <long long>r * (r - 1) // 2
        for i in range(1, st.top + 1):
            if st.cnt[i] == 0:
                free_slots += 1
    else:
        budget = <long long>r * (st.k + j + 1) // 2
        lo = st.chosen[0] + last + 1
        for i in range(lo, st.top + 1):
            if st.cnt[i] == 0:
                free_slots += 1
    if budget > free_slots:
        budget = free_slots
    if _value(st, st.distinct + budget) <= st.best:
        return
    for x in range(last + 1, st.n - r + 2):
        _add(st, x)
        _dfs(st)
        _remove(st)


def extremal_search(int kind, int k, int n, prefix):
    cdef XState st
    cdef int x
    st.kind = kind
    st.k = k
    st.n = n
    st.top = n - 1 if kind == 1 else 2 * n
    st.depth = 0
    st.distinct = 0
    st.best = -1
    st.nodes = 0
    st.cnt = <int *>calloc(2 * n + 2, sizeof(int))
    st.chosen = <int *>calloc(k + len(prefix) + 1, sizeof(int))
    st.witness = <int *>calloc(k + 1, sizeof(int))
    if st.cnt == NULL or st.chosen == NULL or st.witness == NULL:
        free(st.cnt); free(st.chosen); free(st.witness)
        raise MemoryError()
    try:
        for x in prefix:
            _add(&st, x)
        if st.depth <= k and (st.depth == 0 or st.chosen[st.depth - 1] <= n):
            with nogil:
                _dfs(&st)
        witness = None
        if st.best >= 0:
            witness = tuple(st.witness[i] for i in range(k))
        return st.best, witness, st.nodes
    finally:
        free(st.cnt)
        free(st.chosen)
        free(st.witness)


cdef long long _magic_scan(int n, int m, int first, int *idx, char *in_a,
                           char *sums, int *comp, int *found_s) noexcept nogil:
    cdef int N = n + m
    cdef int s_min = 6
    cdef int s_max = 3 * N - 3
    cdef int i, j, c, nc, lo, hi, s, nsums, v
    cdef bint ok
    cdef long long nodes = 0
    if s_max < 6:
        s_max = 6
    found_s[0] = 0
    if first + n - 1 > N:
        return 0
    idx[0] = first
    for i in range(1, n):
        idx[i] = first + i
    while True:
        nodes += 1
        if m == 0:
            found_s[0] = s_min
            return nodes
        if n >= 2:
            for c in range(N + 1):
                in_a[c] = 0
            for i in range(n):
                in_a[idx[i]] = 1
            nc = 0
            for c in range(1, N + 1):
                if not in_a[c]:
                    comp[nc] = c
                    nc += 1
            lo = idx[0] + idx[1] + comp[nc - 1]
            if lo < s_min:
                lo = s_min
            hi = idx[n - 2] + idx[n - 1] + comp[0]
            if hi > s_max:
                hi = s_max
            if lo <= hi:
                for v in range(2 * N + 2):
                    sums[v] = 0
                nsums = 0
                for i in range(n):
                    for j in range(i + 1, n):
                        v = idx[i] + idx[j]
                        if not sums[v]:
                            sums[v] = 1
                            nsums += 1
                if nsums >= m:
                    for s in range(lo, hi + 1):
                        ok = True
                        for i in range(nc):
                            v = s - comp[i]
                            if v < 0 or v > 2 * N + 1 or not sums[v]:
                                ok = False
                                break
                        if ok:
                            found_s[0] = s
                            return nodes
        # next combination of the tail in lex order
        i = n - 1
        while i >= 1 and idx[i] == N - (n - 1 - i):
            i -= 1
        if i < 1:
            return nodes
        idx[i] += 1
        for j in range(i + 1, n):
            idx[j] = idx[j - 1] + 1


def magic_scan(int n, int m, int first):
    cdef int N = n + m
    cdef int *idx = <int *>calloc(n + 1, sizeof(int))
    cdef char *in_a = <char *>calloc(N + 2, sizeof(char))
    cdef char *sums = <char *>calloc(2 * N + 3, sizeof(char))
    cdef int *comp = <int *>calloc(N + 1, sizeof(int))
    cdef int found_s = 0
    cdef long long nodes
    if idx == NULL or in_a == NULL or sums == NULL or comp == NULL:
        free(idx); free(in_a); free(sums); free(comp)
        raise MemoryError()
    try:
        with nogil:
            nodes = _magic_scan(n, m, first, idx, in_a, sums, comp, &found_s)
        if found_s:
            return tuple(idx[i] for i in range(n)), found_s, nodes
        return None, 0, nodes
    finally:
        free(idx)
        free(in_a)
        free(sums)
        free(comp)


def triple_counts(elements, long long lo, long long hi):
    cdef long long[:] el = np.asarray(elements, dtype=np.int64)
    out_arr = np.zeros(hi - lo + 1, dtype=np.int64)
    cdef long long[:] out = out_arr
    cdef Py_ssize_t ne = el.shape[0]
    if ne == 0:
        return out_arr
    cdef long long base = el[0]
    cdef long long top = el[ne - 1]
    pairs_arr = np.zeros(2 * (top - base) + 1, dtype=np.int64)
    cdef long long[:] pairs = pairs_arr
    cdef Py_ssize_t npairs = pairs.shape[0]
    cdef Py_ssize_t ci, ai
    cdef long long c, i0, i1, i, off
    with nogil:
        for ci in range(ne):
            c = el[ci]
            for ai in range(ci + 1):
                pairs[el[ai] + c - 2 * base] += 1
            i0 = lo - c - 2 * base
            if i0 < 0:
                i0 = 0
            i1 = hi - c - 2 * base
            if i1 > npairs - 1:
                i1 = npairs - 1
            off = 2 * base + c - lo
            i = i0
            while i <= i1:
                out[i + off] += pairs[i]
                i += 1
    return out_arr
