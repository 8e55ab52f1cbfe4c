"""Sorted integer sets with sum-set, difference-set and representation counts.

An :class:`IntSet` keeps its elements as a sorted tuple and lazily builds a
bit-vector over the shifted window ``[min, max]`` stored in a Python ``int``.
Dense sets (span small compared with ``|A|**2``) use shift-OR over that
bit-vector; sparse sets fall back to enumerating pairs.
"""

from __future__ import annotations

import bisect
import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator

import numpy as np

from . import kernels

# span / |A|^2 ratio above which pair enumeration beats shift-OR
_SPARSE_RATIO = 64


class IntSet:
    """Immutable finite set of integers kept in increasing order."""

    __slots__ = ("_elems", "_mask")

    def __init__(self, elements: Iterable[int] = ()):
        self._elems = tuple(sorted({int(x) for x in elements}))
        self._mask = None

    @classmethod
    def _from_sorted(cls, elems: tuple) -> "IntSet":
        obj = cls.__new__(cls)
        obj._elems = elems
        obj._mask = None
        return obj

    @classmethod
    def from_mask(cls, mask: int, offset: int) -> "IntSet":
        """Decode a bit-vector whose bit ``i`` stands for ``offset + i``."""
        if mask <= 0:
            return cls._from_sorted(())
        bits = bin(mask)[:1:-1]
        return cls._from_sorted(tuple(offset + i for i, ch in enumerate(bits) if ch == "1"))

    @property
    def elements(self) -> tuple:
        return self._elems

    @property
    def lo(self) -> int:
        return self._elems[0]

    @property
    def hi(self) -> int:
        return self._elems[-1]

    def mask(self) -> int:
        """Bit-vector relative to ``self.lo`` (bit 0 is the minimum)."""
        if self._mask is None:
            m = 0
            if self._elems:
                lo = self._elems[0]
                for x in self._elems:
                    m |= 1 << (x - lo)
            self._mask = m
        return self._mask

    def __len__(self) -> int:
        return len(self._elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elems)

    def __contains__(self, x) -> bool:
        i = bisect.bisect_left(self._elems, x)
        return i < len(self._elems) and self._elems[i] == x

    def __eq__(self, other) -> bool:
        if isinstance(other, IntSet):
            return self._elems == other._elems
        if isinstance(other, (set, frozenset)):
            return set(self._elems) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elems)

    def __repr__(self) -> str:
        if len(self._elems) > 20:
            head = ", ".join(map(str, self._elems[:10]))
            return f"IntSet([{head}, ...] size={len(self._elems)})"
        return f"IntSet({list(self._elems)})"

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet(self._elems + tuple(other))

    def __sub__(self, other: "IntSet") -> "IntSet":
        drop = set(other)
        return IntSet._from_sorted(tuple(x for x in self._elems if x not in drop))

    def shift(self, d: int) -> "IntSet":
        return IntSet._from_sorted(tuple(x + d for x in self._elems))

    def reflect(self, about: int) -> "IntSet":
        """Return ``{about - x}``."""
        return IntSet._from_sorted(tuple(about - x for x in reversed(self._elems)))

    def slice(self, lo: int, hi: int) -> "IntSet":
        """Elements in the closed interval ``[lo, hi]``."""
        i = bisect.bisect_left(self._elems, lo)
        j = bisect.bisect_right(self._elems, hi)
        return IntSet._from_sorted(self._elems[i:j])

    def count_in(self, lo: int, hi: int) -> int:
        return bisect.bisect_right(self._elems, hi) - bisect.bisect_left(self._elems, lo)

    def to_json(self) -> str:
        return json.dumps(list(self._elems))

    @classmethod
    def from_json(cls, text: str) -> "IntSet":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError("IntSet JSON must be an array of integers")
        return cls(data)

    def _sparse(self) -> bool:
        k = len(self._elems)
        return self.hi - self.lo > _SPARSE_RATIO * k * k


def from_ap(a: int, d: int, b: int) -> IntSet:
    """The progression ``{a + i*d : i = 0, ..., floor((b - a) / d)}``."""
    if d == 0:
        raise ValueError("common difference must be nonzero")
    if (d > 0 and b < a) or (d < 0 and b > a):
        raise ValueError(f"endpoint {b} not reachable from {a} with step {d}")
    count = (b - a) // d + 1
    return IntSet(a + i * d for i in range(count))


def sumset(A: IntSet) -> IntSet:
    """``A + A``, doublings included."""
    if not len(A):
        return IntSet()
    el = A.elements
    if A._sparse():
        return IntSet(a + b for a, b in combinations_with_replacement(el, 2))
    lo, mask = el[0], A.mask()
    out = 0
    for x in el:
        out |= mask << (x - lo)
    return IntSet.from_mask(out, 2 * lo)


def restricted_sumset(A: IntSet) -> IntSet:
    """``A (+) A``: sums of two distinct elements."""
    el = A.elements
    if len(el) < 2:
        return IntSet()
    if A._sparse():
        return IntSet(a + b for a, b in combinations(el, 2))
    lo, mask = el[0], A.mask()
    out = 0
    for x in el[:-1]:
        sh = x - lo + 1
        above = (mask >> sh) << sh
        out |= above << (x - lo)
    return IntSet.from_mask(out, 2 * lo)


def diffset(A: IntSet) -> IntSet:
    """``A - A``; symmetric about zero."""
    el = A.elements
    if not el:
        return IntSet()
    if A._sparse():
        pos = {b - a for a, b in combinations(el, 2)}
    else:
        lo, mask = el[0], A.mask()
        acc = 0
        for x in el:
            acc |= mask >> (x - lo)
        pos = set(IntSet.from_mask(acc >> 1, 1))
    return IntSet(pos | {0} | {-d for d in pos})


def is_sidon(A: IntSet) -> bool:
    """True iff every sum ``a + b`` with ``a <= b`` occurs once."""
    k = len(A)
    if k <= 1:
        return True
    # positive differences distinct <=> sums distinct
    seen = set()
    for a, b in combinations(A.elements, 2):
        d = b - a
        if d in seen:
            return False
        seen.add(d)
    return True


def missing_in_interval(S: IntSet, lo: int, hi: int) -> IntSet:
    """``[lo, hi] \\ S``."""
    if lo > hi:
        raise ValueError("empty interval")
    present = S.slice(lo, hi).elements
    out = []
    j = 0
    for x in range(lo, hi + 1):
        if j < len(present) and present[j] == x:
            j += 1
        else:
            out.append(x)
    return IntSet._from_sorted(tuple(out))


@dataclass(frozen=True)
class RepCounts:
    """Representation counts over ``[window_lo, window_hi]``.

    ``counts`` stores only nonzero entries; indexing any value in the window
    returns its count.
    """

    window_lo: int
    window_hi: int
    arity: int
    counts: dict = field(default_factory=dict)

    def __getitem__(self, x: int) -> int:
        if not self.window_lo <= x <= self.window_hi:
            raise KeyError(x)
        return self.counts.get(x, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def items(self):
        return sorted(self.counts.items())

    def min_in(self, lo: int, hi: int) -> tuple[int, int]:
        """Smallest count on ``[lo, hi]`` and the least value attaining it."""
        best_x, best_c = None, None
        for x in range(max(lo, self.window_lo), min(hi, self.window_hi) + 1):
            c = self.counts.get(x, 0)
            if best_c is None or c < best_c:
                best_x, best_c = x, c
                if c == 0:
                    break
        if best_x is None:
            raise ValueError("interval does not meet the window")
        return best_c, best_x


def rep_counts(A: IntSet, lo: int, hi: int, arity: int = 2) -> RepCounts:
    """Count representations landing in ``[lo, hi]``.

    Arity 2 counts ``a + b`` with ``a <= b``; arity 3 counts ``a + b + c``
    with ``a <= b <= c``.
    """
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if arity not in (2, 3):
        raise ValueError("arity must be 2 or 3")
    el = A.elements
    if not el:
        return RepCounts(lo, hi, arity, {})
    if arity == 3:
        arr = kernels.triple_counts(list(el), lo, hi)
        counts = {lo + i: int(c) for i, c in enumerate(arr) if c}
        return RepCounts(lo, hi, 3, counts)

    k = len(el)
    if k * (k + 1) // 2 <= 4 * (A.hi - A.lo + 1):
        c = Counter(a + b for a, b in combinations_with_replacement(el, 2))
        counts = {x: v for x, v in c.items() if lo <= x <= hi}
    else:
        base = A.lo
        ind = np.zeros(A.hi - base + 1, dtype=np.int64)
        ind[np.asarray(el) - base] = 1
        ordered = np.convolve(ind, ind)
        diag = np.zeros_like(ordered)
        diag[2 * (np.asarray(el) - base)] = 1
        unordered = (ordered + diag) // 2
        counts = {}
        for i in np.nonzero(unordered)[0]:
            x = int(i) + 2 * base
            if lo <= x <= hi:
                counts[x] = int(unordered[i])
    return RepCounts(lo, hi, 2, counts)
