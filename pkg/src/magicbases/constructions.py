"""Explicit Sidon sets, additive bases, quasi-Sidon and difference-rich sets."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from . import bounds
from .common import Check, InfeasibleError
from .ff import ONE, is_prime, make_context, mul, next_prime
from .intset import (
    IntSet,
    diffset,
    from_ap,
    is_sidon,
    missing_in_interval,
    restricted_sumset,
    sumset,
)

# width of the random shift window is EPSILON**2 * n
EPSILON = 0.1


@dataclass
class ConstructionReport:
    name: str
    params: dict
    set: IntSet
    measure: str = "sumset_size"
    value: int = 0
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "set": list(self.set),
            "cardinality": len(self.set),
            self.measure: self.value,
            "checks": [ch.to_dict() for ch in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@lru_cache(maxsize=None)
def bose_chowla(p: int) -> IntSet:
    """``{a in [1, p^2-1] : g^a - theta in GF(p)}`` for the context generator g.

    The result has p elements and is Sidon even modulo ``p^2 - 1``.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    ctx = make_context(p)
    g = ctx.generator
    x = ONE
    out = []
    for a in range(1, p * p - 1):
        x = mul(ctx, x, g)
        if x.c1 == 1:
            out.append(a)
    return IntSet(out)


def sidon_of_size(size: int) -> IntSet:
    """The ``size`` smallest elements of ``bose_chowla(p)``, p the least prime >= size."""
    if size < 1:
        raise InfeasibleError(f"need a Sidon set of size >= 1, got {size}")
    p = next_prime(size)
    return IntSet._from_sorted(bose_chowla(p).elements[:size])


def mrose(t: int) -> IntSet:
    """Union of five progressions of total size 7t+3 whose sum-set covers
    ``[0, 14t^2 + 10t - 1]``."""
    if t < 1:
        raise ValueError("t must be positive")
    blocks = [
        from_ap(0, 1, t),
        from_ap(2 * t, t, 3 * t * t + t),
        from_ap(3 * t * t + 2 * t, t + 1, 4 * t * t + 2 * t - 1),
        from_ap(6 * t * t + 4 * t, 1, 6 * t * t + 5 * t),
        from_ap(10 * t * t + 7 * t, 1, 10 * t * t + 8 * t),
    ]
    out = blocks[0]
    for b in blocks[1:]:
        out = out | b
    return out


def mrose_target(t: int) -> int:
    """Top of the interval covered by ``mrose(t) + mrose(t)``."""
    return 14 * t * t + 10 * t - 1


def mrose_restricted_gaps(t: int) -> IntSet:
    """Values of ``[0, 14t^2+10t-1]`` missed by sums of distinct elements."""
    return missing_in_interval(restricted_sumset(mrose(t)), 0, mrose_target(t))


def rohrbach(r: int) -> IntSet:
    """Basis of ``[0, 2n]`` with at most ``4r`` elements, ``n = 2r^2``.

    ``[0, r-1] + {r, ..., 2r^2}`` covers ``[0, n+r-1]`` and
    ``[n-r+1, n] + {r, ..., 2r^2}`` covers ``[n+1, 2n]``.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    n = 2 * r * r
    return IntSet(list(range(r)) + [i * r for i in range(1, 2 * r + 1)]
                  + list(range(n - r + 1, n + 1)))


def _clip(xs, lo: int, hi: int) -> IntSet:
    return IntSet(x for x in xs if lo <= x <= hi)


def _sum_report(name: str, params: dict, X: IntSet, checks=()) -> ConstructionReport:
    return ConstructionReport(name, params, X, "sumset_size", len(sumset(X)), list(checks))


def _diff_report(name: str, params: dict, X: IntSet, checks=()) -> ConstructionReport:
    return ConstructionReport(name, params, X, "diffset_size", len(diffset(X)), list(checks))


def mrose_report(t: int) -> ConstructionReport:
    A = mrose(t)
    top = mrose_target(t)
    miss = missing_in_interval(sumset(A), 0, top)
    gaps = mrose_restricted_gaps(t)
    allowed = {0, 8 * t * t + 4 * t - 2}
    checks = [
        Check("size", len(A) == 7 * t + 3, len(A)),
        Check("within", A.lo >= 0 and A.hi <= 10 * t * t + 8 * t, [A.lo, A.hi]),
        Check("sumset_covers", not len(miss), miss.elements[0] if len(miss) else None),
        Check("restricted_gaps_allowed", set(gaps) <= allowed, list(gaps)),
    ]
    return _sum_report("mrose", {"t": t}, A, checks)


def rohrbach_report(r: int) -> ConstructionReport:
    A = rohrbach(r)
    n = 2 * r * r
    miss = missing_in_interval(sumset(A), 0, 2 * n)
    checks = [
        Check("size", len(A) <= 4 * r, len(A)),
        Check("within", A.lo >= 0 and A.hi <= n, [A.lo, A.hi]),
        Check("sumset_covers", not len(miss), miss.elements[0] if len(miss) else None),
    ]
    return _sum_report("rohrbach", {"r": r, "n": n}, A, checks)


def bose_chowla_report(p: int) -> ConstructionReport:
    A = bose_chowla(p)
    checks = [
        Check("size", len(A) == p, len(A)),
        Check("within", A.lo >= 1 and A.hi <= p * p - 1, [A.lo, A.hi]),
        Check("sidon", is_sidon(A), None),
    ]
    return _sum_report("bose-chowla", {"p": p}, A, checks)


def _reflect_prediction(x: float) -> float:
    ids = ("sidon-pairs", "reflected-sidon-low", "reflected-sidon-high")
    vals = [f(x) for f in bounds.S_LOWER if f.id in ids and f.applies(x)]
    return max(vals)


def quasi_sidon_reflect(n: int, c: float, trials: int = 100, seed: int = 0,
                        eps: float = EPSILON) -> ConstructionReport:
    """Best of ``trials`` random shifts of ``(s + A) | (n - t - A)``.

    ``A`` is a Sidon set of size ``floor(sqrt(m))`` inside ``[m]``,
    ``m = floor(c^2 n / 4)``; shifts ``s, t`` are uniform on
    ``[1, floor(eps^2 n)]``. Ties go to the smaller ``(s, t)``.
    """
    if not 0 < c <= 2 + 1e-12:
        raise ValueError("c must lie in (0, 2]")
    if trials < 1:
        raise ValueError("trials must be positive")
    m = math.floor(c * c * n / 4)
    size = math.isqrt(m)
    if size < 2:
        raise InfeasibleError(f"n={n} too small: Sidon size {size} < 2 required")
    A = sidon_of_size(size)
    span = max(1, math.floor(eps * eps * n))
    rng = random.Random(seed)
    shifts = [(rng.randint(1, span), rng.randint(1, span)) for _ in range(trials)]
    best = None
    for s, t in shifts:
        X = _clip([s + a for a in A] + [n - t - a for a in A], 1, n)
        v = len(sumset(X))
        key = (-v, s, t)
        if best is None or key < best[0]:
            best = (key, X, s, t)
    _, X, s, t = best
    params = {"n": n, "c": c, "trials": trials, "seed": seed, "eps": eps,
              "sidon_size": size, "s": s, "t": t,
              "predicted_density": _reflect_prediction(c)}
    checks = [Check("within", X.lo >= 1 and X.hi <= n, [X.lo, X.hi])]
    return _sum_report("quasi-sidon-reflect", params, X, checks)


def aps_block_length(n: int, c: float) -> int:
    c0 = float(bounds.C0)
    if c <= c0:
        return math.floor(3 * c / 14 * math.sqrt(n))
    alpha = float(bounds.ALPHA.subs(bounds.c, c))
    return math.floor(alpha * math.sqrt(n))


def quasi_sidon_aps(n: int, c: float) -> ConstructionReport:
    """``[l] | [n-l+1, n] | C | D`` with C, D progressions of length k/2 - l
    starting at n/2 with steps -l and l+1."""
    c1 = float(bounds.C1)
    if not 0 < c <= c1 + 1e-12:
        raise ValueError("c must lie in (0, 2*sqrt(2)]")
    k = math.floor(c * math.sqrt(n))
    l = aps_block_length(n, c)
    L = k // 2 - l
    if l < 1 or L < 1:
        raise InfeasibleError(f"degenerate blocks: l={l}, progression length={L}")
    mid = n // 2
    elems = list(range(1, l + 1)) + list(range(n - l + 1, n + 1))
    elems += [mid - i * l for i in range(L)] + [mid + i * (l + 1) for i in range(L)]
    X = _clip(elems, 1, n)
    pred = max(f(c) for f in bounds.S_LOWER
               if f.id in ("ap-blocks-low", "ap-blocks-high") and f.applies(c))
    params = {"n": n, "c": c, "k": k, "l": l, "progression_length": L,
              "predicted_density": pred}
    checks = [Check("within", X.lo >= 1 and X.hi <= n, [X.lo, X.hi])]
    return _sum_report("quasi-sidon-aps", params, X, checks)


def diff_reflect(n: int, c: float, trials: int = 100, seed: int = 0,
                 eps: float = EPSILON) -> ConstructionReport:
    """``B | (C + t)`` with ``B`` Sidon in ``[b]``, ``b = floor(n / c^2)``,
    ``C = [n] & (B + b)`` and a random small shift ``t``."""
    if not 1 - 1e-12 <= c <= math.sqrt(2) + 1e-12:
        raise ValueError("c must lie in [1, sqrt(2)]")
    if trials < 1:
        raise ValueError("trials must be positive")
    b = math.floor(n / (c * c))
    size = math.isqrt(b)
    if size < 2:
        raise InfeasibleError(f"n={n} too small: Sidon size {size} < 2 required")
    B = sidon_of_size(size).slice(1, b)
    C = [x + b for x in B if x + b <= n]
    span = max(1, math.floor(eps * eps * n))
    rng = random.Random(seed)
    shifts = [rng.randint(1, span) for _ in range(trials)]
    best = None
    for t in shifts:
        X = _clip(list(B) + [x + t for x in C], 1, n)
        v = len(diffset(X))
        key = (-v, t)
        if best is None or key < best[0]:
            best = (key, X, t)
    _, X, t = best
    pred = max(f(c) for f in bounds.D_LOWER
               if f.id in ("sidon-diffs", "shifted-sidon") and f.applies(c))
    params = {"n": n, "c": c, "trials": trials, "seed": seed, "eps": eps,
              "b": b, "sidon_size": len(B), "t": t, "predicted_density": pred}
    checks = [Check("within", X.lo >= 1 and X.hi <= n, [X.lo, X.hi])]
    return _diff_report("diff-reflect", params, X, checks)


def default_beta(c: float) -> float:
    """c/3 up to 3/2, then c - 1 up to 2, then 1."""
    if c <= 1.5:
        return c / 3
    if c <= 2:
        return c - 1
    return 1.0


def diff_aps(n: int, c: float, beta: float | None = None) -> ConstructionReport:
    """``[b] | C | D``: progressions of length ``(c - beta) sqrt(n) / 2`` from
    ``(1 - beta (c - beta) / 2) n`` with steps ``-b`` and ``b - 1``."""
    if c < math.sqrt(2) - 1e-12:
        raise ValueError("c must be at least sqrt(2)")
    if beta is None:
        beta = default_beta(c)
    if not 0 < beta <= c:
        raise ValueError("beta must lie in (0, c]")
    root = math.sqrt(n)
    b = math.floor(beta * root)
    L = math.floor((c - beta) * root / 2)
    if b < 2 or L < 1:
        raise InfeasibleError(f"degenerate blocks: b={b}, progression length={L}")
    start = math.floor((1 - beta * (c - beta) / 2) * n)
    elems = list(range(1, b + 1))
    elems += [start - i * b for i in range(L)] + [start + i * (b - 1) for i in range(L)]
    X = _clip(elems, 1, n)
    pred, _ = bounds.d_lower_curve(c)
    params = {"n": n, "c": c, "beta": beta, "b": b, "progression_length": L,
              "start": start, "predicted_density": pred}
    checks = [Check("within", X.lo >= 1 and X.hi <= n, [X.lo, X.hi])]
    return _diff_report("diff-aps", params, X, checks)

