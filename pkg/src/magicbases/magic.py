"""Edge-magic labellings: verification, constructions and exact search for M(n)."""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import kernels
from .common import Check, InfeasibleError, PreconditionError, SearchResult
from .constructions import mrose, sidon_of_size
from .intset import IntSet, rep_counts, restricted_sumset

BIJECTIVE = "bijective"
INJECTION = "injection"

MAX_SEARCH_N = 8


@dataclass(frozen=True)
class MagicLabelling:
    n: int
    edges: tuple
    vertex_labels: tuple
    edge_labels: tuple
    magic_sum: int
    mode: str = BIJECTIVE

    @property
    def m(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "magic_sum": self.magic_sum,
            "vertex_labels": list(self.vertex_labels),
            "edges": [list(e) for e in self.edges],
            "edge_labels": list(self.edge_labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "MagicLabelling":
        try:
            mode = d.get("mode", BIJECTIVE)
            if mode not in (BIJECTIVE, INJECTION):
                raise ValueError(f"unknown mode {mode!r}")
            return cls(
                n=int(d["n"]),
                edges=tuple(tuple(int(v) for v in e) for e in d["edges"]),
                vertex_labels=tuple(int(x) for x in d["vertex_labels"]),
                edge_labels=tuple(int(x) for x in d["edge_labels"]),
                magic_sum=int(d["magic_sum"]),
                mode=mode,
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed labelling: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "MagicLabelling":
        return cls.from_dict(json.loads(text))


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def failures(self) -> list:
        return [ch for ch in self.checks if not ch.passed]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [ch.to_dict() for ch in self.checks]}


def verify(lab: MagicLabelling) -> VerificationReport:
    """Check every labelling invariant; failures carry the first counterexample."""
    rep = VerificationReport()
    add = rep.checks.append
    n, m = lab.n, len(lab.edges)

    add(Check("vertex_count", len(lab.vertex_labels) == n, len(lab.vertex_labels)))
    add(Check("edge_label_count", len(lab.edge_labels) == m, len(lab.edge_labels)))

    bad_end = next((list(e) for e in lab.edges
                    if len(e) != 2 or e[0] == e[1] or not all(0 <= v < n for v in e)), None)
    add(Check("edge_endpoints", bad_end is None, bad_end))

    seen, dup_edge = set(), None
    for e in lab.edges:
        key = frozenset(e)
        if key in seen:
            dup_edge = sorted(e)
            break
        seen.add(key)
    add(Check("edges_distinct", dup_edge is None, dup_edge))

    labels = list(lab.vertex_labels) + list(lab.edge_labels)
    nonpos = next((x for x in labels if x < 1), None)
    add(Check("labels_positive", nonpos is None, nonpos))

    seen_l, dup = set(), None
    for x in labels:
        if x in seen_l:
            dup = x
            break
        seen_l.add(x)
    add(Check("labels_distinct", dup is None, dup))

    if lab.mode == BIJECTIVE:
        total = n + m
        missing = next((x for x in range(1, total + 1) if x not in seen_l), None)
        extra = next((x for x in labels if x > total), None)
        ok = missing is None and extra is None and dup is None
        add(Check("bijective", ok, missing if missing is not None else extra))

    bad_sum = None
    if bad_end is None and len(lab.vertex_labels) == n and len(lab.edge_labels) == m:
        for (u, v), el in zip(lab.edges, lab.edge_labels):
            if lab.vertex_labels[u] + lab.vertex_labels[v] + el != lab.magic_sum:
                bad_sum = [u, v]
                break
        add(Check("magic_sum", bad_sum is None, bad_sum))
    else:
        add(Check("magic_sum", False, "structure invalid"))
    return rep


def _labelling_from_sums(A, s: int, edge_values) -> MagicLabelling:
    """Vertex i gets ``A[i]``; each ``c`` in ``edge_values`` becomes an edge
    ``{i, j}`` with ``A[i] + A[j] = s - c``, smallest i then smallest j."""
    A = list(A)
    index = {a: i for i, a in enumerate(A)}
    edges, elabels = [], []
    for cval in edge_values:
        target = s - cval
        for i, a in enumerate(A):
            j = index.get(target - a)
            if j is not None and j > i:
                edges.append((i, j))
                elabels.append(cval)
                break
        else:
            raise PreconditionError(f"{target} is not a sum of two distinct labels", target)
    return MagicLabelling(len(A), tuple(edges), tuple(A), tuple(elabels), s, BIJECTIVE)


def build_from_basis(A: IntSet, k: int, m: int) -> MagicLabelling:
    """Bijective labelling on ``|A|`` vertices with ``m - |A|`` edges and sum ``k + m``.

    Needs ``min(A) = 1``, ``max(A) <= m`` and ``k + m - c`` to be a sum of two
    distinct elements of ``A`` for every ``c`` in ``[m]`` outside ``A``. Covering
    all of ``[k, k+m-1]`` is sufficient; only these values are used.
    """
    if not len(A):
        raise PreconditionError("basis is empty")
    if A.lo != 1:
        raise PreconditionError(f"smallest element must be 1, got {A.lo}", A.lo)
    if A.hi > m:
        raise PreconditionError(f"largest element {A.hi} exceeds m={m}", A.hi)
    s = k + m
    vertex = set(A)
    free = [x for x in range(1, m + 1) if x not in vertex]
    sums = restricted_sumset(A)
    missing = sorted(s - c for c in free if (s - c) not in sums)
    if missing:
        raise PreconditionError(
            f"{missing[0]} in [{k}, {k + m - 1}] is not a sum of distinct elements", missing[0])
    return _labelling_from_sums(A, s, free)


def mrose_magic(t: int) -> MagicLabelling:
    """Edge-magic graph on ``7t + 4`` vertices with ``14t^2 + 3t - 5`` edges."""
    if t < 1:
        raise ValueError("t must be positive")
    B = mrose(t).shift(1) | IntSet([8 * t * t + 4 * t - 3])
    return build_from_basis(B, 3, 14 * t * t + 10 * t - 1)


def pad_isolated(lab: MagicLabelling) -> MagicLabelling:
    """Add an isolated vertex labelled ``n + m + 1``."""
    if lab.mode != BIJECTIVE:
        raise ValueError("padding needs a bijective labelling")
    rep = verify(lab)
    if not rep.ok:
        bad = rep.failures()[0]
        raise ValueError(f"invalid labelling: {bad.property} ({bad.witness})")
    return MagicLabelling(
        lab.n + 1, lab.edges, lab.vertex_labels + (lab.n + lab.m + 1,),
        lab.edge_labels, lab.magic_sum, BIJECTIVE,
    )


@dataclass(frozen=True)
class InjectionPlan:
    """Intermediate choices behind :func:`injection_kn`."""

    m: int
    sidon: IntSet
    window: tuple
    multiplicity: int
    magic_sum: int
    removed: tuple
    labelling: MagicLabelling


def _as_fraction(x) -> Fraction:
    return Fraction(str(x)) if isinstance(x, float) else Fraction(x)


def injection_plan(n: int, delta=Fraction(3, 10)) -> InjectionPlan:
    if n < 4:
        raise ValueError("n must be at least 4")
    d = _as_fraction(delta)
    if d <= 0:
        raise ValueError("delta must be positive")
    m = math.ceil((Fraction(12, 11) + d) * n)
    A = sidon_of_size(m)
    lo = 2 * A.hi
    hi = math.ceil((2 + d) * m * m)
    if lo > hi:
        raise InfeasibleError(f"window [{lo}, {hi}] is empty; increase delta")
    mult, s = rep_counts(A, lo, hi, 3).min_in(lo, hi)

    members = set(A)
    reps = []
    el = A.elements
    for i, a in enumerate(el):
        if 3 * a > s:
            break
        for b in el[i:]:
            rest = s - a - b
            if rest < b:
                break
            if rest in members:
                reps.append((a, b, rest))
    removed = set()
    for rep in reps:
        if not removed.intersection(rep):
            removed.add(rep[2])
    kept = [x for x in el if x not in removed]
    if len(kept) < n:
        raise InfeasibleError(f"only {len(kept)} labels survive for n={n}; increase delta")
    B = kept[:n]
    edges = tuple(combinations(range(n), 2))
    elabels = tuple(s - B[i] - B[j] for i, j in edges)
    lab = MagicLabelling(n, edges, tuple(B), elabels, s, INJECTION)
    return InjectionPlan(m, A, (lo, hi), mult, s, tuple(sorted(removed)), lab)


def injection_kn(n: int, delta=Fraction(3, 10)) -> MagicLabelling:
    """Edge-magic injection of K_n from a Sidon set of size ceil((12/11 + delta) n)."""
    return injection_plan(n, delta).labelling


def search_max_magic(n: int, m_hint: int | None = None, threads: int = 1) -> SearchResult:
    """Exact M(n) by scanning vertex-label sets and magic sums.

    For each candidate size m (downward), a labelling exists iff some n-set
    ``A`` of ``[n+m]`` and sum ``s`` make every label outside ``A`` equal to
    ``s`` minus a sum of two distinct elements of ``A``.
    """
    if not 1 <= n <= MAX_SEARCH_N:
        raise ValueError(f"n must lie in [1, {MAX_SEARCH_N}]")
    top = n * (n - 1) // 2
    start = top if m_hint is None else max(0, min(m_hint, top))
    nodes = 0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for m in range(start, -1, -1):
            N = n + m
            firsts = range(1, N - n + 2)
            results = list(pool.map(lambda f: kernels.magic_scan(n, m, f), firsts))
            nodes += sum(r[2] for r in results)
            hit = next((r for r in results if r[0] is not None), None)
            if hit is None:
                continue
            A, s, _ = hit
            vertex = set(A)
            lab = _labelling_from_sums(A, s, [x for x in range(1, N + 1) if x not in vertex])
            return SearchResult(m, lab, nodes, start == top)
    raise AssertionError("m = 0 is always feasible")
