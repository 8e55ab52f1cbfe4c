"""Closed-form bound curves for s(k,n) and d(k,n), constants, and the
Fourier-series check used in the pairwise-sum upper bound.

Curves are parametrised by ``c = k / sqrt(n)`` and report ``y = value / n``.
Each branch is kept as an exact sympy expression; float evaluation goes
through a lambdified copy so exact breakpoint identities and fast sampling
share one source of truth.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np
import sympy as sp

c = sp.Symbol("c", positive=True)

SQRT2 = sp.sqrt(2)
SQRT3 = sp.sqrt(3)
C0 = sp.Rational(7, 2) / SQRT3
C1 = 2 * SQRT2
# linear interpolation between the optimal block lengths at C0 and C1
ALPHA = SQRT3 / 4 + (c - C0) * (1 / SQRT2 - SQRT3 / 4) / (C1 - C0)

_EDGE_TOL = 1e-12


@dataclass(frozen=True)
class Formula:
    id: str
    expr: sp.Expr
    lo: sp.Expr
    hi: sp.Expr
    asymptotic: bool = False
    _fn: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_fn", sp.lambdify(c, self.expr, "math"))

    def applies(self, x: float) -> bool:
        lo = float(self.lo)
        hi = math.inf if self.hi == sp.oo else float(self.hi)
        return lo - _EDGE_TOL <= x <= hi + _EDGE_TOL

    def __call__(self, x: float) -> float:
        return float(self._fn(x))

    def exact(self, point: sp.Expr) -> sp.Expr:
        return sp.nsimplify(sp.simplify(self.expr.subs(c, point)))


S_LOWER = (
    Formula("sidon-pairs", c**2 / 2, sp.Integer(0), 2 / SQRT3),
    Formula("reflected-sidon-low",
            -5 * c**2 / 8 + sp.Rational(9, 2) - 6 / c**2 + sp.Rational(8, 3) / c**4,
            2 / SQRT3, SQRT2),
    Formula("reflected-sidon-high",
            3 * c**2 / 8 - sp.Rational(3, 2) + 6 / c**2 - sp.Rational(16, 3) / c**4,
            SQRT2, sp.Integer(2)),
    Formula("ap-blocks-low", 9 * c**2 / 28, sp.Integer(0), C0),
    Formula("ap-blocks-high",
            -c**2 + 7 * ALPHA * c + c / ALPHA - 11 * ALPHA**2 - 2 - 1 / (4 * ALPHA**2),
            C0, C1),
    Formula("rohrbach-full", sp.Integer(2), C1, sp.oo),
)

D_LOWER = (
    Formula("sidon-diffs", c**2, sp.Integer(0), sp.Integer(1)),
    Formula("shifted-sidon", -c**4 / 3 + 2 * c**2 - 2 + sp.Rational(4, 3) / c**2,
            sp.Integer(1), SQRT2),
    Formula("ap-third", 2 * c**2 / 3, SQRT2, sp.Rational(3, 2)),
    Formula("ap-interp-low", (4 * c**3 - 19 * c**2 + 34 * c - 21) / (2 * (c - 1) ** 2),
            sp.Rational(3, 2), sp.Rational(5, 3)),
    Formula("ap-interp-high", (2 * c**3 - 5 * c**2 + 2 * c + 2) / (c - 1) ** 2,
            sp.Rational(5, 3), sp.Integer(2)),
    Formula("full-range", sp.Integer(2), sp.Integer(2), sp.oo),
)

S_UPPER_COEFF = sp.Rational(1, 4) - 1 / (sp.pi + 2) ** 2

S_UPPER = (
    Formula("pair-count", c**2 / 2, sp.Integer(0), sp.oo),
    Formula("range", sp.Integer(2), sp.Integer(0), sp.oo),
    Formula("fourier-asymptotic", 1 + c**2 * S_UPPER_COEFF, sp.Integer(0), sp.oo, True),
)

D_UPPER = (
    Formula("pair-count", c**2, sp.Integer(0), sp.oo),
    Formula("range", sp.Integer(2), sp.Integer(0), sp.oo),
    Formula("window-asymptotic", 2 * c - 1, sp.Integer(1), sp.oo, True),
)

CURVES = {
    "s-lower": (S_LOWER, max),
    "d-lower": (D_LOWER, max),
    "s-upper": (S_UPPER, min),
    "d-upper": (D_UPPER, min),
}

S_BREAKPOINTS = (2 / SQRT3, SQRT2, sp.Integer(2), C0, C1)
D_BREAKPOINTS = (sp.Integer(1), SQRT2, sp.Rational(3, 2), sp.Rational(5, 3), sp.Integer(2))


def _envelope(formulas, pick, x: float) -> tuple[float, str]:
    best = None
    for f in formulas:
        if f.applies(x):
            y = f(x)
            if best is None or pick(y, best[0]) != best[0]:
                best = (y, f.id)
    if best is None:
        raise ValueError(f"no formula applies at c={x}")
    return best


def curve_value(which: str, x: float) -> tuple[float, str]:
    formulas, pick = CURVES[which]
    return _envelope(formulas, pick, x)


def s_lower_curve(x: float) -> tuple[float, str]:
    """Best known lower bound on the scaled sum-set size at ``c = x``."""
    if x <= 0:
        raise ValueError("c must be positive")
    return curve_value("s-lower", x)


def d_lower_curve(x: float) -> tuple[float, str]:
    if x <= 0:
        raise ValueError("c must be positive")
    return curve_value("d-lower", x)


def branch_values(which: str, point: sp.Expr) -> dict[str, sp.Expr]:
    """Exact value of every branch of ``which`` whose domain contains ``point``."""
    formulas, _ = CURVES[which]
    out = {}
    for f in formulas:
        if sp.simplify(point - f.lo) >= 0 and (f.hi == sp.oo or sp.simplify(f.hi - point) >= 0):
            out[f.id] = f.exact(point)
    return out


@dataclass(frozen=True)
class Bound:
    value: float
    formula_id: str
    asymptotic: bool = False


def s_upper(k: int, n: int) -> Bound:
    """min(k(k+1)/2, 2n-1, n + k^2 * (1/4 - 1/(pi+2)^2)); the last is asymptotic."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    cands = [
        Bound(float(k * (k + 1) // 2), "pair-count"),
        Bound(float(2 * n - 1), "range"),
        Bound(n + k * k * float(S_UPPER_COEFF), "fourier-asymptotic", True),
    ]
    return min(cands, key=lambda b: b.value)


def d_upper(k: int, n: int) -> Bound:
    """min(2n-1, k(k-1)+1, and 2k*sqrt(n) - n when k >= sqrt(n))."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    cands = [
        Bound(float(k * (k - 1) + 1), "pair-count"),
        Bound(float(2 * n - 1), "range"),
    ]
    if k * k >= n:
        cands.append(Bound(2 * k * math.sqrt(n) - n, "window-asymptotic", True))
    return min(cands, key=lambda b: b.value)


def fourier_partial(x, terms: int):
    """(pi/2) sin x + sum_{even t=2..terms} 2/(t^2-1) cos(t x); accepts arrays."""
    if terms < 2:
        raise ValueError("terms must be at least 2")
    xs = np.asarray(x, dtype=float)
    t = np.arange(2, terms + 1, 2, dtype=float)
    b = 2.0 / (t * t - 1.0)
    flat = xs.reshape(-1)
    out = np.empty_like(flat)
    chunk = max(1, 2_000_000 // len(t))
    for i in range(0, len(flat), chunk):
        xx = flat[i:i + chunk]
        out[i:i + chunk] = np.pi / 2 * np.sin(xx) + np.cos(np.outer(xx, t)) @ b
    out = out.reshape(xs.shape)
    return float(out) if out.ndim == 0 else out


def r_target(x):
    """1 on [0, pi], 1 + pi sin x on [pi, 2 pi] (extended 2pi-periodically)."""
    xs = np.mod(np.asarray(x, dtype=float), 2 * np.pi)
    out = np.where(xs <= np.pi, 1.0, 1.0 + np.pi * np.sin(xs))
    return float(out) if out.ndim == 0 else out


def fourier_tail(terms: int) -> float:
    """Sum of the omitted coefficients, 1/(T+1) for the largest even T <= terms."""
    last = terms - terms % 2
    return 1.0 / (last + 1)


@dataclass(frozen=True)
class NamedConstants:
    lambda_formula: float
    lambda_quoted: float
    lambda_discrepancy: bool
    b_sup_upper: float
    s_upper_coeff: float
    quasi_sidon_coeff: float
    wood_coeff: float
    quasi_sidon_construction_coeff: float
    magic_lower_coeff: float
    b_sup_far_branch: float
    exact: dict = field(repr=False, compare=False, default_factory=dict)

    def to_json(self, digits: int = 20) -> str:
        out = {name: sp.N(expr, digits + 5).__format__(f".{digits}f")
               for name, expr in self.exact.items()}
        out["lambda_quoted"] = "0.323"
        out["lambda_discrepancy"] = self.lambda_discrepancy
        return json.dumps(out, indent=2)


def constants() -> NamedConstants:
    exact = {
        "lambda_formula": (2 * SQRT2 - 4 + sp.pi * (4 - SQRT2)) / 4,
        "b_sup_upper": sp.Rational(1, 2) - 2 / (2 + (1 + 2 * SQRT2) * sp.pi) ** 2,
        "s_upper_coeff": S_UPPER_COEFF,
        "quasi_sidon_coeff": 1 / sp.sqrt(sp.Rational(1, 4) + 1 / (sp.pi + 2) ** 2),
        "wood_coeff": sp.Rational(288, 121),
        "quasi_sidon_construction_coeff": 2 / SQRT3,
        "magic_lower_coeff": sp.Rational(2, 7),
        "b_sup_far_branch": sp.Rational(1, 2) - 1 / (4 * sp.pi**2),
    }
    vals = {k: float(sp.N(v, 30)) for k, v in exact.items()}
    quoted = 0.323
    return NamedConstants(
        lambda_quoted=quoted,
        lambda_discrepancy=abs(vals["lambda_formula"] - quoted) > 1e-3,
        exact=exact,
        **vals,
    )


@dataclass
class CurveTable:
    which: str
    rows: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["c", "y", "formula_id"])
        for x, y, fid in self.rows:
            w.writerow([f"{x:.10g}", f"{y:.12g}", fid])
        return buf.getvalue()


def curve_samples(which: str, c_min: float, c_max: float, step: float) -> CurveTable:
    if which not in CURVES:
        raise ValueError(f"unknown curve {which!r}; choose from {sorted(CURVES)}")
    if not 0 < c_min < c_max or step <= 0:
        raise ValueError("need 0 < c_min < c_max and step > 0")
    table = CurveTable(which)
    count = int(math.floor((c_max - c_min) / step + 1e-9))
    for i in range(count + 1):
        x = c_min + i * step
        y, fid = curve_value(which, x)
        table.rows.append((x, y, fid))
    return table
