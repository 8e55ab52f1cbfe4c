"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 infeasible
parameters. Payloads (JSON or CSV) go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import operator
import sys

from . import bounds, constructions, extremal, magic
from .common import InfeasibleError, PreconditionError
from .ff import is_prime

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}


def _eval_real(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return float(node.value)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_real(node.left), _eval_real(node.right))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval_real(node.operand)
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id == "sqrt" and len(node.args) == 1):
        return math.sqrt(_eval_real(node.args[0]))
    if isinstance(node, ast.Name) and node.id == "pi":
        return math.pi
    raise ValueError("unsupported expression")


def real(text: str) -> float:
    """Parse ``1.5``, ``3/2``, ``2/sqrt(3)`` or ``2*sqrt(2)``."""
    try:
        return _eval_real(ast.parse(text, mode="eval").body)
    except (SyntaxError, ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from exc


def positive_real(text: str) -> float:
    x = real(text)
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}: {text!r}")
        return v
    return parse


def odd_prime(text: str) -> int:
    v = _int_at_least(3)(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"not an odd prime: {text!r}")
    return v


nonneg = _int_at_least(0)
pos = _int_at_least(1)


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read_labelling(path: str) -> magic.MagicLabelling:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return magic.MagicLabelling.from_json(text)
    except (OSError, ValueError) as exc:
        raise UsageError(f"--file: cannot read labelling: {exc}") from exc


def _report_result(report) -> int:
    for ch in report.checks:
        if not ch.passed:
            print(f"check failed: {ch.property} (witness: {ch.witness})", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "mrose":
        rep = constructions.mrose_report(args.t)
    elif kind == "rohrbach":
        rep = constructions.rohrbach_report(args.r)
    elif kind == "bose-chowla":
        rep = constructions.bose_chowla_report(args.p)
    elif kind == "quasi-sidon-reflect":
        if args.c > 2:
            raise UsageError("--c must lie in (0, 2]")
        rep = constructions.quasi_sidon_reflect(args.n, args.c, args.trials, args.seed)
    elif kind == "quasi-sidon-aps":
        if args.c > 2 * math.sqrt(2) + 1e-12:
            raise UsageError("--c must lie in (0, 2*sqrt(2)]")
        rep = constructions.quasi_sidon_aps(args.n, args.c)
    elif kind == "diff-reflect":
        if not 1 - 1e-12 <= args.c <= math.sqrt(2) + 1e-12:
            raise UsageError("--c must lie in [1, sqrt(2)]")
        rep = constructions.diff_reflect(args.n, args.c, args.trials, args.seed)
    else:
        if args.c < math.sqrt(2) - 1e-12:
            raise UsageError("--c must be at least sqrt(2)")
        if args.beta is not None and args.beta > args.c:
            raise UsageError("--beta must not exceed --c")
        rep = constructions.diff_aps(args.n, args.c, args.beta)
    _emit(rep.to_json() if args.json else rep.set.to_json())
    return _report_result(rep)


def cmd_magic(args) -> int:
    action = args.action
    if action == "verify":
        lab = _read_labelling(args.file)
        rep = magic.verify(lab)
        _emit(json.dumps(rep.to_dict()))
        return _report_result(rep)
    if action == "build-mrose":
        lab = magic.mrose_magic(args.t)
    elif action == "pad":
        lab = _read_labelling(args.file)
        rep = magic.verify(lab)
        if not rep.ok or lab.mode != magic.BIJECTIVE:
            _report_result(rep)
            if lab.mode != magic.BIJECTIVE:
                print("check failed: mode (padding needs a bijective labelling)", file=sys.stderr)
            return EXIT_VERIFY
        lab = magic.pad_isolated(lab)
    elif action == "injection":
        if args.n < 4:
            raise UsageError("--n must be at least 4")
        lab = magic.injection_kn(args.n, args.delta)
    else:
        if args.n > magic.MAX_SEARCH_N:
            raise UsageError(f"--n must lie in [1, {magic.MAX_SEARCH_N}]")
        res = magic.search_max_magic(args.n, args.m_hint, args.threads)
        _emit(json.dumps({"n": args.n, "value": res.value, "nodes_explored": res.nodes_explored,
                          "exhaustive": res.exhaustive, "witness": res.witness.to_dict()}))
        return _report_result(magic.verify(res.witness))
    _emit(lab.to_json())
    return _report_result(magic.verify(lab))


def cmd_extremal(args) -> int:
    action = args.action
    if action in ("s", "d"):
        if not args.k <= args.n <= extremal.MAX_N:
            raise UsageError(f"need --k <= --n <= {extremal.MAX_N}")
        fn = extremal.s_exact if action == "s" else extremal.d_exact
        res = fn(args.k, args.n, args.threads)
        _emit(extremal.table_csv([(args.k, args.n, res)]))
    elif action == "table":
        if args.max_n > extremal.MAX_N:
            raise UsageError(f"--max-n must be <= {extremal.MAX_N}")
        _emit(extremal.table_csv(extremal.exact_table(args.max_n, args.kind, args.threads)))
    else:
        A = constructions.bose_chowla(args.p)
        n = args.p * args.p - 1
        d = extremal.distribution_discrepancy(A, n, args.m, args.grid)
        _emit(json.dumps({"p": args.p, "n": d.n, "modulus": d.modulus,
                          "worst_interval": list(d.worst_interval), "worst_residue": d.worst_residue,
                          "observed": d.observed, "expected": str(d.expected),
                          "normalized_error": d.normalized_error}))
    return EXIT_OK


def cmd_bounds(args) -> int:
    action = args.action
    if action == "constants":
        _emit(bounds.constants().to_json())
    elif action == "curve":
        if args.min >= args.max:
            raise UsageError("--min must be below --max")
        _emit(bounds.curve_samples(args.which, args.min, args.max, args.step).to_csv())
    else:
        partial = bounds.fourier_partial(args.x, args.terms)
        target = bounds.r_target(args.x)
        _emit(json.dumps({"x": args.x, "terms": args.terms, "partial": partial,
                          "target": target, "error": abs(partial - target),
                          "tail_bound": bounds.fourier_tail(args.terms)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magicbases",
        description="Sidon sets, additive bases, edge-magic labellings and bound curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build an explicit set")
    con_sub = con.add_subparsers(dest="kind", required=True)
    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument("--json", action="store_true", help="emit the full construction report")
    p = con_sub.add_parser("mrose", parents=[json_flag], help="five-progression additive basis")
    p.add_argument("--t", type=pos, required=True)
    p = con_sub.add_parser("rohrbach", parents=[json_flag], help="three-block basis of [0, 4r^2]")
    p.add_argument("--r", type=_int_at_least(2), required=True)
    p = con_sub.add_parser("bose-chowla", parents=[json_flag], help="p-element Sidon set in [1, p^2-1]")
    p.add_argument("--p", type=odd_prime, required=True)
    for name, helptext in (("quasi-sidon-reflect", "reflected Sidon set, best of random shifts"),
                           ("diff-reflect", "Sidon set plus shifted copy, for differences")):
        p = con_sub.add_parser(name, parents=[json_flag], help=helptext)
        p.add_argument("--n", type=_int_at_least(4), required=True)
        p.add_argument("--c", type=positive_real, required=True)
        p.add_argument("--trials", type=pos, default=100)
        p.add_argument("--seed", type=int, default=0)
    p = con_sub.add_parser("quasi-sidon-aps", parents=[json_flag], help="intervals plus two progressions")
    p.add_argument("--n", type=_int_at_least(4), required=True)
    p.add_argument("--c", type=positive_real, required=True)
    p = con_sub.add_parser("diff-aps", parents=[json_flag], help="interval plus two progressions")
    p.add_argument("--n", type=_int_at_least(4), required=True)
    p.add_argument("--c", type=positive_real, required=True)
    p.add_argument("--beta", type=positive_real, default=None)
    con.set_defaults(func=cmd_construct)

    mag = sub.add_parser("magic", help="edge-magic labellings")
    mag_sub = mag.add_subparsers(dest="action", required=True)
    p = mag_sub.add_parser("build-mrose", help="dense edge-magic graph on 7t+4 vertices")
    p.add_argument("--t", type=pos, required=True)
    p = mag_sub.add_parser("verify", help="check a labelling JSON file ('-' for stdin)")
    p.add_argument("--file", required=True)
    p = mag_sub.add_parser("pad", help="add an isolated vertex")
    p.add_argument("--file", required=True)
    p = mag_sub.add_parser("injection", help="edge-magic injection of K_n")
    p.add_argument("--n", type=pos, required=True)
    p.add_argument("--delta", type=positive_real, default=0.3)
    p = mag_sub.add_parser("search", help="exact M(n) by exhaustive search")
    p.add_argument("--n", type=pos, required=True)
    p.add_argument("--m-hint", type=nonneg, default=None)
    p.add_argument("--threads", type=pos, default=1)
    mag.set_defaults(func=cmd_magic)

    ext = sub.add_parser("extremal", help="exact s(k,n), d(k,n) and distribution statistics")
    ext_sub = ext.add_subparsers(dest="action", required=True)
    for name in ("s", "d"):
        p = ext_sub.add_parser(name, help=f"exact {name}(k, n)")
        p.add_argument("--k", type=pos, required=True)
        p.add_argument("--n", type=pos, required=True)
        p.add_argument("--threads", type=pos, default=1)
    p = ext_sub.add_parser("table", help="all cells 1 <= k <= n <= max-n as CSV")
    p.add_argument("--max-n", type=pos, required=True)
    p.add_argument("--kind", choices=("s", "d"), default="s")
    p.add_argument("--threads", type=pos, default=1)
    p = ext_sub.add_parser("discrepancy", help="interval/residue discrepancy of a Bose-Chowla set")
    p.add_argument("--p", type=odd_prime, required=True)
    p.add_argument("--m", type=pos, default=1)
    p.add_argument("--grid", type=pos, default=10)
    ext.set_defaults(func=cmd_extremal)

    bnd = sub.add_parser("bounds", help="closed-form bounds and constants")
    bnd_sub = bnd.add_subparsers(dest="action", required=True)
    bnd_sub.add_parser("constants", help="all constants as JSON")
    p = bnd_sub.add_parser("curve", help="sample a bound curve as CSV")
    p.add_argument("--which", choices=sorted(bounds.CURVES), required=True)
    p.add_argument("--min", type=positive_real, required=True)
    p.add_argument("--max", type=positive_real, required=True)
    p.add_argument("--step", type=positive_real, required=True)
    p = bnd_sub.add_parser("fourier", help="partial Fourier sum against its target")
    p.add_argument("--x", type=real, required=True)
    p.add_argument("--terms", type=_int_at_least(2), default=10_000)
    bnd.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    raise SystemExit(main())
