"""Command-line interface: normalize, act, maxwell, rmatrix, verify."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .action import ActionConfig, QGGen, act
from .algebra import AlgebraId, NCPoly, to_text
from .fields import OPERATORS, bra
from .laplace import NotInModule, laplace, maxwell
from .parser import ParseError, parse_column, parse_poly
from .scalars import QFrac

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ACT_OPS = ["K", "Kinv", "X", "Y", *OPERATORS, "bra_b", "bra_h", "bra_c", "laplace"]
RMATRIX_CHECKS = ["ybe", "hecke", "skew-inverse", "traces", "ch"]


class UsageError(ValueError):
    pass


def _parse_eval(text: str | None):
    if not text:
        return None
    vals = {}
    for part in text.split(","):
        name, sep, value = part.partition("=")
        name = name.strip()
        if not sep or name not in ("q", "r"):
            raise UsageError(f"bad --eval item {part!r}; expected q=<rat>[,r=<rat>]")
        try:
            vals[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational {value!r} in --eval") from exc
    if "q" not in vals:
        raise UsageError("--eval needs a value for q")
    return vals


def _evaluate(f: NCPoly, vals) -> NCPoly:
    """Substitute q (and optionally r) by rationals in every coefficient."""
    if vals is None:
        return f
    n = f.spec.ngens
    terms = {}
    if "r" in vals:
        for mono, c in f.by_monomial().items():
            v = c.evaluate(vals["q"], vals["r"])
            if v:
                terms[tuple(mono) + (0,)] = QFrac(v)
    else:
        for key, c in f.terms.items():
            v = c.specialize(vals["q"])
            if v:
                terms[key[:n] + (key[n],)] = v
    return NCPoly(f.alg, terms)


def _show(f: NCPoly, vals) -> str:
    return to_text(_evaluate(f, vals))


# ---------------------------------------------------------------------------
# commands

def cmd_normalize(args) -> int:
    f = parse_poly(args.expr, args.algebra)
    print(_show(f, args.eval))
    return EXIT_OK


def cmd_act(args) -> int:
    f = parse_poly(args.expr, args.algebra)
    op = args.op
    if op in ("K", "Kinv", "X", "Y"):
        out = act(QGGen(op), f, ActionConfig(args.theta))
    elif op.startswith("bra_"):
        out = bra(op[-1], f)
    elif op == "laplace":
        out = laplace(args.algebra, f)
    else:
        if op == "dl" and f.alg != AlgebraId.R4:
            raise UsageError("dl acts on r4 only")
        out = OPERATORS[op](f)
    print(_show(out, args.eval))
    return EXIT_OK


def cmd_maxwell(args) -> int:
    v = parse_column(args.column, args.algebra)
    out = maxwell(args.algebra, v)
    for x in out:
        print(_show(x, args.eval))
    return EXIT_OK


def cmd_rmatrix(args) -> int:
    from . import rmatrix as rm
    from .verify import Config, check_centrality, check_ch

    R = rm.r_q()
    if args.check == "ybe":
        ok = rm.check_ybe(R)
    elif args.check == "hecke":
        ok = rm.check_hecke(R)
    elif args.check == "skew-inverse":
        ok = rm.check_skew_inverse(R, rm.skew_inverse(R))
    else:
        fn = check_centrality if args.check == "traces" else check_ch
        items = fn(Config())
        ok = all(it[3] in (True, "reported") for it in items)
        for it in items:
            for line in it[5]:
                print(f"  {it[1]}: {line}")
        if args.check == "traces":
            L = rm.l_matrix()
            for k in (1, 2):
                M = L if k == 1 else rm.amat_mul(L, L)
                print(f"  Tr_q L^{k} = {_show(rm.quantum_trace(M), args.eval)}")
    print("pass" if ok else "fail")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    from .verify import dumps, failed, run_verify

    doc = run_verify(args.suite, args.max_degree, args.thetas, args.seed)
    for c in doc["checks"]:
        line = f"{c['status']:<18} {c['check_id']}"
        if c["witness"]:
            line += f"  witness: {c['witness']}"
        print(line)
    bad = failed(doc)
    print(f"{len(doc['checks'])} checks, {len(bad)} failing")
    if args.report:
        if args.report == "-":
            print(dumps(doc))
        else:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(dumps(doc) + "\n")
    return EXIT_FAIL if bad else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _theta_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"theta list must be integers, got {text!r}") from exc


def _algebra(text: str) -> AlgebraId:
    try:
        return AlgebraId(text.lower())
    except ValueError as exc:
        names = ", ".join(a.value for a in AlgebraId)
        raise argparse.ArgumentTypeError(f"unknown algebra {text!r} (choose from {names})") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", type=_algebra, default=AlgebraId.R3)
    common.add_argument("--theta", type=int, default=0)
    common.add_argument("--eval", default=None, metavar="q=Q0[,r=R0]")

    p = argparse.ArgumentParser(prog="qminkowski", description="Exact computations on q-Minkowski algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="print the normal form")
    s.add_argument("expr")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("act", parents=[common], help="apply an operator")
    s.add_argument("--op", required=True, choices=ACT_OPS)
    s.add_argument("expr")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("maxwell", parents=[common], help="apply the Maxwell operator to a column")
    s.add_argument("--column", required=True, help="entries separated by ';'")
    s.set_defaults(func=cmd_maxwell)

    s = sub.add_parser("rmatrix", parents=[common], help="R-matrix checks")
    s.add_argument("--check", required=True, choices=RMATRIX_CHECKS)
    s.set_defaults(func=cmd_rmatrix)

    s = sub.add_parser("verify", help="run registered checks")
    s.add_argument("--suite", choices=["quantum", "classical", "all"], default="all")
    s.add_argument("--max-degree", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--theta", dest="thetas", type=_theta_list, default=(0,))
    s.add_argument("--report", default=None, help="write the JSON report here ('-' for stdout)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "eval"):
            args.eval = _parse_eval(args.eval)
        return args.func(args)
    except (ParseError, UsageError, NotInModule, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
