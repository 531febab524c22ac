"""Command-line front end.

Exit codes: 0 on success, 1 when a mathematical check is falsified or a
value fails validation, 2 on a parse or usage error.  Diagnostics go to
standard error; results go to standard output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import companion, cuntz, tables, words


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _load(path: str) -> tables.FiniteRRMonoid:
    with open(path, encoding="utf-8") as fh:
        return tables.from_json(fh.read())


def _save(M: tables.FiniteRRMonoid, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(tables.to_json(M))


def cmd_axioms(args) -> int:
    M = _load(args.file)
    report = tables.check_axioms(M)
    payload = {
        "passed": report.passed,
        "violations": [
            {"axiom": ax, "witness": [M.element_names[i] for i in wit]}
            for ax, wit in report.violations],
    }
    _emit(payload, args.report)
    return 0 if report.passed else 1


def cmd_analyze(args) -> int:
    M = _load(args.file)
    report = tables.check_axioms(M)
    if not report.passed:
        print("axioms fail; run the axioms command for details", file=sys.stderr)
        return 1
    cls = tables.classify(M)
    payload = {
        "name": M.name,
        "size": len(M),
        "is_inverse": cls.is_inverse,
        "is_distributive": cls.is_distributive,
        "is_boolean": cls.is_boolean,
        "is_etale": cls.is_etale,
        "is_zero_simplifying": cls.is_zero_simplifying,
        "is_fundamental": cls.is_fundamental,
        "n_projections": cls.n_projections,
        "n_partial_units": cls.n_partial_units,
        "n_total": cls.n_total,
    }
    _emit(payload, args.report)
    return 0


def cmd_companion(args) -> int:
    M = _load(args.file)
    E = companion.etale_of(M, cap=args.max_acceptable)
    if args.output:
        _save(E, args.output)
    _emit({"name": E.name, "size": len(E)}, args.report)
    return 0


def cmd_verify_inv(args) -> int:
    M = _load(args.file)
    report = companion.verify_inv_iso(M, cap=args.max_acceptable)
    payload = {"isomorphic": report.passed,
               "details": [list(map(str, d)) for d in report.details]}
    _emit(payload, args.report)
    return 0 if report.passed else 1


def cmd_gen(args) -> int:
    if args.family == "pt":
        M = tables.build_PT(args.n)
    elif args.family == "inv":
        M = tables.build_I(args.n)
    else:
        M = tables.build_boolean_algebra(args.n)
    if args.output:
        _save(M, args.output)
    else:
        sys.stdout.write(tables.to_json(M))
    print(f"generated {M.name} with {len(M)} elements", file=sys.stderr)
    return 0


def cmd_pn(args) -> int:
    f = words.parse_basic(args.f, args.n)
    g = words.parse_basic(args.g, args.n)
    if args.op == "mul":
        print(words.basic_str(words.pn_mul(f, g)))
    return 0


def cmd_h(args) -> int:
    n = args.n
    f = cuntz.parse_table(args.elem[0], n)
    if args.op == "compose":
        if len(args.elem) != 2:
            print("compose needs two elements", file=sys.stderr)
            return 2
        g = cuntz.parse_table(args.elem[1], n)
        print(cuntz.table_str(cuntz.reduce(cuntz.compose(f, g))))
        return 0
    if args.op == "reduce":
        print(cuntz.table_str(cuntz.reduce(f)))
        return 0
    if args.op == "invert":
        inv = cuntz.invert(f)
        if inv is None:
            print("not a partial unit", file=sys.stderr)
            return 1
        print(cuntz.table_str(inv))
        return 0
    payload = {
        "zero": cuntz.is_zero(f),
        "partial_unit": cuntz.is_partial_unit(f),
        "total": cuntz.is_total(f),
        "unit": cuntz.is_unit(f),
        "reduced": cuntz.table_str(cuntz.reduce(f)),
    }
    _emit(payload, args.report)
    return 0


def cmd_cantor(args) -> int:
    term = cuntz.parse_term(args.term, args.n)
    print(cuntz.table_str(cuntz.eval_term(term, args.n)))
    return 0


def cmd_witness(args) -> int:
    code = [words.parse_word(w.strip(), args.n) for w in args.code.split(",")]
    a = cuntz.zero_simplifying_witness(code, args.n)
    print(cuntz.table_str(a))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrlab", description="right restriction monoid laboratory")
    parser.add_argument("--report", choices=["text", "json"], default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-acceptable", type=int, default=companion.MAX_ACCEPTABLE)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="verify the monoid and star axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("analyze", help="classify a table monoid")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("companion", help="build the companion monoid")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_companion)

    p = sub.add_parser("verify-inv", help="check the partial-unit isomorphism")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_inv)

    p = sub.add_parser("gen", help="generate a corpus monoid")
    p.add_argument("family", choices=["pt", "inv", "bool"])
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("pn", help="basic-map arithmetic")
    p.add_argument("op", choices=["mul"])
    p.add_argument("n", type=int)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_pn)

    p = sub.add_parser("h", help="table-map arithmetic")
    p.add_argument("op", choices=["compose", "reduce", "invert", "classify"])
    p.add_argument("n", type=int)
    p.add_argument("elem", nargs="+")
    p.set_defaults(func=cmd_h)

    p = sub.add_parser("cantor", help="evaluate a Cantor-algebra term")
    p.add_argument("op", choices=["eval"])
    p.add_argument("n", type=int)
    p.add_argument("term")
    p.set_defaults(func=cmd_cantor)

    p = sub.add_parser("witness", help="total witness for a prefix code")
    p.add_argument("n", type=int)
    p.add_argument("code", help="comma-separated prefix code")
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (tables.InterchangeError, words.WordSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, tables.MalformedTableError, companion.StructuralError,
            tables.ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
