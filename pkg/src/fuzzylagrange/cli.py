"""Command line front end.

    fuzzylagrange analyze Z2xZ2
    fuzzylagrange verify --max-order 24 --format json
    fuzzylagrange zm 3 4 2
    fuzzylagrange open-problem --max-order 12

Exit codes: 0 success, 2 unparsable group, 3 group cannot be built (bad
parameters or over the size cap), 4 a verification found a violation.
"""

from __future__ import annotations

import argparse
import sys

from .errors import GroupError, SizeLimitError, SpecSyntaxError, VerificationError
from .groups import DEFAULT_CAP
from .lab import (
    DEFAULT_MAX_ORDER,
    analyze_group,
    build_catalog,
    clt_vs_cflt_comparison,
    open_problem_study,
    sylow_all_cyclic,
    verify_fuzzy_identities,
    verify_lemma1,
    verify_main_theorem,
    verify_mu_d_construction,
    verify_sublattice_iso,
    verify_zm_bijection,
    zm_parameters,
)
from .notation import build_group, parse_group_spec
from .reports import format_table, group_report_text, write_jsonl

EXIT_OK, EXIT_PARSE, EXIT_BUILD, EXIT_VIOLATION = 0, 2, 3, 4
DEFAULT_SEED = 0

_DEFAULTS = {"format": "text", "max_order": DEFAULT_MAX_ORDER, "cap": DEFAULT_CAP, "seed": DEFAULT_SEED}


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the options appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS,
                   help="output format (default text; json emits JSON Lines)")
    p.add_argument("--max-order", type=int, default=argparse.SUPPRESS,
                   help=f"largest catalog group order (default {DEFAULT_MAX_ORDER})")
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                   help=f"largest group order that may be constructed (default {DEFAULT_CAP})")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                   help=f"seed for randomized checks (default {DEFAULT_SEED})")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="fuzzylagrange", parents=[common],
        description="Fuzzy orders of finite groups and the converse of the fuzzy Lagrange theorem.",
        epilog="Group notation: Zn, Dn (dihedral of order 2n), Sk, Ak, Q8, ZM(m,n,r), joined by 'x'.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="analyze one group")
    p.add_argument("spec", help="group, e.g. Z12, Z2xZ2, D4 (order 8), ZM(3,4,2)")
    sub.add_parser("verify", parents=[common], help="run every verification suite over the catalog")
    p = sub.add_parser("zm", parents=[common], help="subgroups of ZM(m,n,r) indexed by triples")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    sub.add_parser("open-problem", parents=[common],
                   help="gcd/lcm closure of the fuzzy-order image per catalog group")
    return parser


def _emit(args, records: list[dict], text: str, out) -> None:
    if args.format == "json":
        write_jsonl(records, out)
    elif text:
        out.write(text + "\n")


def cmd_analyze(args, out) -> int:
    try:
        spec = parse_group_spec(args.spec)
    except SpecSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        g = build_group(spec, cap=args.cap)
        data = analyze_group(g, cap=args.cap).to_json()
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    _emit(args, [{"record": "group", **data}], group_report_text(data), out)
    return EXIT_OK


def _check_max_order(args) -> None:
    if args.max_order > args.cap:
        raise SizeLimitError(f"--max-order {args.max_order} exceeds --cap {args.cap}")


def run_verify(max_order: int, cap: int, seed: int):
    """All suites over the catalog; returns (group rows, suite rows).

    Raises :class:`VerificationError` on the first violation.
    """
    catalog = build_catalog(max_order, cap)
    suites = []
    main = verify_main_theorem(catalog)
    suites.append({"suite": main.name, "passed": True, "checked": len(main.rows), "note": ""})
    lemma = verify_lemma1(catalog)
    suites.append({"suite": lemma.name, "passed": True, "checked": len(lemma.rows), "note": ""})
    cyclic = [g for g in catalog if g.cyclic]
    n_mu = sum(len(verify_mu_d_construction(g).rows) for g in cyclic)
    suites.append({"suite": "mu-d-construction", "passed": True, "checked": n_mu,
                   "note": f"{len(cyclic)} cyclic groups"})
    n_iso = sum(len(verify_sublattice_iso(g).rows) for g in cyclic)
    suites.append({"suite": "sublattice-iso", "passed": True, "checked": n_iso,
                   "note": f"{len(cyclic)} cyclic groups"})
    comp = clt_vs_cflt_comparison(catalog)
    suites.append({"suite": "clt-vs-cflt", "passed": True, "checked": len(comp.rows),
                   "note": "clt-not-cflt: " + (",".join(comp.clt_not_cflt) or "none")})
    zm = [verify_zm_bijection(m, n, r, cap) for m, n, r in zm_parameters(max_order)]
    suites.append({"suite": "zm-bijection", "passed": True, "checked": len(zm), "note": ""})
    ident = verify_fuzzy_identities(catalog, seed=seed)
    suites.append({"suite": ident.name, "passed": True, "checked": len(ident.rows), "note": f"seed={seed}"})

    clt = {row["spec"]: row["clt"] for row in comp.rows}
    groups = []
    for row, g in zip(main.rows, catalog):
        groups.append({
            "spec": row["spec"], "order": row["order"], "cyclic": row["cyclic"],
            "cflt": row["cflt"], "clt": clt[row["spec"]], "sylow_all_cyclic": sylow_all_cyclic(g),
            "missing_divisors": row["missing_divisors"],
        })
    return groups, suites


def cmd_verify(args, out) -> int:
    try:
        _check_max_order(args)
        build_catalog(args.max_order, args.cap)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    print(f"seed: {args.seed}", file=sys.stderr)
    try:
        groups, suites = run_verify(args.max_order, args.cap, args.seed)
    except VerificationError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        _emit(args, [{"record": "violation", "type": type(exc).__name__, "message": str(exc)}],
              f"FAIL {type(exc).__name__}: {exc}", out)
        return EXIT_VIOLATION
    records = [{"record": "group", **g} for g in groups] + [{"record": "suite", **s} for s in suites]
    text = format_table(groups) + "\n\n" + format_table(suites)
    _emit(args, records, text, out)
    return EXIT_OK


def cmd_zm(args, out) -> int:
    try:
        report = verify_zm_bijection(args.m, args.n, args.r, cap=args.cap)
    except VerificationError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    summary = {"group": f"ZM({args.m},{args.n},{args.r})", **report.summary}
    records = [{"record": "triple", **row} for row in report.rows] + [{"record": "summary", **summary}]
    text = format_table(report.rows, ["triple", "order", "generators", "members"]) + "\n\n" + format_table([summary])
    _emit(args, records, text, out)
    return EXIT_OK


def cmd_open_problem(args, out) -> int:
    try:
        _check_max_order(args)
        rows = [r.to_json() for r in open_problem_study(build_catalog(args.max_order, args.cap))]
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    _emit(args, [{"record": "open-problem", **r} for r in rows], format_table(rows), out)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "zm": cmd_zm, "open-problem": cmd_open_problem}


def main(argv: list[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    for key, value in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    return COMMANDS[args.command](args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
