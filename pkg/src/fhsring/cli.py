"""Command line: gen, analyze, verify, search, selftest.

Exit codes: 0 success, 1 theorem/oracle failure, 2 invalid parameters.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .fhs import ParamError, build_family, family_csv, resolve_budget, sweep, validate_params
from .report import analyze_family, verify_family
from .ring import BudgetError
from .selftest import check_quotient, corrupt_mul, run_selftest

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def _int_set(text: str | None) -> list[int] | None:
    """Parse "2,3,5" or "1-4" (or a mix) into a sorted list."""
    if text is None:
        return None
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.update(range(int(lo), int(hi) + 1))
        elif part:
            out.add(int(part))
    return sorted(out)


def _add_family_args(sp: argparse.ArgumentParser) -> None:
    for name in ("p", "m", "k", "r", "z"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--s", type=int, default=1)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--gamma", type=int, help="mixed-radix label of γ (coordinate 0 must be 1)")
    g.add_argument("--rho", type=int, help="use the first γ of this rank")
    sp.add_argument("--budget", type=int, help="max q^r (default $FHS_BUDGET or 2^20)")
    sp.add_argument("--out", type=Path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fhsring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="write the family as CSV plus a params JSON sidecar")
    _add_family_args(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("analyze", help="correlation statistics and bounds, no theorem gating")
    _add_family_args(sp)
    sp.add_argument("--profiles", action="store_true")
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("verify", help="run the T2-T7 property checks on the constructed family")
    _add_family_args(sp)
    sp.add_argument("--profiles", action="store_true")
    sp.add_argument("--format", choices=("json",), default="json")

    sp = sub.add_parser("search", help="enumerate valid parameter sets")
    for name in ("p", "m", "k", "r"):
        sp.add_argument(f"--{name}", help="values such as 2,3,5 or 1-4")
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", type=Path)

    sp = sub.add_parser("selftest", help="exhaustive ring, trace and bound oracles")
    sp.add_argument("--p", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--out", type=Path)
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _params(args):
    return validate_params(args.p, args.m, args.k, args.r, args.z, args.s,
                           gamma=args.gamma, rho=args.rho, budget=resolve_budget(args.budget))


def cmd_gen(args) -> int:
    params = _params(args)
    family = build_family(params)
    if args.format == "json":
        body = _dump({"params": params.as_dict(),
                      "sequences": [seq.labels.tolist() for seq in family]})
    else:
        body = family_csv(family)
    _emit(body, args.out)
    if args.out is not None:
        sidecar = args.out.with_name(args.out.stem + ".params.json")
        sidecar.write_text(_dump(params.as_dict()))
    return EXIT_OK


def _profile_rows(rep) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y", "t", "H"])
    for i, prof in enumerate(rep.autos):
        w.writerows([i, i, t, int(h)] for t, h in enumerate(prof))
    for (a, b), prof in rep.cross.items():
        w.writerows([a, b, t, int(h)] for t, h in enumerate(prof))
    return buf.getvalue()


def cmd_analyze(args) -> int:
    rep = analyze_family(build_family(_params(args)), profiles=args.profiles)
    if args.format == "csv":
        _emit(_profile_rows(rep), args.out)
    else:
        _emit(_dump(rep.as_dict()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify_family(build_family(_params(args)), profiles=args.profiles)
    _emit(_dump(rep.as_dict()), args.out)
    if not rep.passed:
        for name in rep.failing():
            c = rep.theorems[name]
            print(f"FAIL {name}: {c.cites}: {c.detail}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_search(args) -> int:
    rows = sweep(resolve_budget(args.budget), _int_set(args.p), _int_set(args.m),
                 _int_set(args.k), _int_set(args.r), s=args.s)
    if args.format == "json":
        _emit(_dump([w.as_dict() for w in rows]), args.out)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "m", "k", "r", "z", "rho", "nu", "N", "l", "lambda"])
    for row in rows:
        w.writerow([row.p, row.m, row.k, row.r, row.z, row.rho, *row.predicted])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    given = [args.p, args.m, args.k]
    if any(v is not None for v in given):
        if any(v is None for v in given):
            raise ParamError([("bad_value", "selftest needs all of --p --m --k or none")])
        outcomes = [check_quotient(args.p, args.m, args.k, mul=corrupt_mul if args.inject_fault else None)]
    else:
        outcomes = run_selftest(inject_fault=args.inject_fault)
    lines = [f"{'PASS' if o.passed else 'FAIL'} {o.name}: {o.detail}" for o in outcomes]
    _emit("\n".join(lines) + "\n", args.out)
    failed = [o for o in outcomes if not o.passed]
    if failed:
        print(f"first failing oracle: {failed[0].name}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "analyze": cmd_analyze, "verify": cmd_verify,
            "search": cmd_search, "selftest": cmd_selftest}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParamError as exc:
        print(json.dumps(exc.as_dict()), file=sys.stderr)
        return EXIT_INVALID
    except BudgetError as exc:
        print(json.dumps({"errors": [{"code": "budget", "message": str(exc)}]}), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
