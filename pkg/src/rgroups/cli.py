"""Command-line front end.

Verbs:
    run        evaluate a scenario file (single or pair) and print a report
    enumerate  print classification tables (inner forms / Levi subgroups)
    sweep      exhaustive small-instance verification of every theorem
    selfcheck  a handful of canned scenarios as a smoke test

Exit codes: 0 success, 2 validation error, 3 internal inconsistency.
stdout carries data; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import InternalInconsistencyError, ValidationError
from .groupdata import enumerate_inner_forms, enumerate_levis
from .repdatum import Scenario, ScenarioPair, scenario_from_json
from .rgroup import transfer_check
from . import report as rpt
from .sweep import run_sweep

RANK_CAP = 12


def _fail_validation(exc: ValidationError) -> int:
    for path, msg in exc.violations:
        print(f"invalid: {path}: {msg}", file=sys.stderr)
    return 2


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError([("file", str(exc))])
    except json.JSONDecodeError as exc:
        raise ValidationError([("file", f"not valid JSON: {exc}")])


def cmd_run(args: argparse.Namespace) -> int:
    data = _load(args.path)
    is_pair = args.pair or ("quasi_split" in data and "inner" in data)
    if is_pair:
        extra = set(data) - {"quasi_split", "inner"}
        if extra:
            raise ValidationError([("pair", f"unknown keys: {sorted(extra)}")])
        if "quasi_split" not in data or "inner" not in data:
            raise ValidationError([("pair", "need both 'quasi_split' and 'inner'")])
        pair = ScenarioPair(
            scenario_from_json(data["quasi_split"]),
            scenario_from_json(data["inner"]),
        )
        bad = pair.violations()
        if bad:
            raise ValidationError(bad)
        tr = transfer_check(pair)
        if args.json:
            out = {
                "quasi_split": rpt.scenario_report(pair.quasi_split),
                "inner": rpt.scenario_report(pair.inner),
                "transfer": {"match": tr.ok, "mismatches": list(tr.mismatches)},
            }
            print(json.dumps(out, sort_keys=True, indent=2))
        else:
            print(rpt.transfer_text(tr), end="")
        return 0
    scen = scenario_from_json(data)
    out = rpt.scenario_report(scen)
    if args.json:
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(rpt.report_text(out), end="")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 2 <= args.rank <= RANK_CAP:
        raise ValidationError([("rank", f"rank must be in 2..{RANK_CAP}")])
    forms = enumerate_inner_forms(args.family, args.rank)
    if args.forms:
        for g in forms:
            print(f"{g.family} {g.rank} {g.form}")
        return 0
    if args.form is not None:
        forms = [g for g in forms if g.form == args.form]
        if not forms:
            raise ValidationError([("form", f"no form '{args.form}' for {args.family} rank {args.rank}")])
    for g in forms:
        for desc in enumerate_levis(g, maximal=args.maximal):
            print(desc.golden_line())
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    t0 = time.monotonic()
    res = run_sweep(max_rank=args.max_rank, max_k=args.max_k)
    summary = rpt.sweep_summary(res)
    print(summary, end="")
    print(f"elapsed           : {time.monotonic() - t0:.1f}s", file=sys.stderr)
    if args.seed_report:
        with open(args.seed_report, "w") as fh:
            fh.write(summary)
    if args.report_dir:
        for path in rpt.write_sweep_report(res, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    if res.violations:
        print("first failing scenario:", file=sys.stderr)
        print(json.dumps(res.violations[0], sort_keys=True, indent=2), file=sys.stderr)
        return 3
    return 0


def cmd_selfcheck(args: argparse.Namespace) -> int:
    res = run_sweep(max_rank=3, max_k=2)
    if res.violations:
        print("selfcheck FAILED", file=sys.stderr)
        print(json.dumps(res.violations[0], sort_keys=True), file=sys.stderr)
        return 3
    print(f"selfcheck ok ({res.scenarios} scenarios, {res.pairs} pairs)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rgroups", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    pr = sub.add_parser("run", help="evaluate a scenario file")
    pr.add_argument("path")
    fmt = pr.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--text", dest="json", action="store_false")
    pr.add_argument("--pair", action="store_true", help="treat the file as a matched pair")
    pr.set_defaults(func=cmd_run)

    pe = sub.add_parser("enumerate", help="print classification tables")
    pe.add_argument("family", choices=["B", "C", "D1", "D2"])
    pe.add_argument("rank", type=int)
    pe.add_argument("--forms", action="store_true", help="list inner forms instead of Levis")
    pe.add_argument("--levis", action="store_true", help="list Levi subgroups (default)")
    pe.add_argument("--maximal", action="store_true", help="maximal proper Levis only")
    pe.add_argument("--form", default=None, help="restrict to one inner form")
    pe.set_defaults(func=cmd_enumerate)

    ps = sub.add_parser("sweep", help="exhaustive verification")
    ps.add_argument("--max-rank", type=int, default=4)
    ps.add_argument("--max-k", type=int, default=3)
    ps.add_argument("--seed-report", default=None, metavar="PATH",
                    help="also write the summary to PATH")
    ps.add_argument("--report-dir", default=None, metavar="DIR",
                    help="write the per-scenario table and figures to DIR")
    ps.set_defaults(func=cmd_sweep)

    pc = sub.add_parser("selfcheck", help="quick smoke test")
    pc.set_defaults(func=cmd_selfcheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        return _fail_validation(exc)
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
