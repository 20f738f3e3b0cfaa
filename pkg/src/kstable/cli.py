"""Command-line front end.

    kstable run --type A2 --suite all [--seed N] [--jobs N] [--format json --out report.json]
    kstable export --type A1 --table restrictions- --format csv --out table.csv

Exit status: 0 when every check passes, 1 on a failed check or an I/O error,
2 on a usage error (unknown type, suite, table or malformed option).
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .exactring import RationalFn, SingularCharacter, parse_character
from .hecke import transition_data
from .padic import PadicContext
from .rootdata import CartanError, build_root_system
from .rootpoly import k_table
from .stable import stab_normalized
from .suites import SUITE_FUNCTIONS, SUITES, Check, SuiteContext, SuiteReport, stderr_progress
from .twisted import TwistedAlgebra

TABLES = ("restrictions+", "restrictions-", "K", "a+", "a-", "b+", "b-", "d+", "d-", "padic-a", "padic-b")
FORMATS = ("csv", "json", "latex")


class UsageError(Exception):
    pass


# running suites

def _run_one(args: tuple) -> list[Check]:
    label, suite, seed, tau, mu, quiet = args
    ctx = SuiteContext(label, seed=seed, tau=tau, mu=mu, progress=None if quiet else stderr_progress)
    return SUITE_FUNCTIONS[suite](ctx)


def run_suite(label: str, suites=SUITES, seed: int = 0, jobs: int = 1, tau: str | None = None,
              mu: tuple[int, ...] | None = None, quiet: bool = False) -> SuiteReport:
    """Run the named suites for one Cartan type and collect the checks in suite order."""
    try:
        build_root_system(label)
    except (CartanError, ValueError, KeyError) as exc:
        raise UsageError(f"unsupported type {label!r}: {exc}") from exc
    suites = list(suites)
    unknown = [s for s in suites if s not in SUITE_FUNCTIONS]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    work = [(label, s, seed, tau, mu, quiet) for s in suites]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, work))
    else:
        results = [_run_one(w) for w in work]
    report = SuiteReport(label, seed)
    for checks in results:
        report.checks.extend(checks)
    return report


REPORT_HEADER = ["check", "identity", "status", "counterexample"]


def render_report(report: SuiteReport, fmt: str) -> str:
    rows = report.rows()
    if fmt == "json":
        body = {"type": report.type, "seed": report.seed, "passed": report.ok,
                "checks": [dict(zip(REPORT_HEADER, r)) for r in rows]}
        return json.dumps(body, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv([REPORT_HEADER] + rows)
    if fmt == "latex":
        return _latex([REPORT_HEADER] + [[r[0], r[2]] + r[3:] for r in rows], text=True)
    raise UsageError(f"unknown format {fmt!r}")


def summary_text(report: SuiteReport) -> str:
    lines = [f"{c.status.upper():4}  {c.id}  [{c.reference}]" + (f"  -- {c.detail}" if c.detail else "")
             for c in report.checks]
    lines.append(f"{len(report.checks) - len(report.failed)}/{len(report.checks)} checks passed for {report.type}")
    return "\n".join(lines) + "\n"


# tables

def build_table(label: str, what: str) -> tuple[list[str], list[list[RationalFn]], int]:
    """Row/column labels (ShortLex), entries, and the rank of the exponent lattice."""
    if what not in TABLES:
        raise UsageError(f"unknown table {what!r}; choose from {', '.join(TABLES)}")
    try:
        rs = build_root_system(label)
    except (CartanError, ValueError, KeyError) as exc:
        raise UsageError(f"unsupported type {label!r}: {exc}") from exc
    if what.startswith("padic"):
        P = PadicContext(label)
        a, b = P.transition_matrices()
        data = a if what == "padic-a" else b
        W = P.W
        return [str(w) for w in W], [[data.entry(w, v) for v in W] for w in W], P.rank
    alg = TwistedAlgebra(rs)
    W = alg.W
    labels = [str(w) for w in W]
    if what.startswith("restrictions"):
        sign = what[-1]
        return labels, [[stab_normalized(alg, sign, w).restrict(v) for v in W] for w in W], alg.rank
    if what == "K":
        table = k_table(alg)
        return labels, [[table.get((v, w), alg.zero) for w in W] for v in W], alg.rank
    data = transition_data(alg, what)
    return labels, [[data.entry(w, v) for v in W] for w in W], alg.rank


def render_table(label: str, what: str, fmt: str, tau: str | None = None) -> str:
    labels, entries, _ = build_table(label, what)
    if tau is not None:
        rs = build_root_system(label)
        cartan = rs.dual_system.cartan if what.startswith("padic") else rs.cartan
        try:
            char = parse_character(tau, cartan)
        except ValueError as exc:
            raise UsageError(f"bad --tau: {exc}") from exc
        cells = [[str(char(e)) for e in row] for row in entries]
    else:
        cells = [[str(e) for e in row] for row in entries]
    if fmt == "json":
        rows = [{"w": w, "entries": dict(zip(labels, row))} for w, row in zip(labels, cells)]
        return json.dumps({"type": label, "basis": what, "rows": rows}, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv([["w\\v"] + labels] + [[w] + row for w, row in zip(labels, cells)])
    if fmt == "latex":
        return _latex([[""] + labels] + [[w] + row for w, row in zip(labels, cells)])
    raise UsageError(f"unknown format {fmt!r}")


def _csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\r\n").writerows(rows)
    return buf.getvalue()


def _latex(rows: list[list[str]], text: bool = False) -> str:
    def cell(s: str) -> str:
        if text:
            return "\\text{" + s.replace("\\", "\\textbackslash{}").replace("{", "\\{").replace("}", "\\}") \
                .replace("_", "\\_").replace("^", "\\^{}").replace("&", "\\&").replace("#", "\\#") + "}"
        return s.replace("*", " ") if s else s
    ncols = max(len(r) for r in rows)
    lines = ["\\[", "\\begin{array}{" + "l" * ncols + "}"]
    for r in rows:
        lines.append(" & ".join(cell(c) for c in r) + " \\\\")
    lines += ["\\end{array}", "\\]"]
    return "\n".join(lines) + "\n"


# argument handling

def _parse_mu(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"bad --mu {text!r}: expected integers") from exc


def _config_defaults(path: str | None) -> dict:
    if not path:
        return {}
    parser = configparser.ConfigParser()
    try:
        parser.read_string("[kstable]\n" + Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    except configparser.Error as exc:
        raise UsageError(f"malformed config {path}: {exc}") from exc
    return {k.replace("-", "_"): v for k, v in parser["kstable"].items()}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type", help="Cartan label such as A2, B2, G2")
    common.add_argument("--format", choices=FORMATS, help="output format for --out (default json for reports, csv for tables)")
    common.add_argument("--out", help="write the report or table here")
    common.add_argument("--tau", help='character, e.g. "alpha1=3/2,alpha2=5,q=9"')
    common.add_argument("--config", help="key=value file supplying defaults for these options")

    parser = argparse.ArgumentParser(prog="kstable", description="Stable bases in equivariant K-theory: identity suites and tables.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", parents=[common], help="run identity suites")
    run.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)} or 'all'; repeatable or comma-separated")
    run.add_argument("--seed", type=int)
    run.add_argument("--jobs", type=int)
    run.add_argument("--mu", help="coweight in the dual fundamental coordinates, e.g. 1,1")
    run.add_argument("--quiet", action="store_true", help="no progress on stderr")
    export = sub.add_parser("export", parents=[common], help="write a table")
    export.add_argument("--table", choices=TABLES)
    return parser


def _resolve(args: argparse.Namespace) -> argparse.Namespace:
    defaults = _config_defaults(args.config)
    for key, value in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    if not args.type:
        raise UsageError("--type is required")
    if args.format is not None and args.format not in FORMATS:
        raise UsageError(f"unknown format {args.format!r}")
    if args.command == "run":
        raw = args.suite if isinstance(args.suite, list) else [args.suite or "all"]
        names = [s.strip() for item in raw for s in item.split(",") if s.strip()]
        args.suite = list(SUITES) if "all" in names else names
        try:
            args.seed = int(args.seed) if args.seed is not None else 0
            args.jobs = int(args.jobs) if args.jobs is not None else 1
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        args.mu = _parse_mu(args.mu)
    elif not args.table:
        raise UsageError("--table is required")
    return args


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _resolve(args)
        if args.command == "run":
            report = run_suite(args.type, args.suite, args.seed, args.jobs, args.tau, args.mu, args.quiet)
            sys.stdout.write(summary_text(report))
            if args.out:
                _write(args.out, render_report(report, args.format or "json"))
            return 0 if report.ok else 1
        text = render_table(args.type, args.table, args.format or "csv", args.tau)
        if args.out:
            _write(args.out, text)
        else:
            sys.stdout.write(text)
        return 0
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"kstable: error: {exc}", file=sys.stderr)
        return 2
    except SingularCharacter as exc:
        print(f"kstable: singular character: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"kstable: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
