"""``pencilcontact`` command line: tables, check-symbolic, check-numeric, report.

Every flag can also be set through an environment variable named
``PENCILCONTACT_<FLAG>`` (upper case, dashes as underscores), e.g.
``PENCILCONTACT_SEED=7`` or ``PENCILCONTACT_STRETCH=1``.  Command-line flags
win over the environment.

Exit codes: 0 all pass, 1 some check failed, 2 a numeric check ran out of
retries, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional, Sequence

from . import invariants as I
from .exact.polyd import render
from .verify import CheckResult, RunConfig, exit_code, run_numeric, run_symbolic

ENV_PREFIX = "PENCILCONTACT_"
EXIT_USAGE = 64

# Contact patterns shown next to the hypersurface degrees of the degree table
CONTACT_ROWS = {"hyperflex": "(4)", "flex_bitangent": "(3,2)", "tritangent": "(2,2,2)"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def _env_bool(name: str) -> bool:
    v = _env(name)
    if v is None:
        return False
    if v.lower() in ("1", "true", "yes", "on"):
        return True
    if v.lower() in ("0", "false", "no", "off", ""):
        return False
    raise UsageError(f"{ENV_PREFIX}{name.upper()} must be a boolean, got {v!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d-min", type=int, default=None, help="smallest degree in tables (default 3)")
    common.add_argument("--d-max", type=int, default=None, help="largest degree in tables (default 8)")
    common.add_argument("--seed", type=int, default=None, help="seed for random fixtures (required for numeric runs)")
    common.add_argument("--height", type=int, default=None, help="coefficient height of random fixtures (default 10)")
    common.add_argument("--cluster-radius", type=float, default=None, help="root clustering radius (default 1e-6)")
    common.add_argument("--residual-tol", type=float, default=None, help="residual acceptance (default 1e-8)")
    common.add_argument("--retries", type=int, default=None, help="retry budget per count (default 5)")
    common.add_argument("--stretch", action="store_true", default=None, help="also run the stretch-tier counts")
    common.add_argument("--format", dest="fmt", choices=("md", "csv", "json"), default=None)
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    p = _Parser(prog="pencilcontact", description="Exact verification of contact invariants of pencils of plane curves.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    sub.add_parser("tables", parents=[common], help="degree table of every invariant")
    sub.add_parser("check-symbolic", parents=[common], help="exact route-equality identities")
    sub.add_parser("check-numeric", parents=[common], help="seeded numeric counts against closed forms")
    sub.add_parser("report", parents=[common], help="both suites as one JSON document")
    return p


def _pick(args, name: str, conv, default):
    v = getattr(args, name)
    if v is not None:
        return v
    raw = _env(name.replace("_", "-"))
    if raw is None:
        return default
    try:
        return conv(raw)
    except ValueError as exc:
        raise UsageError(f"bad value for {ENV_PREFIX}{name.upper()}: {raw!r}") from exc


def config_from_args(args) -> RunConfig:
    seed = _pick(args, "seed", int, None)
    fmt = _pick(args, "fmt", str, None)
    if fmt is None:
        fmt = _env("format", "json" if args.command == "report" else "md")
    try:
        return RunConfig(
            d_min=_pick(args, "d_min", int, 3),
            d_max=_pick(args, "d_max", int, 8),
            seed=seed,
            height=_pick(args, "height", int, 10),
            cluster_radius=_pick(args, "cluster_radius", float, 1e-6),
            residual_tol=_pick(args, "residual_tol", float, 1e-8),
            retries=_pick(args, "retries", int, 5),
            stretch=bool(args.stretch) or _env_bool("stretch"),
            fmt=fmt,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- rendering -------------------------------------------------------------------------

CHECK_FIELDS = ("invariant_id", "d", "expected", "computed", "method", "status", "seed", "timings")


def _md_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    def esc(x):
        return str(x).replace("|", "\\|")

    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(esc(c) for c in r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _csv_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_checks(rows: Sequence[CheckResult], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
    table = [[r.invariant_id, r.d, r.expected, r.computed, r.method, r.status, r.seed, r.timings.get("seconds", "")] for r in rows]
    header = ["invariant_id", "d", "expected", "computed", "method", "status", "seed", "seconds"]
    return _md_table(header, table) if fmt == "md" else _csv_table(header, table)


def table_records(config: RunConfig) -> List[dict]:
    out = []
    for row in I.invariant_table(config.d_min, config.d_max):
        rec = {
            "invariant_id": row.invariant_id,
            "contact": CONTACT_ROWS.get(row.invariant_id, ""),
            "method": row.derivation,
            "symbolic": render(row.value),
            "factored": row.factored_form or "",
            "routes_agree": row.routes_agree,
        }
        for d, v in row.values:
            rec[f"d={d}"] = str(v)
        out.append(rec)
    return sorted(out, key=lambda r: (r["invariant_id"], r["method"]))


def render_tables(config: RunConfig) -> str:
    recs = table_records(config)
    if config.fmt == "json":
        return json.dumps(recs, indent=2) + "\n"
    header = list(recs[0].keys())
    rows = [[r[k] for k in header] for r in recs]
    return _md_table(header, rows) if config.fmt == "md" else _csv_table(header, rows)


def report_document(config: RunConfig, symbolic: Sequence[CheckResult], numeric: Sequence[CheckResult]) -> str:
    rows = sorted(list(symbolic) + list(numeric), key=CheckResult.sort_key)
    doc = {
        "config": {
            "d_min": config.d_min, "d_max": config.d_max, "seed": config.seed, "height": config.height,
            "cluster_radius": config.cluster_radius, "residual_tol": config.residual_tol,
            "retries": config.retries, "stretch": config.stretch,
        },
        "exit_code": exit_code(rows),
        "rows": [r.as_dict() for r in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        if args.command == "check-numeric" and config.seed is None:
            raise UsageError("check-numeric needs --seed (or PENCILCONTACT_SEED)")
    except UsageError as exc:
        print(f"pencilcontact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = _pick(args, "out", str, None)

    if args.command == "tables":
        _emit(render_tables(config), out)
        return 0
    if args.command == "check-symbolic":
        rows = run_symbolic(config.d_min, config.d_max)
        _emit(render_checks(rows, config.fmt), out)
        return exit_code(rows)
    if args.command == "check-numeric":
        rows = run_numeric(config)
        _emit(render_checks(rows, config.fmt), out)
        return exit_code(rows)
    # report: the numeric tier runs only when a seed is given
    sym = run_symbolic(config.d_min, config.d_max)
    num = run_numeric(config) if config.seed is not None else []
    _emit(report_document(config, sym, num), out)
    return exit_code(list(sym) + list(num))


if __name__ == "__main__":
    sys.exit(main())
