"""Command-line interface: thin wrappers over the library.

Each subcommand parses arguments, calls library functions, and prints the
structured result; no numeric logic lives here.  Output is deterministic:
JSON with big integers and rationals rendered as decimal strings ("p/q"
for non-integral rationals), or the same fields as CSV or an aligned text
table.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
input schema, 3 non-positive table-driven total (no degree exists).
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .degrees import (
    DegreeReport,
    NotGenericallyFiniteError,
    boole_degree,
    bounds,
    conjecture_scan,
    degree_alternate,
    degree_curve_closed,
    degree_generic,
    degree_m_np1,
    degree_main,
    degree_surface_closed,
    degree_threefold_closed,
    dim_xm,
)
from .grassmann import GrassmannShape, grassmann_degree, grassmann_dim
from .partitions import (
    DEFAULT_BRUTE_CAP,
    canonical,
    syt_count_bruteforce,
    syt_count_hook,
    weight,
)
from .schur import SegreIntegralTable, VeroneseVariety
from .verify import (
    SUITE_NAMES,
    run_bounds_suite,
    run_crossform_suite,
    run_identity_suite,
    run_schur_suite,
    run_syt_suite,
)

ENV_BRUTE_CAP = "GAUSSDEG_BRUTE_CAP"
FORMATS = ("json", "csv", "table")
METHOD_CHOICES = (
    "main",
    "alternate",
    "curve_closed",
    "surface_closed",
    "threefold_closed",
    "m_eq_n_plus_1",
    "boole",
)


@dataclass(frozen=True)
class CliConfig:
    """Validated knobs shared by the sweep-style subcommands."""

    output_format: str = "json"
    n_values: tuple[int, ...] | None = None
    d_values: tuple[int, ...] | None = None
    brute_cap: int = DEFAULT_BRUTE_CAP
    identity_cap: int = 6

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")
        for label, values in (("--n", self.n_values), ("--d", self.d_values)):
            if values is not None and len(values) == 0:
                raise ValueError(f"range for {label} is empty")
        if self.brute_cap < 1:
            raise ValueError("brute-force cap must be >= 1")
        if self.identity_cap < 1:
            raise ValueError("identity cap must be >= 1")


def effective_brute_cap() -> int:
    """Brute-force enumeration cap, overridable via GAUSSDEG_BRUTE_CAP."""
    raw = os.environ.get(ENV_BRUTE_CAP)
    if raw is None:
        return DEFAULT_BRUTE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_BRUTE_CAP} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{ENV_BRUTE_CAP} must be >= 1, got {cap}")
    return cap


def parse_range(text: str) -> tuple[int, ...]:
    """Parse '3' or '1..4' (inclusive endpoints) into a tuple of integers."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        return tuple(range(int(lo_text), int(hi_text) + 1))
    return (int(text),)


def parse_partition(text: str):
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    return canonical(int(piece) for piece in items)


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(str(item) for item in value)
    return str(value)


def _csv_text(rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    headers = list(rows[0].keys())
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_fmt_cell(row.get(h)) for h in headers])
    return buffer.getvalue().rstrip("\n")


def _table_text(rows: list[dict]) -> str:
    headers = list(rows[0].keys())
    cells = [[_fmt_cell(row.get(h)) for h in headers] for row in rows]
    widths = [
        max(len(header), max(len(line[i]) for line in cells))
        for i, header in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for line in cells:
        lines.append(
            "  ".join(line[i].ljust(widths[i]) for i in range(len(headers))).rstrip()
        )
    return "\n".join(lines)


def _render_object(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2)
    if fmt == "csv":
        return _csv_text([doc])
    return _table_text([doc])


def _render_rows(rows: list[dict], fmt: str, envelope: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps(envelope if envelope is not None else rows, indent=2)
    if fmt == "csv":
        return _csv_text(rows)
    return _table_text(rows)


def _dispatch_method(v: VeroneseVariety, m: int, method: str) -> DegreeReport:
    if method == "main":
        return degree_main(v, m)
    if method == "alternate":
        return degree_alternate(v, m)
    if method == "m_eq_n_plus_1":
        if m != v.n + 1:
            raise ValueError("method m_eq_n_plus_1 requires m = n + 1")
        return degree_m_np1(v)
    if method == "curve_closed":
        if v.n != 1:
            raise ValueError("method curve_closed requires n = 1")
        return degree_curve_closed(v.d, m)
    if method == "surface_closed":
        if v.n != 2:
            raise ValueError("method surface_closed requires n = 2")
        return degree_surface_closed(v.d, m)
    if method == "threefold_closed":
        if v.n != 3:
            raise ValueError("method threefold_closed requires n = 3")
        return degree_threefold_closed(v.d, m)
    if method == "boole":
        if m != v.N - 1:
            raise ValueError("method boole requires m = N - 1")
        return DegreeReport(
            n=v.n,
            d=v.d,
            N=v.N,
            m=m,
            dim_xm=dim_xm(v.n, v.N, m),
            deg_xm=boole_degree(v.n, v.d),
            method="boole",
        )
    raise ValueError(f"unknown method {method!r}")


def cmd_degree(args) -> int:
    v = VeroneseVariety(args.n, args.d)
    report = _dispatch_method(v, args.m, args.method)
    print(_render_object(report.to_dict(), args.format))
    return 0


def cmd_table(args) -> int:
    v = VeroneseVariety(args.n, args.d)
    rows = []
    for m in range(v.n, v.N):
        report = degree_main(v, m)
        b = bounds(v, m)
        rows.append(
            {
                "m": m,
                "dim": report.dim_xm,
                "degree": str(report.deg_xm),
                "ratio": str(b.ratio),
                "within_conjecture": b.within_conjecture,
            }
        )
    envelope = {"n": v.n, "d": v.d, "N": v.N, "rows": rows}
    print(_render_rows(rows, args.format, envelope=envelope))
    return 0


def cmd_verify(args) -> int:
    config = CliConfig(
        output_format=args.format,
        brute_cap=effective_brute_cap(),
        identity_cap=args.max_n,
    )
    if args.max_weight < 0:
        raise ValueError("--max-weight must be >= 0")
    names = [args.suite] if args.suite else list(SUITE_NAMES)
    results = []
    for name in names:
        if name == "identity":
            results.append(run_identity_suite(max_n=config.identity_cap))
        elif name == "syt":
            results.append(run_syt_suite(max_weight=args.max_weight, cap=config.brute_cap))
        elif name == "schur":
            results.append(run_schur_suite())
        elif name == "crossform":
            results.append(run_crossform_suite())
        elif name == "bounds":
            results.append(run_bounds_suite())
    ok = all(result.ok for result in results)
    if args.format == "json":
        doc = {
            "suites": [
                {
                    "suite": result.name,
                    "passed": result.passed,
                    "failed": result.failed,
                    "failures": list(result.failures),
                }
                for result in results
            ],
            "ok": ok,
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        rows = [
            {
                "suite": result.name,
                "passed": result.passed,
                "failed": result.failed,
                "failures": "; ".join(result.failures),
            }
            for result in results
        ]
        print(_csv_text(rows))
    else:
        for result in results:
            print(f"suite {result.name}: {result.passed} passed, {result.failed} failed")
            for failure in result.failures:
                print(f"  FAIL {failure}")
    return 0 if ok else 1


def cmd_conjecture(args) -> int:
    config = CliConfig(
        output_format=args.format,
        n_values=parse_range(args.n),
        d_values=parse_range(args.d),
    )
    report = conjecture_scan(config.n_values, config.d_values)
    rows = [row.to_dict() for row in report.rows]
    if args.format == "json":
        print(json.dumps({"rows": rows, "violations": len(report.violations)}, indent=2))
    elif args.format == "csv":
        print(_csv_text(rows))
    else:
        print(_table_text(rows))
        print(f"violations: {len(report.violations)}")
    return 0


def cmd_generic(args) -> int:
    text = Path(args.table).read_text(encoding="utf-8")
    table = SegreIntegralTable.from_json(text)
    report = degree_generic(table, args.m)
    print(_render_object(report.to_dict(), args.format))
    return 0


def cmd_syt(args) -> int:
    lam = parse_partition(args.shape)
    cap = effective_brute_cap()
    doc: dict = {
        "shape": list(lam),
        "weight": weight(lam),
        "hook": str(syt_count_hook(lam)),
    }
    if weight(lam) <= cap:
        doc["bruteforce"] = str(syt_count_bruteforce(lam, cap=cap))
    else:
        doc["bruteforce"] = None
        doc["note"] = (
            f"weight {weight(lam)} exceeds brute-force cap {cap}; "
            f"set {ENV_BRUTE_CAP} to raise it"
        )
    print(_render_object(doc, args.format))
    return 0


def cmd_grassmann(args) -> int:
    shape = GrassmannShape(args.d, args.r)
    doc = {
        "d": args.d,
        "r": args.r,
        "dim": grassmann_dim(shape),
        "degree": str(grassmann_degree(shape)),
    }
    print(_render_object(doc, args.format))
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussdeg",
        description="Exact degrees of tangent m-plane varieties of Veronese embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    degree = sub.add_parser("degree", help="degree and dimension at one (n, d, m)")
    degree.add_argument("--n", type=int, required=True, help="dimension of the source space")
    degree.add_argument("--d", type=int, required=True, help="degree of the embedding forms")
    degree.add_argument("--m", type=int, required=True, help="tangent plane dimension")
    degree.add_argument("--method", choices=METHOD_CHOICES, default="main")
    _add_format(degree)
    degree.set_defaults(func=cmd_degree)

    table = sub.add_parser("table", help="sweep all m for one variety")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--d", type=int, required=True)
    _add_format(table)
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run self-check suites")
    verify.add_argument("--suite", choices=SUITE_NAMES)
    verify.add_argument("--max-n", type=int, default=6, help="identity suite range")
    verify.add_argument("--max-weight", type=int, default=8, help="syt suite range")
    _add_format(verify)
    verify.set_defaults(func=cmd_verify)

    conjecture = sub.add_parser("conjecture", help="scan the conjectured power bound")
    conjecture.add_argument("--n", required=True, help="value or inclusive range, e.g. 1..3")
    conjecture.add_argument("--d", required=True, help="value or inclusive range, e.g. 2..4")
    _add_format(conjecture)
    conjecture.set_defaults(func=cmd_conjecture)

    generic = sub.add_parser("generic", help="degree from a Schur integral table file")
    generic.add_argument("--table", required=True, help="path to a table JSON file")
    generic.add_argument("--m", type=int, required=True)
    _add_format(generic)
    generic.set_defaults(func=cmd_generic)

    syt = sub.add_parser("syt", help="standard tableau count, both ways")
    syt.add_argument("--shape", required=True, help="comma-separated parts, e.g. 3,1")
    _add_format(syt)
    syt.set_defaults(func=cmd_syt)

    grassmann = sub.add_parser("grassmann", help="Grassmannian dimension and degree")
    grassmann.add_argument("--d", type=int, required=True, help="quotient rank")
    grassmann.add_argument("--r", type=int, required=True, help="ambient rank")
    _add_format(grassmann)
    grassmann.set_defaults(func=cmd_grassmann)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotGenericallyFiniteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
