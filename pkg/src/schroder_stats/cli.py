"""Command-line front end: triangle tables, series dumps, cross verification.

Output is deterministic: identical invocations produce byte-identical text.
Formats: plain (aligned triangle with row sums), csv (`n,k,value`), json,
and bfile (`index value` pairs, row-major, 1-based running index).
"""

from __future__ import annotations

import argparse
import json
import sys

from .oracle import ORACLE_CEILING, TABLE_SPECS, table_oracle
from .recurrences import triangle_by_recurrence
from .series import (
    FORMULA_IDS,
    MAX_ORDER,
    TruncatedSeries,
    formula_series,
    marker_at_one,
    series_triangle,
)
from .triangle import Triangle
from .verify import RECURRENCE_FOR_TABLE, SCOPES, SERIES_FOR_TABLE, run_scope

DEFAULT_N_MAX = {"oracle": 8, "recurrence": 20, "series": 12}

TABLE_FORMATS = ("plain", "csv", "json", "bfile")
SERIES_FORMATS = ("plain", "csv", "json")


def render_plain(tri: Triangle, title: str) -> str:
    cells = [(n, tri.row_min_k(n), tri.row_values(n)) for n in tri.ns()]
    ks = sorted({k for n in tri.ns() for k in tri.row_ks(n)})
    sums = tri.row_sums()
    width = max(
        [len(str(v)) for _, _, row in cells for v in row] + [len(str(k)) for k in ks] + [1]
    )
    corner = "n\\k"
    nwidth = max(len(corner), len(str(tri.n_max)))
    lines = [title]
    header = " ".join(str(k).rjust(width) for k in ks)
    lines.append(f"{corner.ljust(nwidth)}  {header} | sum")
    for (n, kmin, row), total in zip(cells, sums):
        padded = {k: "" for k in ks}
        for offset, value in enumerate(row):
            padded[kmin + offset] = str(value)
        body = " ".join(padded[k].rjust(width) for k in ks)
        lines.append(f"{str(n).ljust(nwidth)}  {body} | {total}")
    return "\n".join(lines) + "\n"


def render_csv(tri: Triangle) -> str:
    lines = ["n,k,value"]
    for n in tri.ns():
        for k in tri.row_ks(n):
            lines.append(f"{n},{k},{tri.value(n, k)}")
    return "\n".join(lines) + "\n"


def render_json(tri: Triangle, table_id: int) -> str:
    rows = []
    for n in tri.ns():
        rows.append(
            {
                "n": n,
                "k_min": tri.row_min_k(n),
                "entries": tri.row_values(n),
                "sum": tri.row_sum(n),
            }
        )
    return json.dumps({"table": table_id, "rows": rows}, indent=2) + "\n"


def render_bfile(tri: Triangle) -> str:
    lines = []
    index = 1
    for n in tri.ns():
        for k in tri.row_ks(n):
            lines.append(f"{index} {tri.value(n, k)}")
            index += 1
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    table_id = args.table
    method = args.method
    if method == "recurrence" and table_id not in RECURRENCE_FOR_TABLE:
        raise UsageError(f"table {table_id} has no recurrence; use oracle or series")
    n_max = args.n_max if args.n_max is not None else DEFAULT_N_MAX[method]
    if method == "oracle":
        if n_max > ORACLE_CEILING:
            raise UsageError(f"oracle tables are capped at n_max = {ORACLE_CEILING}")
        tri = table_oracle(table_id, n_max)
    elif method == "recurrence":
        tri = triangle_by_recurrence(RECURRENCE_FOR_TABLE[table_id], n_max)
    else:
        if n_max > MAX_ORDER:
            raise UsageError(f"series tables are capped at n_max = {MAX_ORDER}")
        n_min = TABLE_SPECS[table_id].n_min
        tri = series_triangle(formula_series(SERIES_FOR_TABLE[table_id], n_max), n_min)
    if args.format == "plain":
        text = render_plain(tri, f"table {table_id} ({method}, n <= {n_max})")
    elif args.format == "csv":
        text = render_csv(tri)
    elif args.format == "json":
        text = render_json(tri, table_id)
    else:
        text = render_bfile(tri)
    _emit(text, args.out)
    return 0


def _series_rows(series: TruncatedSeries) -> list[tuple[tuple[int, int, int], str]]:
    rows = []
    for exps in sorted(series.coeffs, key=lambda e: (sum(e), e)):
        c = series.coeffs[exps]
        rows.append((exps, str(c.numerator) if c.denominator == 1 else str(c)))
    return rows


def cmd_series(args) -> int:
    order = args.order
    if order > MAX_ORDER:
        raise UsageError(f"series order is capped at {MAX_ORDER}")
    series = formula_series(args.formula, order)
    if args.marker_one:
        series = marker_at_one(marker_at_one(series, 1), 2)
    # Only columns for variables the series can actually carry.
    active = [i for i in range(3) if i == 0 or series.bounds[i] > 0]
    if args.marker_one:
        active = [0]
    names = ["x", "u", "s"]
    rows = _series_rows(series)
    if args.format == "plain":
        lines = [" ".join(str(exps[i]) for i in active) + f" {value}" for exps, value in rows]
        text = "\n".join(lines) + "\n"
    elif args.format == "csv":
        header = ",".join(names[i] for i in active) + ",value"
        lines = [header]
        for exps, value in rows:
            lines.append(",".join(str(exps[i]) for i in active) + f",{value}")
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "formula": args.formula,
            "order": order,
            "coefficients": [
                {**{names[i]: exps[i] for i in active}, "value": value} for exps, value in rows
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.n_max > ORACLE_CEILING:
        raise UsageError(f"verification is capped at n_max = {ORACLE_CEILING}")
    results = run_scope(args.scope, n_max=args.n_max, order=args.order)
    failures = 0
    for result in results:
        mark = "ok  " if result.ok else "FAIL"
        line = f"{mark}  {result.name}"
        if result.detail and not result.ok:
            line += f" ({result.detail})"
        print(line)
        failures += 0 if result.ok else 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schroder-stats",
        description="Positional-statistic triangles for Schroder-class permutation families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print one of the six built-in triangles")
    p_table.add_argument("--table", type=int, required=True, choices=range(1, 7))
    p_table.add_argument("--method", choices=("oracle", "recurrence", "series"), default="oracle")
    p_table.add_argument("--n-max", type=int, default=None)
    p_table.add_argument("--format", choices=TABLE_FORMATS, default="plain")
    p_table.add_argument("--out", default=None, help="write to a file instead of stdout")
    p_table.set_defaults(fn=cmd_table)

    p_series = sub.add_parser("series", help="dump the coefficients of a generating function")
    p_series.add_argument("--formula", required=True, choices=FORMULA_IDS)
    p_series.add_argument("--order", type=int, default=12)
    p_series.add_argument(
        "--marker-one", action="store_true", help="substitute 1 for every marker variable"
    )
    p_series.add_argument("--format", choices=SERIES_FORMATS, default="plain")
    p_series.add_argument("--out", default=None)
    p_series.set_defaults(fn=cmd_series)

    p_verify = sub.add_parser("verify", help="cross-check oracle, recurrences, and series")
    p_verify.add_argument("scope", choices=SCOPES)
    p_verify.add_argument("--n-max", type=int, default=7)
    p_verify.add_argument("--order", type=int, default=12)
    p_verify.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
