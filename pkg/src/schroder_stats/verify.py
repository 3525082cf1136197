"""Cross-checks tying the oracle, the recurrences, and the series together.

Every check compares two independent computation routes and reports the
first differing cell or exponent on failure. The CLI `verify` command is a
thin shell around :func:`run_scope`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import series as fps
from .bijections import CONSTRUCTIONS, verify_partition
from .oracle import DIST_1243_1324, TABLE_SPECS, triangle_from_oracle
from .recurrences import triangle_by_recurrence
from .series import (
    check_identity,
    formula_series,
    from_terms,
    marker_at_one,
    scale_argument,
    series_triangle,
)
from .triangle import first_difference

SERIES_FOR_TABLE = {
    1: "G_SEP_POS1",
    2: "F_SEP_DIST",
    3: "G_P31",
    4: "G_COR42",
    5: "H_P51",
    6: "G_CB",
}

RECURRENCE_FOR_TABLE = {3: "P31", 4: "P41", 5: "P51", 6: "T_LEMMAS"}

SCOPES = ("all", "identities", "bijections", "1", "2", "3", "4", "5", "6")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _fmt_diff(diff) -> str:
    if diff is None:
        return ""
    n, k, va, vb = diff
    return f"first difference at n={n}, k={k}: {va} != {vb}"


def table_checks(table_id: int, n_max: int = 7, order: int = 12) -> list[CheckResult]:
    """oracle == series (and == recurrence where one exists) for one table."""
    if table_id not in TABLE_SPECS:
        raise ValueError(f"table id must be 1..6, got {table_id}")
    cls, stat, n_min = TABLE_SPECS[table_id]
    results = []
    oracle_tri = triangle_from_oracle(n_max, cls, stat, n_min=n_min)
    series_tri = series_triangle(formula_series(SERIES_FOR_TABLE[table_id], order), n_min)
    diff = first_difference(oracle_tri, series_tri, n_max=n_max)
    results.append(
        CheckResult(
            f"table {table_id}: oracle == series (n <= {n_max})", diff is None, _fmt_diff(diff)
        )
    )
    if table_id in RECURRENCE_FOR_TABLE:
        rec_id = RECURRENCE_FOR_TABLE[table_id]
        rec_small = triangle_by_recurrence(rec_id, n_max)
        diff = first_difference(oracle_tri, rec_small, n_max=n_max)
        results.append(
            CheckResult(
                f"table {table_id}: oracle == recurrence (n <= {n_max})",
                diff is None,
                _fmt_diff(diff),
            )
        )
        rec_big = triangle_by_recurrence(rec_id, order)
        diff = first_difference(rec_big, series_tri, n_max=order)
        results.append(
            CheckResult(
                f"table {table_id}: recurrence == series (n <= {order})",
                diff is None,
                _fmt_diff(diff),
            )
        )
    return results


def distance_triangle_checks(n_max: int = 7, order: int = 12) -> list[CheckResult]:
    """The min-to-max distance triangle: closed form vs recurrence vs oracle."""
    cls, stat, n_min = DIST_1243_1324
    results = []
    rec = triangle_by_recurrence("P53_REC", max(order, n_max))
    closed = triangle_by_recurrence("P53_CLOSED", max(order, n_max))
    diff = first_difference(rec, closed)
    results.append(
        CheckResult(
            f"distance triangle: recurrence == closed form (n <= {max(order, n_max)})",
            diff is None,
            _fmt_diff(diff),
        )
    )
    oracle_tri = triangle_from_oracle(n_max, cls, stat, n_min=n_min)
    diff = first_difference(oracle_tri, rec, n_max=n_max)
    results.append(
        CheckResult(
            f"distance triangle: oracle == recurrence (n <= {n_max})",
            diff is None,
            _fmt_diff(diff),
        )
    )
    return results


def identity_checks(order: int = 12) -> list[CheckResult]:
    """The functional-equation identities, checked exactly to the given order."""
    results = []

    def record(name: str, lhs, rhs):
        outcome = check_identity(lhs, rhs)
        detail = "" if outcome.equal else f"first mismatch at exponent {outcome.mismatch}"
        results.append(CheckResult(name, outcome.equal, detail))

    b1 = (order, 0, 0)
    big = formula_series("S", order)
    record(
        f"S^2 - (3 - x) S + 2 = 0 (order {order})",
        big * big - from_terms({0: 3, 1: -1}, b1) * big + 2,
        fps.constant(0, b1),
    )

    pos1 = formula_series("G_SEP_POS1", order)
    record(f"position-of-min series at u = 1 equals S - 1 (order {order})",
           marker_at_one(pos1), big - 1)

    b2 = (order, order, 0)
    g31 = formula_series("G_P31", order)
    little = marker_at_one(g31)
    record(
        f"(u - 1 - ux + 2x) g = ux(1 - x)(u - 1) + ux g(ux, 1) (order {order})",
        from_terms({(0, 1, 0): 1, (0, 0, 0): -1, (1, 1, 0): -1, (1, 0, 0): 2}, b2) * g31,
        from_terms({(1, 1, 0): 1}, b2)
        * from_terms({0: 1, 1: -1}, b2)
        * from_terms({(0, 1, 0): 1, (0, 0, 0): -1}, b2)
        + from_terms({(1, 1, 0): 1}, b2) * scale_argument(little, 1),
    )
    record(f"little Schroder series equals the u = 1 slice (order {order})",
           little, formula_series("LITTLE", order))

    h = formula_series("H_P51", order)
    h1 = marker_at_one(h)
    record(
        f"(1 - u(1 + x) + 2u^2 x) h = ux(1 - u)(1 - ux) + ux(1 - u(1 - u)x) h(x, 1) "
        f"(order {order})",
        from_terms({(0, 0, 0): 1, (0, 1, 0): -1, (1, 1, 0): -1, (1, 2, 0): 2}, b2) * h,
        from_terms({(1, 1, 0): 1}, b2)
        * from_terms({(0, 0, 0): 1, (0, 1, 0): -1}, b2)
        * from_terms({(0, 0, 0): 1, (1, 1, 0): -1}, b2)
        + from_terms({(1, 1, 0): 1}, b2)
        * from_terms({(0, 0, 0): 1, (1, 1, 0): -1, (1, 2, 0): 1}, b2)
        * h1,
    )

    cb = formula_series("G_CB", order)
    cb1 = marker_at_one(cb)
    one_minus_x = from_terms({0: 1, 1: -1}, b2)
    record(
        f"(1 - u - x) g = u(1 - u)x^2(1 - x)^2/(1 - 2x) - ux g(ux, 1) (order {order})",
        from_terms({(0, 0, 0): 1, (0, 1, 0): -1, (1, 0, 0): -1}, b2) * cb,
        from_terms({(0, 1, 0): 1, (0, 2, 0): -1}, b2)
        * from_terms({2: 1}, b2)
        * one_minus_x
        * one_minus_x
        / from_terms({0: 1, 1: -2}, b2)
        - from_terms({(1, 1, 0): 1}, b2) * scale_argument(cb1, 1),
    )
    return results


def bijection_checks(n_max: int = 7) -> list[CheckResult]:
    results = []
    for construction in CONSTRUCTIONS:
        for n in range(3, n_max + 1):
            report = verify_partition(n, construction)
            detail = "; ".join(report.witnesses)
            results.append(
                CheckResult(f"{construction}: partition check at n = {n}", report.passed, detail)
            )
    return results


def run_scope(scope: str, n_max: int = 7, order: int = 12) -> list[CheckResult]:
    """Run one verification scope and return its per-check results."""
    if scope == "identities":
        return identity_checks(order)
    if scope == "bijections":
        return bijection_checks(n_max)
    if scope == "all":
        results = []
        for table_id in range(1, 7):
            results.extend(table_checks(table_id, n_max=n_max, order=order))
        results.extend(distance_triangle_checks(n_max=n_max, order=order))
        results.extend(identity_checks(order))
        results.extend(bijection_checks(n_max))
        return results
    if scope in {"1", "2", "3", "4", "5", "6"}:
        return table_checks(int(scope), n_max=n_max, order=order)
    raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")
