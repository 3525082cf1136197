"""Exact enumeration toolkit for positional statistics of pattern-avoiding
permutation classes counted by the large Schroder numbers.

The package cross-checks three independent computation routes against each
other: a brute-force oracle (`oracle`), exact big-integer recurrences
(`recurrences`), and truncated formal power series over the rationals
(`series`). The `bijections` module makes the constructions behind the
recurrences executable and verifies them exhaustively at small sizes.
"""

from .perm_core import (
    Perm,
    apply_symmetry,
    avoids_all,
    contains_pattern,
    delete_position,
    direct_sum,
    insert_value,
    is_skew_indecomposable,
    is_sum_indecomposable,
    parse_perm,
    reduction,
    skew_sum,
    sum_components,
)
from .triangle import Triangle, first_difference
from .oracle import (
    ClassSpec,
    StatisticSpec,
    class_members,
    enumerate_avoiders,
    table_oracle,
    triangle_from_oracle,
)
from .recurrences import closed_form_dist, row_sums, triangle_by_recurrence
from .series import (
    TruncatedSeries,
    check_identity,
    coefficient,
    formula_series,
    marker_at_one,
    scale_argument,
    series_triangle,
    sqrt,
)
from .bijections import BijectionReport, verify_partition

__all__ = [
    "Perm",
    "apply_symmetry",
    "avoids_all",
    "contains_pattern",
    "delete_position",
    "direct_sum",
    "insert_value",
    "is_skew_indecomposable",
    "is_sum_indecomposable",
    "parse_perm",
    "reduction",
    "skew_sum",
    "sum_components",
    "Triangle",
    "first_difference",
    "ClassSpec",
    "StatisticSpec",
    "class_members",
    "enumerate_avoiders",
    "table_oracle",
    "triangle_from_oracle",
    "closed_form_dist",
    "row_sums",
    "triangle_by_recurrence",
    "TruncatedSeries",
    "check_identity",
    "coefficient",
    "formula_series",
    "marker_at_one",
    "scale_argument",
    "series_triangle",
    "sqrt",
    "BijectionReport",
    "verify_partition",
]
