import math

import pytest

from goldens import C_96_48, golden_triangle
from schroder_stats.oracle import DIST_1243_1324, table_oracle, triangle_from_oracle
from schroder_stats.recurrences import (
    RECURRENCE_IDS,
    closed_form_dist,
    row_sums,
    triangle_by_recurrence,
)
from schroder_stats.triangle import Triangle, first_difference

TABLE_FOR = {"P31": 3, "P41": 4, "P51": 5, "T_LEMMAS": 6}


def test_spot_rows_from_examples():
    assert triangle_by_recurrence("P31", 5).row_values(5) == [8, 12, 14, 11]
    assert triangle_by_recurrence("P41", 8).row_values(8) == [1, 12, 70, 264, 714, 1412, 1806]
    assert triangle_by_recurrence("P51", 7).row_values(7) == [394, 394, 394, 304, 192, 96, 32]
    assert triangle_by_recurrence("T_LEMMAS", 8).row_values(8) == [32, 32, 62, 112, 182, 252, 252]


@pytest.mark.parametrize("which,table_id", sorted(TABLE_FOR.items()))
def test_recurrences_reproduce_golden_tables(which, table_id):
    golden = golden_triangle(table_id)
    tri = triangle_by_recurrence(which, golden.n_max)
    assert first_difference(tri, golden) is None


@pytest.mark.parametrize("which,table_id", sorted(TABLE_FOR.items()))
def test_recurrences_match_oracle_to_8(which, table_id):
    rec = triangle_by_recurrence(which, 8)
    assert first_difference(rec, table_oracle(table_id, 8)) is None


@pytest.mark.parametrize("which", ["P53_REC", "P53_CLOSED"])
def test_distance_recurrences_match_oracle_to_8(which):
    cls, stat, n_min = DIST_1243_1324
    orc = triangle_from_oracle(8, cls, stat, n_min=n_min)
    assert first_difference(triangle_by_recurrence(which, 8), orc) is None


def test_closed_form_equals_recurrence_to_30():
    rec = triangle_by_recurrence("P53_REC", 30)
    closed = triangle_by_recurrence("P53_CLOSED", 30)
    assert first_difference(rec, closed) is None


def test_closed_form_values():
    assert closed_form_dist(2, 1) == 1
    assert closed_form_dist(8, 1) == 924 == math.comb(12, 6)
    assert sum(closed_form_dist(5, k) for k in range(1, 5)) == 35
    for n in range(2, 20):
        assert sum(closed_form_dist(n, k) for k in range(1, n)) == math.comb(2 * n - 3, n - 1)
    with pytest.raises(ValueError):
        closed_form_dist(1, 1)
    with pytest.raises(ValueError):
        closed_form_dist(5, 5)


def test_unknown_id_rejected():
    with pytest.raises(ValueError):
        triangle_by_recurrence("P99", 5)
    with pytest.raises(ValueError):
        triangle_by_recurrence("P41", 1)


def test_first_entry_triangle_boundary_consistency():
    # The overlap cell k = n-2 is pinned by the boundary rule; the interior
    # rule must agree with it.
    tri = triangle_by_recurrence("T_LEMMAS", 30)
    for n in range(5, 31):
        assert tri.value(n, n - 2) == tri.value(n, n - 3) + tri.value(n - 1, n - 2)


def test_min_position_triangle_boundaries():
    tri = triangle_by_recurrence("P31", 30)
    for n in range(2, 31):
        assert tri.value(n, n) == 0
        assert tri.value(n, n - 1) == tri.row_sum(n - 1)


def test_row_sums_strictly_increase():
    for which in RECURRENCE_IDS:
        tri = triangle_by_recurrence(which, 20)
        sums = [tri.row_sum(n) for n in range(2, 21)]
        assert all(a < b for a, b in zip(sums, sums[1:])), which


def test_row_sums_helper():
    tri = triangle_by_recurrence("P41", 8)
    assert row_sums(tri) == [1, 3, 11, 45, 197, 903, 4279]
    tri5 = triangle_by_recurrence("P51", 7)
    assert row_sums(tri5) == [1, 2, 6, 22, 90, 394, 1806]
    assert row_sums(Triangle({}, 1, 0)) == []


def test_big_integer_extension_to_50():
    rec = triangle_by_recurrence("P53_REC", 50)
    closed = triangle_by_recurrence("P53_CLOSED", 50)
    assert first_difference(rec, closed) is None
    assert closed.value(50, 1) == C_96_48
    assert closed_form_dist(50, 1) == math.comb(96, 48) == C_96_48
    assert rec.value(50, 1) > 2**63  # genuinely beyond 64-bit range
