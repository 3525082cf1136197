"""Brute-force enumeration of pattern-avoidance classes and their statistics.

This module is the trust anchor for the whole package: it generates all n!
permutations, filters by pattern avoidance, and tabulates positional
statistics by direct counting. Correctness is preferred over speed, which is
why enumeration stays exhaustive; results are cached per (size, pattern set).

Enumeration can optionally be split across processes by setting the
environment variable named in :data:`JOBS_ENV` to an integer above 1. Chunks
are the lexicographic blocks sharing a first entry, so the merged result is
identical to the serial one.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .perm_core import (
    Perm,
    avoids_all,
    check_perm,
    is_skew_indecomposable,
    position_of,
)
from .triangle import Triangle

# The five size-4 pattern pairs whose avoidance classes are studied here.
SEPARABLE_PAIR = ((2, 4, 1, 3), (3, 1, 4, 2))
PAIR_1324_1423 = ((1, 3, 2, 4), (1, 4, 2, 3))
PAIR_1423_2413 = ((1, 4, 2, 3), (2, 4, 1, 3))
PAIR_1324_2134 = ((1, 3, 2, 4), (2, 1, 3, 4))
PAIR_1243_1324 = ((1, 2, 4, 3), (1, 3, 2, 4))

FILTERS = ("none", "skew_indecomposable", "one_before_n", "one_adjacent_left_of_n")

STAT_KINDS = (
    "position_of_1",
    "position_of_n",
    "distance_1_to_n",
    "distance_a_to_n",
    "last_entry",
    "first_entry",
)

# Exhaustive enumeration beyond this size is refused rather than attempted.
ORACLE_CEILING = 10

JOBS_ENV = "SCHRODER_STATS_JOBS"


@dataclass(frozen=True)
class ClassSpec:
    """A pattern-avoidance class, optionally restricted by a membership filter."""

    patterns: tuple[Perm, ...]
    filter: str = "none"

    def __post_init__(self):
        pats = tuple(sorted({check_perm(p) for p in self.patterns}))
        if not pats or any(len(p) == 0 for p in pats):
            raise ValueError("at least one nonempty pattern is required")
        object.__setattr__(self, "patterns", pats)
        if self.filter not in FILTERS:
            raise ValueError(f"unknown filter {self.filter!r}; expected one of {FILTERS}")


@dataclass(frozen=True)
class StatisticSpec:
    """A positional statistic; ``a`` is only meaningful for distance_a_to_n."""

    kind: str
    a: int | None = None

    def __post_init__(self):
        if self.kind not in STAT_KINDS:
            raise ValueError(f"unknown statistic {self.kind!r}; expected one of {STAT_KINDS}")
        if self.kind == "distance_a_to_n" and (self.a is None or self.a < 1):
            raise ValueError("distance_a_to_n needs a reference value a >= 1")


class TableSpec(NamedTuple):
    cls: ClassSpec
    stat: StatisticSpec
    n_min: int


def _configured_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(int(raw), 1)
    except ValueError:
        return 1


def _chunk_avoiders(args: tuple[int, tuple[Perm, ...], int]) -> list[Perm]:
    # One lexicographic block: all permutations starting with a fixed value.
    n, patterns, first = args
    rest = [v for v in range(1, n + 1) if v != first]
    return [
        (first,) + tail
        for tail in itertools.permutations(rest)
        if avoids_all((first,) + tail, patterns)
    ]


@lru_cache(maxsize=None)
def _avoiders_cached(n: int, patterns: tuple[Perm, ...]) -> tuple[Perm, ...]:
    if n == 0:
        return ((),)
    jobs = _configured_jobs()
    if jobs > 1 and n >= 7:
        tasks = [(n, patterns, first) for first in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=min(jobs, n)) as pool:
            chunks = list(pool.map(_chunk_avoiders, tasks))
        return tuple(p for chunk in chunks for p in chunk)
    return tuple(
        p for p in itertools.permutations(range(1, n + 1)) if avoids_all(p, patterns)
    )


def enumerate_avoiders(n: int, patterns: Iterable[Perm]) -> tuple[Perm, ...]:
    """All permutations of size n avoiding every pattern, in lexicographic order.

    Size 0 yields the empty permutation, which avoids everything.
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n > ORACLE_CEILING:
        raise ValueError(f"exhaustive enumeration is capped at size {ORACLE_CEILING}")
    pats = tuple(sorted({check_perm(p) for p in patterns}))
    if not pats:
        raise ValueError("at least one pattern is required")
    return _avoiders_cached(n, pats)


def clear_caches() -> None:
    _avoiders_cached.cache_clear()


def passes_filter(sigma: Perm, filter: str) -> bool:
    if filter == "none":
        return True
    n = len(sigma)
    if n == 0:
        return False
    if filter == "skew_indecomposable":
        return is_skew_indecomposable(sigma)
    if filter == "one_before_n":
        return position_of(sigma, 1) < position_of(sigma, n)
    if filter == "one_adjacent_left_of_n":
        return position_of(sigma, n) - position_of(sigma, 1) == 1
    raise ValueError(f"unknown filter {filter!r}")


def class_members(n: int, cls: ClassSpec) -> tuple[Perm, ...]:
    """Class members of size n, lexicographically ordered."""
    return tuple(
        sigma for sigma in enumerate_avoiders(n, cls.patterns) if passes_filter(sigma, cls.filter)
    )


def statistic_value(sigma: Perm, stat: StatisticSpec) -> int | None:
    """Evaluate a positional statistic; None when it is undefined on sigma.

    The distance statistics are only defined when the reference entry sits
    strictly left of the maximum.
    """
    n = len(sigma)
    if n == 0:
        return None
    kind = stat.kind
    if kind == "position_of_1":
        return position_of(sigma, 1)
    if kind == "position_of_n":
        return position_of(sigma, n)
    if kind == "last_entry":
        return sigma[-1]
    if kind == "first_entry":
        return sigma[0]
    if kind == "distance_1_to_n":
        d = position_of(sigma, n) - position_of(sigma, 1)
        return d if d > 0 else None
    if kind == "distance_a_to_n":
        if stat.a is None or stat.a > n:
            return None
        d = position_of(sigma, n) - position_of(sigma, stat.a)
        return d if d > 0 else None
    raise ValueError(f"unknown statistic {kind!r}")


def triangle_from_oracle(
    n_max: int, cls: ClassSpec, stat: StatisticSpec, n_min: int = 1
) -> Triangle:
    """Count class members of each size by statistic value.

    Members on which the statistic is undefined are not counted.
    """
    if n_max < n_min:
        raise ValueError("n_max must be at least n_min")
    entries: dict[tuple[int, int], int] = {}
    for n in range(n_min, n_max + 1):
        for sigma in class_members(n, cls):
            k = statistic_value(sigma, stat)
            if k is None:
                continue
            entries[(n, k)] = entries.get((n, k), 0) + 1
    return Triangle(entries, n_min, n_max)


# The six built-in triangles. Triangle 2 counts by the distance between the
# minimum and the maximum, with the distance convention k >= 1 (the size-2
# class member 12 sits at k = 1).
TABLE_SPECS: dict[int, TableSpec] = {
    1: TableSpec(ClassSpec(SEPARABLE_PAIR), StatisticSpec("position_of_1"), 1),
    2: TableSpec(ClassSpec(SEPARABLE_PAIR, "one_before_n"), StatisticSpec("distance_1_to_n"), 2),
    3: TableSpec(
        ClassSpec(PAIR_1324_1423, "skew_indecomposable"), StatisticSpec("position_of_1"), 1
    ),
    4: TableSpec(ClassSpec(PAIR_1423_2413, "one_before_n"), StatisticSpec("position_of_n"), 2),
    5: TableSpec(ClassSpec(PAIR_1324_2134), StatisticSpec("last_entry"), 1),
    6: TableSpec(
        ClassSpec(PAIR_1243_1324, "one_adjacent_left_of_n"), StatisticSpec("first_entry"), 2
    ),
}

# Companion triangle for the distance recurrences on the {1243,1324} class;
# not one of the six printed tables but cross-checked the same way.
DIST_1243_1324 = TableSpec(
    ClassSpec(PAIR_1243_1324, "one_before_n"), StatisticSpec("distance_1_to_n"), 2
)


def table_oracle(table_id: int, n_max: int) -> Triangle:
    """Oracle triangle for one of the six built-in tables."""
    if table_id not in TABLE_SPECS:
        raise ValueError(f"table id must be 1..6, got {table_id}")
    cls, stat, n_min = TABLE_SPECS[table_id]
    return triangle_from_oracle(n_max, cls, stat, n_min=n_min)
