"""Exact big-integer recurrences for the triangles, far beyond oracle range.

Each recurrence id binds one set of initial conditions and one fill rule:

P31        skew-indecomposable {1324,1423} avoiders by position of the minimum
P41        {1423,2413} avoiders with min before max, by position of the maximum
P51        {1324,2134} avoiders by last entry
T_LEMMAS   {1243,1324} avoiders with min adjacent left of max, by first entry
P53_REC    {1243,1324} avoiders with min before max, by min-to-max distance
P53_CLOSED the same triangle filled from its closed binomial form

Python integers are arbitrary precision, so no fill overflows at any size.
"""

from __future__ import annotations

from math import comb

from .triangle import Triangle

RECURRENCE_IDS = ("P31", "P41", "P51", "T_LEMMAS", "P53_REC", "P53_CLOSED")

Cells = dict[tuple[int, int], int]


def _fill_p31(n_max: int) -> Cells:
    # a(n,l) = 2 a(n-1,l) + sum_{j<l} a(n-1,j) for 1 <= l <= n-1, n >= 3,
    # with a(1,1) = a(2,1) = 1. The cell (n-1, n-1) is empty for n >= 3.
    t: Cells = {(1, 1): 1}
    if n_max >= 2:
        t[(2, 1)] = 1
    for n in range(3, n_max + 1):
        acc = 0
        for l in range(1, n):
            t[(n, l)] = 2 * t.get((n - 1, l), 0) + acc
            acc += t.get((n - 1, l), 0)
    return t


def _fill_p41(n_max: int) -> Cells:
    # a(n,2) = 1; a(n,n) = a(n,n-1) + a(n-1,n-1) for n >= 3;
    # a(n,k) = a(n,k-1) + a(n-1,k) + a(n-1,k-1) for 3 <= k < n.
    t: Cells = {}
    for n in range(2, n_max + 1):
        t[(n, 2)] = 1
        for k in range(3, n):
            t[(n, k)] = t[(n, k - 1)] + t[(n - 1, k)] + t[(n - 1, k - 1)]
        if n >= 3:
            t[(n, n)] = t[(n, n - 1)] + t[(n - 1, n - 1)]
    return t


def _fill_p51(n_max: int) -> Cells:
    # s(n,1) = s(n,2) = s(n,3) = previous row sum for n >= 3;
    # s(n,l) = 2 s(n-1,l-1) + sum_{m>=l} s(n-1,m) for 4 <= l <= n.
    t: Cells = {(1, 1): 1}
    if n_max >= 2:
        t[(2, 1)] = t[(2, 2)] = 1
    for n in range(3, n_max + 1):
        prev_sum = sum(t[(n - 1, m)] for m in range(1, n))
        for l in range(1, min(3, n) + 1):
            t[(n, l)] = prev_sum
        for l in range(4, n + 1):
            t[(n, l)] = 2 * t[(n - 1, l - 1)] + sum(t[(n - 1, m)] for m in range(l, n))
    return t


def _fill_tlemmas(n_max: int) -> Cells:
    # t(n,1) = t(n,2) = 2^(n-3) and t(n,n-2) = t(n,n-1) = previous row sum
    # for n >= 3; interior cells satisfy t(n,l) = t(n,l-1) + t(n-1,l).
    # The low-l rule takes precedence where the rules overlap at small n;
    # the overlap at l = n-2 is consistent either way (checked in tests).
    t: Cells = {(2, 1): 1}
    for n in range(3, n_max + 1):
        prev_sum = sum(t[(n - 1, l)] for l in range(1, n - 1))
        for l in range(1, n):
            if l <= 2:
                t[(n, l)] = 2 ** (n - 3)
            elif l >= n - 2:
                t[(n, l)] = prev_sum
            else:
                t[(n, l)] = t[(n, l - 1)] + t[(n - 1, l)]
    return t


def _fill_p53_rec(n_max: int) -> Cells:
    # a(n,n-1) = 1, a(n,1) = C(2n-4, n-2), and the interior recurrence
    # a(n,k) = a(n,k+1) + a(n-1,k-1) filled with k decreasing.
    t: Cells = {}
    for n in range(2, n_max + 1):
        t[(n, n - 1)] = 1
        for k in range(n - 2, 1, -1):
            t[(n, k)] = t[(n, k + 1)] + t[(n - 1, k - 1)]
        if n >= 3:
            t[(n, 1)] = comb(2 * n - 4, n - 2)
    return t


def closed_form_dist(n: int, k: int) -> int:
    """Closed form C(2n-k-3, n-2) for the min-to-max distance triangle."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= k <= n-1, got (n, k) = ({n}, {k})")
    return comb(2 * n - k - 3, n - 2)


def _fill_p53_closed(n_max: int) -> Cells:
    return {
        (n, k): closed_form_dist(n, k)
        for n in range(2, n_max + 1)
        for k in range(1, n)
    }


_FILLS = {
    "P31": (_fill_p31, 1),
    "P41": (_fill_p41, 2),
    "P51": (_fill_p51, 1),
    "T_LEMMAS": (_fill_tlemmas, 2),
    "P53_REC": (_fill_p53_rec, 2),
    "P53_CLOSED": (_fill_p53_closed, 2),
}


def triangle_by_recurrence(which: str, n_max: int) -> Triangle:
    """Fill one of the recurrence-defined triangles up to size n_max."""
    if which not in _FILLS:
        raise ValueError(f"unknown recurrence id {which!r}; expected one of {RECURRENCE_IDS}")
    fill, n_min = _FILLS[which]
    if n_max < n_min:
        raise ValueError(f"{which} needs n_max >= {n_min}")
    return Triangle(fill(n_max), n_min, n_max)


def row_sums(t: Triangle) -> list[int]:
    """Per-size row sums of a triangle, in increasing size order."""
    return t.row_sums()
