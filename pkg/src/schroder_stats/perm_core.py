"""Permutations in one-line notation and their structural operations.

A permutation of size n is a tuple holding the values 1..n; positions are
1-based everywhere. The empty tuple is allowed and acts as the identity for
both direct and skew sums. All functions are pure and all inputs are left
untouched, so values can be shared freely between threads or processes.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

Perm = tuple[int, ...]

SYMMETRIES = ("reverse", "complement", "inverse", "reverse_complement")


def check_perm(values: Iterable[int]) -> Perm:
    """Validate one-line notation and return it as a tuple.

    >>> check_perm([2, 4, 1, 3])
    (2, 4, 1, 3)
    """
    word = tuple(values)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word!r}")
    return word


def parse_perm(text: str) -> Perm:
    """Parse one-line notation, either compact digits or space separated.

    >>> parse_perm("2413")
    (2, 4, 1, 3)
    >>> parse_perm("10 2 1 9 3 4 5 6 7 8")[0]
    10
    """
    parts = text.split()
    if len(parts) > 1:
        return check_perm(int(p) for p in parts)
    return check_perm(int(c) for c in text.strip())


def to_text(sigma: Perm) -> str:
    """One-line notation as a string, compact when every value is a digit."""
    if any(v > 9 for v in sigma):
        return " ".join(str(v) for v in sigma)
    return "".join(str(v) for v in sigma)


def value_at(sigma: Perm, position: int) -> int:
    return sigma[position - 1]


def position_of(sigma: Perm, value: int) -> int:
    """1-based position of a value; inverse of :func:`value_at`."""
    return sigma.index(value) + 1


def reduction(word: Sequence[int]) -> Perm:
    """Rank-normalize a word of distinct values to a permutation.

    >>> reduction((4, 9, 2))
    (2, 3, 1)
    """
    ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
    if len(ranks) != len(word):
        raise ValueError(f"values must be distinct: {tuple(word)!r}")
    return tuple(ranks[v] for v in word)


def contains_pattern(sigma: Perm, pattern: Perm) -> bool:
    """True iff some subsequence of sigma is order-isomorphic to pattern.

    The empty pattern is contained in everything by convention.

    >>> contains_pattern((2, 4, 1, 3), (2, 4, 1, 3))
    True
    >>> contains_pattern((1, 2, 3, 4), (2, 4, 1, 3))
    False
    """
    m = len(pattern)
    if m == 0:
        return True
    if m > len(sigma):
        return False
    if m == 4:
        return _contains_len4(sigma, pattern)
    return any(reduction(sub) == pattern for sub in combinations(sigma, m))


def _contains_len4(sigma: Perm, pattern: Perm) -> bool:
    # Nested scan specialized to length-4 patterns; the pairwise order checks
    # prune most branches long before the innermost loop.
    n = len(sigma)
    p0, p1, p2, p3 = pattern
    c01, c02, c03 = p0 < p1, p0 < p2, p0 < p3
    c12, c13, c23 = p1 < p2, p1 < p3, p2 < p3
    for i in range(n - 3):
        a = sigma[i]
        for j in range(i + 1, n - 2):
            b = sigma[j]
            if (a < b) != c01:
                continue
            for k in range(j + 1, n - 1):
                c = sigma[k]
                if (a < c) != c02 or (b < c) != c12:
                    continue
                for l in range(k + 1, n):
                    d = sigma[l]
                    if (a < d) == c03 and (b < d) == c13 and (c < d) == c23:
                        return True
    return False


def avoids_all(sigma: Perm, patterns: Iterable[Perm]) -> bool:
    return not any(contains_pattern(sigma, p) for p in patterns)


def reverse(sigma: Perm) -> Perm:
    """
    >>> reverse((1, 3, 2))
    (2, 3, 1)
    """
    return sigma[::-1]


def complement(sigma: Perm) -> Perm:
    n = len(sigma)
    return tuple(n + 1 - v for v in sigma)


def inverse(sigma: Perm) -> Perm:
    """
    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    inv = [0] * len(sigma)
    for pos, v in enumerate(sigma, start=1):
        inv[v - 1] = pos
    return tuple(inv)


def reverse_complement(sigma: Perm) -> Perm:
    return complement(reverse(sigma))


def apply_symmetry(sigma: Perm, which: str) -> Perm:
    """Apply one of the four classical symmetries by name."""
    try:
        fn = _SYMMETRY_FNS[which]
    except KeyError:
        raise ValueError(f"unknown symmetry {which!r}; expected one of {SYMMETRIES}") from None
    return fn(sigma)


_SYMMETRY_FNS = {
    "reverse": reverse,
    "complement": complement,
    "inverse": inverse,
    "reverse_complement": reverse_complement,
}


def direct_sum(pi: Perm, tau: Perm) -> Perm:
    """Concatenate with tau's values shifted above pi's.

    >>> direct_sum((1,), (1,))
    (1, 2)
    """
    shift = len(pi)
    return pi + tuple(v + shift for v in tau)


def skew_sum(pi: Perm, tau: Perm) -> Perm:
    """Concatenate with pi's values shifted above tau's.

    >>> skew_sum((1, 2), (1,))
    (2, 3, 1)
    """
    shift = len(tau)
    return tuple(v + shift for v in pi) + tau


def sum_components(sigma: Perm) -> list[Perm]:
    """Finest decomposition of sigma as a direct sum of indecomposables.

    Folding the output with :func:`direct_sum` reproduces the input.

    >>> sum_components((2, 1, 4, 3, 5))
    [(2, 1), (2, 1), (1,)]
    >>> sum_components((2, 4, 1, 3))
    [(2, 4, 1, 3)]
    """
    if not sigma:
        raise ValueError("empty permutation has no component decomposition")
    parts: list[Perm] = []
    start = 0
    top = 0
    for i, v in enumerate(sigma, start=1):
        top = max(top, v)
        if top == i:
            parts.append(tuple(w - start for w in sigma[start:i]))
            start = i
    return parts


def is_sum_indecomposable(sigma: Perm) -> bool:
    """True iff no split sigma = pi (+) tau with both parts nonempty exists."""
    if not sigma:
        raise ValueError("size-0 permutation is neither decomposable nor not")
    top = 0
    for i, v in enumerate(sigma[:-1], start=1):
        top = max(top, v)
        if top == i:
            return False
    return True


def is_skew_indecomposable(sigma: Perm) -> bool:
    """True iff no split sigma = pi (-) tau with both parts nonempty exists.

    >>> is_skew_indecomposable((1,))
    True
    >>> is_skew_indecomposable((2, 3, 1))
    False
    """
    if not sigma:
        raise ValueError("size-0 permutation is neither decomposable nor not")
    n = len(sigma)
    low = n + 1
    for i, v in enumerate(sigma[:-1], start=1):
        low = min(low, v)
        if low == n - i + 1:
            return False
    return True


def insert_value(pi: Perm, k: int, j: int) -> Perm:
    """Insert value k at position j.

    Entries of pi that are >= k are bumped up by one, entries at positions
    >= j move one step right, and k lands at position j. Inverted by
    :func:`delete_position` at position j.

    >>> insert_value((2, 5, 1, 4, 3), 2, 4)
    (3, 6, 1, 2, 5, 4)
    >>> insert_value((2, 5, 1, 4, 3), 2, 6)
    (3, 6, 1, 5, 4, 2)
    >>> insert_value((1, 2), 1, 2)
    (2, 1, 3)
    """
    n = len(pi) + 1
    if not 1 <= k <= n:
        raise ValueError(f"value {k} out of range 1..{n}")
    if not 1 <= j <= n:
        raise ValueError(f"position {j} out of range 1..{n}")
    word = [v + 1 if v >= k else v for v in pi]
    word.insert(j - 1, k)
    return tuple(word)


def delete_position(sigma: Perm, j: int) -> Perm:
    """Remove the entry at position j and renormalize the remaining values.

    >>> delete_position((3, 6, 1, 2, 5, 4), 4)
    (2, 5, 1, 4, 3)
    """
    if not 1 <= j <= len(sigma):
        raise ValueError(f"position {j} out of range 1..{len(sigma)}")
    removed = sigma[j - 1]
    return tuple(v - 1 if v > removed else v for i, v in enumerate(sigma, start=1) if i != j)
