"""Triangular count tables keyed by (n, k), with exact integer entries."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Triangle:
    """A map (n, k) -> nonnegative count over a declared range of sizes n.

    Cells absent from ``entries`` count as zero; the stored cells of a row
    always form a contiguous span of k values for the tables built here.
    """

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    n_min: int = 1
    n_max: int = 0

    def value(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def ns(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def row(self, n: int) -> dict[int, int]:
        return {k: v for (m, k), v in self.entries.items() if m == n}

    def row_ks(self, n: int) -> list[int]:
        return sorted(self.row(n))

    def row_values(self, n: int) -> list[int]:
        """Row entries over the contiguous span from the row's least stored k."""
        row = self.row(n)
        if not row:
            return []
        return [row.get(k, 0) for k in range(min(row), max(row) + 1)]

    def row_min_k(self, n: int) -> int | None:
        row = self.row(n)
        return min(row) if row else None

    def row_sum(self, n: int) -> int:
        return sum(self.row(n).values())

    def row_sums(self) -> list[int]:
        return [self.row_sum(n) for n in self.ns()]


def first_difference(
    a: Triangle, b: Triangle, n_max: int | None = None
) -> tuple[int, int, int, int] | None:
    """First cell where two triangles disagree, or None if they agree.

    Cells are compared over the union of stored keys (missing cells read as
    zero), optionally restricted to n <= n_max. Returns (n, k, a_value,
    b_value) for the smallest differing (n, k).
    """
    keys = set(a.entries) | set(b.entries)
    if n_max is not None:
        keys = {key for key in keys if key[0] <= n_max}
    for key in sorted(keys):
        va, vb = a.value(*key), b.value(*key)
        if va != vb:
            return (key[0], key[1], va, vb)
    return None
