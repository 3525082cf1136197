"""Executable constructions behind the triangle recurrences.

Each recurrence in :mod:`schroder_stats.recurrences` is proved by explicit
insertion maps between avoidance-class cells. This module implements those
maps and verifies, exhaustively at small sizes, that per target cell the
branch maps are injective, their images are pairwise disjoint, and the
images cover exactly the oracle-computed target set.

Map preconditions are checked structurally (entry positions, ranges) and
violations raise ValueError; full class membership of inputs is the
verifier's job, which compares against oracle sets so that any failure
produces a concrete witness permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import DIST_1243_1324, TABLE_SPECS, TableSpec, class_members, statistic_value
from .perm_core import Perm, insert_value, position_of, to_text

CONSTRUCTIONS = ("PROP31", "PROP41", "PROP51", "PROP53")

PROP31_BRANCHES = ("left_j", "adjacent", "end")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def prop31_children(tau: Perm, ell: int, branch: str) -> Perm:
    """One child of tau in the position-of-minimum tower (PROP31 maps).

    left_j inserts a new minimum at position ell (tau's minimum, strictly
    left of ell, becomes the entry 2); adjacent and end insert the value 2
    just right of the minimum and at the last position, respectively.
    """
    n = len(tau) + 1
    pos1 = position_of(tau, 1)
    if branch == "left_j":
        _require(1 <= ell <= n - 1, f"target position {ell} out of range 1..{n - 1}")
        _require(pos1 < ell, "left_j needs the minimum strictly left of the target position")
        return insert_value(tau, 1, ell)
    if branch == "adjacent":
        _require(pos1 == ell, "adjacent needs the minimum at the target position")
        _require(ell < n - 1, "adjacent needs the target position below the input size")
        return insert_value(tau, 2, ell + 1)
    if branch == "end":
        _require(pos1 == ell, "end needs the minimum at the target position")
        _require(ell < n - 1, "end needs the target position below the input size")
        return insert_value(tau, 2, n)
    raise ValueError(f"unknown branch {branch!r}; expected one of {PROP31_BRANCHES}")


def phi1(sigma: Perm) -> Perm:
    """Swap the maximum with its right neighbor, moving it one step right."""
    n = len(sigma)
    p = position_of(sigma, n)
    _require(position_of(sigma, 1) < p, "needs the minimum before the maximum")
    _require(p < n, "maximum is already at the last position")
    word = list(sigma)
    word[p - 1], word[p] = word[p], word[p - 1]
    return tuple(word)


def phi2(sigma: Perm, k: int) -> Perm:
    """Insert a new maximum at position k, on top of the old maximum there.

    The output has the old maximum at position k + 1, which is the marker
    separating this branch from the others.
    """
    m = len(sigma)
    _require(1 <= k <= m, f"position {k} out of range 1..{m}")
    _require(sigma[k - 1] == m, "needs the maximum at the insertion position")
    _require(position_of(sigma, 1) < k, "needs the minimum before the maximum")
    return insert_value(sigma, m + 1, k)


def phi3(sigma: Perm) -> Perm:
    """Grow the maximum's position by one via the block-move insertion.

    When the maximum is the last entry, a new minimum is inserted just
    before it. Otherwise, with mid the entry right after the maximum, the
    input must look like [high block][low block] 1 [low block][high block]
    max mid [low tail] relative to mid; the value mid+1 is inserted right
    after the leading high block and that block's high companion moves next
    to it, which keeps all patterns avoided and puts the new maximum one
    step further right.
    """
    m = len(sigma)
    p = position_of(sigma, m)
    i1 = position_of(sigma, 1)
    _require(i1 < p, "needs the minimum before the maximum")
    if p == m:
        return insert_value(sigma, 1, m)
    mid = sigma[p]
    prefix = sigma[: i1 - 1]
    high_len = 0
    while high_len < len(prefix) and prefix[high_len] > mid:
        high_len += 1
    _require(
        all(v < mid for v in prefix[high_len:]),
        "prefix must split into a high block followed by a low block",
    )
    between = sigma[i1 : p - 1]
    low_len = 0
    while low_len < len(between) and between[low_len] < mid:
        low_len += 1
    rho = between[low_len:]
    _require(
        all(v > mid for v in rho),
        "mid section must split into a low block followed by a high block",
    )
    tail = sigma[p + 1 :]
    _require(all(v < mid for v in tail), "tail entries must stay below the pivot")

    def bump(word: Perm) -> tuple[int, ...]:
        return tuple(v + 1 for v in word)

    return (
        bump(prefix[:high_len])
        + (mid + 1,)
        + bump(rho)
        + prefix[high_len:]
        + (1,)
        + between[:low_len]
        + (m + 1,)
        + (mid,)
        + tail
    )


def alpha(tau: Perm, ell: int) -> Perm:
    """Insert just before the last entry to land on last entry ell.

    The inserted value depends on where the entry 2 sits relative to the
    minimum and on the smallest entry of the prefix before the minimum; the
    three cases are mutually exclusive and the map is undone by deleting the
    next-to-last position.
    """
    n = len(tau) + 1
    _require(ell >= 4, "defined for last-entry targets of at least 4")
    _require(tau and tau[-1] == ell - 1, "input must end with one less than the target")
    i = position_of(tau, 1)
    j = position_of(tau, 2)
    if j < i:
        inserted = 2
    else:
        small = [v for v in tau[: i - 1] if v < ell - 1]
        inserted = min(small) if small else ell - 1
    return insert_value(tau, inserted, n - 1)


def dist_step(sigma: Perm, branch: str) -> Perm:
    """One step of the min-to-max distance recurrence on {1243,1324} avoiders.

    A_theta inserts a new maximum immediately right of the old one, growing
    the distance by one. A_tau removes the next-to-maximum entry (which must
    precede the minimum) and reinserts its relabeled stand-in just before
    the maximum, also growing the distance by one.
    """
    n = len(sigma)
    if branch == "A_theta":
        p = position_of(sigma, n)
        _require(position_of(sigma, 1) < p, "needs the minimum before the maximum")
        return insert_value(sigma, n + 1, p + 1)
    if branch == "A_tau":
        q = position_of(sigma, n - 1)
        i1 = position_of(sigma, 1)
        pn = position_of(sigma, n)
        _require(q < i1 < pn, "needs next-to-max, then min, then max in that order")
        head = sigma[: q - 1]
        mid = sigma[q : i1 - 1]
        rise = sigma[i1 : pn - 1]
        tail = sigma[pn:]
        stand_in = n - 1 - len(head)
        word = tuple(v + 1 for v in head) + mid + (1,) + rise + (stand_in, n) + tail
        _require(sorted(word) == list(range(1, n + 1)), "input lies outside the map's domain")
        return word
    raise ValueError(f"unknown branch {branch!r}; expected A_theta or A_tau")


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of exhaustively checking one construction at one size.

    image_sizes maps each target cell to its per-branch image set sizes.
    Injectivity or membership failures land in witnesses, so a clean run is
    exactly: disjoint and covers_target and no witnesses.
    """

    n: int
    construction: str
    image_sizes: dict[int, dict[str, int]]
    disjoint: bool
    covers_target: bool
    witnesses: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.disjoint and self.covers_target and not self.witnesses


class _Collector:
    def __init__(self):
        self.image_sizes: dict[int, dict[str, int]] = {}
        self.disjoint = True
        self.covers = True
        self.witnesses: list[str] = []

    def witness(self, message: str) -> None:
        if len(self.witnesses) < 3:
            self.witnesses.append(message)

    def check_cell(self, cell: int, target: frozenset, branches) -> None:
        """branches: iterable of (name, domain sequence, map callable)."""
        sizes: dict[str, int] = {}
        images: list[tuple[str, frozenset]] = []
        for name, domain, fn in branches:
            image = set()
            for tau in domain:
                out = fn(tau)
                if out in image:
                    self.witness(f"cell {cell}: branch {name} repeats {to_text(out)}")
                image.add(out)
            sizes[name] = len(image)
            images.append((name, frozenset(image)))
        self.image_sizes[cell] = sizes
        for i in range(len(images)):
            for j in range(i + 1, len(images)):
                overlap = images[i][1] & images[j][1]
                if overlap:
                    self.disjoint = False
                    self.witness(
                        f"cell {cell}: branches {images[i][0]}/{images[j][0]} "
                        f"collide on {to_text(min(overlap))}"
                    )
        union = frozenset().union(*(img for _, img in images)) if images else frozenset()
        if union != target:
            self.covers = False
            missing = target - union
            extra = union - target
            if missing:
                self.witness(f"cell {cell}: target element {to_text(min(missing))} not produced")
            if extra:
                self.witness(f"cell {cell}: produced {to_text(min(extra))} outside the target")

    def report(self, n: int, construction: str) -> BijectionReport:
        return BijectionReport(
            n, construction, self.image_sizes, self.disjoint, self.covers, tuple(self.witnesses)
        )


def _cells(n: int, spec: TableSpec) -> dict[int, frozenset]:
    out: dict[int, set] = {}
    for sigma in class_members(n, spec.cls):
        k = statistic_value(sigma, spec.stat)
        if k is not None:
            out.setdefault(k, set()).add(sigma)
    return {k: frozenset(v) for k, v in out.items()}


def _check_prop31(n: int) -> BijectionReport:
    spec = TABLE_SPECS[3]
    cur = _cells(n, spec)
    prev = _cells(n - 1, spec)
    col = _Collector()
    for ell in range(1, n):
        target = cur.get(ell, frozenset())
        left_domain = [tau for j in range(1, ell) for tau in sorted(prev.get(j, frozenset()))]
        same_domain = sorted(prev.get(ell, frozenset())) if ell < n - 1 else []
        col.check_cell(
            ell,
            target,
            [
                ("left_j", left_domain, lambda t, ell=ell: prop31_children(t, ell, "left_j")),
                ("adjacent", same_domain, lambda t, ell=ell: prop31_children(t, ell, "adjacent")),
                ("end", same_domain, lambda t, ell=ell: prop31_children(t, ell, "end")),
            ],
        )
    return col.report(n, "PROP31")


def _check_prop41(n: int) -> BijectionReport:
    spec = TABLE_SPECS[4]
    cur = _cells(n, spec)
    prev = _cells(n - 1, spec)
    col = _Collector()
    for k in range(2, n + 1):
        target = cur.get(k, frozenset())
        if k == 2:
            # Base cell: the single permutation 1 n (n-1) ... 2.
            base = (1, n) + tuple(range(n - 1, 1, -1))
            col.check_cell(k, target, [("base", [base], lambda t: t)])
            continue
        branches = [("phi1", sorted(cur.get(k - 1, frozenset())), phi1)]
        if k < n:
            branches.append(
                ("phi2", sorted(prev.get(k, frozenset())), lambda t, k=k: phi2(t, k))
            )
        branches.append(("phi3", sorted(prev.get(k - 1, frozenset())), phi3))
        col.check_cell(k, target, branches)
    return col.report(n, "PROP41")


def _check_prop51(n: int) -> BijectionReport:
    spec = TABLE_SPECS[5]
    cur = _cells(n, spec)
    prev = _cells(n - 1, spec)
    prev_all = sorted(class_members(n - 1, spec.cls))
    col = _Collector()
    for ell in range(1, n + 1):
        target = cur.get(ell, frozenset())
        if ell <= 3:
            col.check_cell(
                ell,
                target,
                [("append", prev_all, lambda t, ell=ell: insert_value(t, ell, len(t) + 1))],
            )
            continue
        descent_domain = [
            tau for m in range(ell, n) for tau in sorted(prev.get(m, frozenset()))
        ]
        ascent_domain = sorted(prev.get(ell - 1, frozenset()))
        col.check_cell(
            ell,
            target,
            [
                ("append", descent_domain, lambda t, ell=ell: insert_value(t, ell, len(t) + 1)),
                ("U", ascent_domain, lambda t: insert_value(t, 1, len(t))),
                ("V", ascent_domain, lambda t, ell=ell: alpha(t, ell)),
            ],
        )
    return col.report(n, "PROP51")


def _check_prop53(n: int) -> BijectionReport:
    spec = DIST_1243_1324
    cur = _cells(n, spec)
    prev = _cells(n - 1, spec)
    col = _Collector()
    for k in range(2, n - 1):
        target = cur.get(k, frozenset())
        # The target splits by where the next-to-maximum sits: before the
        # minimum (tau side) or between minimum and maximum (theta side).
        theta_side = frozenset(
            s for s in target if position_of(s, 1) < position_of(s, n - 1) < position_of(s, n)
        )
        tau_side = frozenset(s for s in target if position_of(s, n - 1) < position_of(s, 1))
        if theta_side | tau_side != target:
            col.covers = False
            stray = min(target - (theta_side | tau_side))
            col.witness(f"cell {k}: {to_text(stray)} has the next-to-max after the max")
        sizes = {"theta": len(theta_side), "tau": len(tau_side)}
        col.image_sizes[k] = sizes
        # theta side: image of the distance k-1 cell one size down.
        theta_image = set()
        for tau in sorted(prev.get(k - 1, frozenset())):
            out = dist_step(tau, "A_theta")
            if out in theta_image:
                col.witness(f"cell {k}: A_theta repeats {to_text(out)}")
            theta_image.add(out)
        if frozenset(theta_image) != theta_side:
            col.covers = False
            col.witness(f"cell {k}: A_theta image differs from the theta side")
        # tau side: maps bijectively onto the distance k+1 cell at this size.
        tau_image = set()
        for sigma in sorted(tau_side):
            out = dist_step(sigma, "A_tau")
            if out in tau_image:
                col.witness(f"cell {k}: A_tau repeats {to_text(out)}")
            tau_image.add(out)
        if frozenset(tau_image) != cur.get(k + 1, frozenset()):
            col.covers = False
            col.witness(f"cell {k}: A_tau image differs from the distance {k + 1} cell")
    # Boundary: the largest distance is realized by the identity alone.
    identity = tuple(range(1, n + 1))
    if cur.get(n - 1, frozenset()) != frozenset({identity}):
        col.covers = False
        col.witness(f"boundary cell {n - 1} is not the identity alone")
    col.image_sizes[n - 1] = {"base": 1}
    return col.report(n, "PROP53")


_CHECKERS = {
    "PROP31": _check_prop31,
    "PROP41": _check_prop41,
    "PROP51": _check_prop51,
    "PROP53": _check_prop53,
}


def verify_partition(n: int, construction: str) -> BijectionReport:
    """Exhaustively check one construction at size n against the oracle."""
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {construction!r}; expected one of {CONSTRUCTIONS}")
    if n < 3:
        raise ValueError("verification needs size at least 3")
    return _CHECKERS[construction](n)
