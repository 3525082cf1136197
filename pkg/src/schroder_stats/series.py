"""Truncated multivariate formal power series over exact rationals.

Series live in Q[[x, u, s]] with a per-variable truncation bound: x is the
size variable, u the first marker and s the second marker. Coefficients are
`fractions.Fraction` values and every operation is exact; there is no
floating point anywhere. Binary operations truncate to the per-variable
minimum of the operands' bounds, so a coefficient that is stored is always
the true coefficient of the underlying series.

The module also carries a small catalog of closed-form generating functions
(:func:`formula_series`); each one is evaluated by composing the primitive
operations here, never by ad-hoc expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .triangle import Triangle

Exponents = tuple[int, int, int]

VAR_NAMES = ("x", "u", "s")

_ZERO = Fraction(0)


class SeriesError(ValueError):
    """Invalid series operation: non-unit division, out-of-bounds reads, ..."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient required, got {type(value).__name__}")


def _norm_exps(exps) -> Exponents:
    if isinstance(exps, int):
        exps = (exps,)
    e = tuple(exps) + (0,) * (3 - len(tuple(exps)))
    if len(e) != 3 or any(not isinstance(v, int) or v < 0 for v in e):
        raise ValueError(f"exponent vector must be up to 3 nonnegative ints, got {exps!r}")
    return e  # type: ignore[return-value]


def _norm_bounds(bounds) -> tuple[int, int, int]:
    if isinstance(bounds, int):
        bounds = (bounds,)
    b = tuple(bounds) + (0,) * (3 - len(tuple(bounds)))
    if len(b) != 3 or any(not isinstance(v, int) or v < 0 for v in b):
        raise ValueError(f"bounds must be up to 3 nonnegative ints, got {bounds!r}")
    return b  # type: ignore[return-value]


@dataclass(frozen=True, eq=True)
class TruncatedSeries:
    """Exact truncated series; ``coeffs`` holds only nonzero monomials."""

    coeffs: dict[Exponents, Fraction]
    bounds: tuple[int, int, int]
    clipped: bool = False

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> "TruncatedSeries":
        other = _coerce(other, self.bounds)
        if other is NotImplemented:
            return NotImplemented
        bounds = _min_bounds(self.bounds, other.bounds)
        out: dict[Exponents, Fraction] = {
            e: c for e, c in self.coeffs.items() if _within(e, bounds)
        }
        for e, c in other.coeffs.items():
            if not _within(e, bounds):
                continue
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return TruncatedSeries(out, bounds, self.clipped or other.clipped)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries({e: -c for e, c in self.coeffs.items()}, self.bounds, self.clipped)

    def __sub__(self, other) -> "TruncatedSeries":
        other = _coerce(other, self.bounds)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        other = _coerce(other, self.bounds)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                return TruncatedSeries({}, self.bounds, self.clipped)
            return TruncatedSeries(
                {e: c * q for e, c in self.coeffs.items()}, self.bounds, self.clipped
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        bounds = _min_bounds(self.bounds, other.bounds)
        bx, b1, b2 = bounds
        small, big = sorted((self.coeffs, other.coeffs), key=len)
        out: dict[Exponents, Fraction] = {}
        for (e0, e1, e2), c in small.items():
            for (f0, f1, f2), d in big.items():
                g0 = e0 + f0
                if g0 > bx:
                    continue
                g1 = e1 + f1
                if g1 > b1:
                    continue
                g2 = e2 + f2
                if g2 > b2:
                    continue
                key = (g0, g1, g2)
                v = out.get(key, _ZERO) + c * d
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return TruncatedSeries(out, bounds, self.clipped or other.clipped)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * (Fraction(1) / q)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant coefficient."""
        c0 = self.coeffs.get((0, 0, 0), _ZERO)
        if c0 == 0:
            raise SeriesError("non-invertible denominator (zero constant term)")
        # Write self = c0 (1 + r) with r free of constant term; the fixpoint
        # v <- 1 - r v gains one exact total degree per pass.
        r = (self / c0) - 1
        one = constant(1, self.bounds)
        v = one
        for _ in range(sum(self.bounds) + 1):
            nxt = one - r * v
            if nxt.coeffs == v.coeffs:
                break
            v = nxt
        return v / c0

    def sqrt(self) -> "TruncatedSeries":
        """Square root with constant term 1.

        Writes the root as 1 + p and solves p = (self - 1 - p^2) / 2 level by
        level in total degree; each pass fixes one more level exactly.
        """
        if self.coeffs.get((0, 0, 0), _ZERO) != 1:
            raise SeriesError("sqrt requires unit constant term")
        target = self - 1
        p = TruncatedSeries({}, self.bounds, self.clipped)
        for _ in range(sum(self.bounds) + 1):
            nxt = (target - p * p) / 2
            if nxt.coeffs == p.coeffs:
                break
            p = nxt
        return p + 1

    # -- inspection -------------------------------------------------------

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0, 0, 0), _ZERO)

    def x_coefficients(self, through: int | None = None) -> list[Fraction]:
        """Coefficients of x^0..x^N with both markers at exponent zero."""
        top = self.bounds[0] if through is None else min(through, self.bounds[0])
        return [self.coeffs.get((n, 0, 0), _ZERO) for n in range(top + 1)]


def _within(e: Exponents, bounds: tuple[int, int, int]) -> bool:
    return e[0] <= bounds[0] and e[1] <= bounds[1] and e[2] <= bounds[2]


def _min_bounds(a: tuple[int, int, int], b: tuple[int, int, int]) -> tuple[int, int, int]:
    return (min(a[0], b[0]), min(a[1], b[1]), min(a[2], b[2]))


def _coerce(value, bounds):
    if isinstance(value, TruncatedSeries):
        return value
    if isinstance(value, (int, Fraction)):
        return constant(value, bounds)
    return NotImplemented


def from_terms(terms: Mapping, bounds) -> TruncatedSeries:
    """Build a series from {exponents: coefficient}; zero terms are dropped."""
    bounds = _norm_bounds(bounds)
    out: dict[Exponents, Fraction] = {}
    for exps, c in terms.items():
        e = _norm_exps(exps)
        q = _as_fraction(c)
        if q == 0:
            continue
        if not _within(e, bounds):
            raise SeriesError(f"term {e} exceeds truncation bounds {bounds}")
        out[e] = q
    return TruncatedSeries(out, bounds)


def constant(value, bounds) -> TruncatedSeries:
    return from_terms({(0, 0, 0): value}, bounds)


def monomial(exps, bounds, coeff=1) -> TruncatedSeries:
    return from_terms({exps: coeff}, bounds)


def sqrt(series: TruncatedSeries) -> TruncatedSeries:
    return series.sqrt()


def coefficient(series: TruncatedSeries, exps) -> Fraction:
    """Stored coefficient or exact zero; reads beyond the bounds are errors.

    The error keeps "truncated away, unknown" distinct from "known zero".
    """
    e = _norm_exps(exps)
    if not _within(e, series.bounds):
        raise SeriesError(f"exponent {e} lies beyond truncation bounds {series.bounds}")
    return series.coeffs.get(e, _ZERO)


def scale_argument(series: TruncatedSeries, marker: int = 1) -> TruncatedSeries:
    """Substitute x -> x * marker: each x^n coefficient gains marker^n.

    Terms pushed past the marker bound are dropped and the result is flagged
    as clipped; build the input with marker headroom to avoid that.
    """
    if marker not in (1, 2):
        raise ValueError("marker must be 1 or 2")
    bounds = series.bounds
    clipped = series.clipped
    out: dict[Exponents, Fraction] = {}
    for e, c in series.coeffs.items():
        lifted = list(e)
        lifted[marker] += e[0]
        if lifted[marker] > bounds[marker]:
            clipped = True
            continue
        out[tuple(lifted)] = c  # type: ignore[index]
    return TruncatedSeries(out, bounds, clipped)


def marker_at_one(series: TruncatedSeries, marker: int = 1) -> TruncatedSeries:
    """Substitute 1 for a marker by collapsing its exponent.

    Exact whenever the true support in that marker lies within the bound,
    which holds for every catalog formula (marker degree never exceeds the
    x degree there).
    """
    if marker not in (1, 2):
        raise ValueError("marker must be 1 or 2")
    out: dict[Exponents, Fraction] = {}
    for e, c in series.coeffs.items():
        key = list(e)
        key[marker] = 0
        k = tuple(key)
        v = out.get(k, _ZERO) + c  # type: ignore[arg-type]
        if v:
            out[k] = v  # type: ignore[index]
        else:
            out.pop(k, None)  # type: ignore[arg-type]
    return TruncatedSeries(out, series.bounds, series.clipped)


def _shift_down(series: TruncatedSeries, marker: int, amount: int = 1) -> TruncatedSeries:
    # Exact division by marker^amount; every stored term must carry it.
    out: dict[Exponents, Fraction] = {}
    for e, c in series.coeffs.items():
        if e[marker] < amount:
            raise SeriesError(f"series is not divisible by {VAR_NAMES[marker]}^{amount}")
        key = list(e)
        key[marker] -= amount
        out[tuple(key)] = c  # type: ignore[index]
    bounds = list(series.bounds)
    bounds[marker] -= amount
    return TruncatedSeries(out, tuple(bounds), series.clipped)  # type: ignore[arg-type]


class IdentityCheck(NamedTuple):
    equal: bool
    mismatch: Exponents | None


def check_identity(lhs: TruncatedSeries, rhs: TruncatedSeries) -> IdentityCheck:
    """Compare two series over their shared truncation bounds.

    Reports the first differing exponent in graded lexicographic order.
    """
    bounds = _min_bounds(lhs.bounds, rhs.bounds)
    keys = {e for e in lhs.coeffs if _within(e, bounds)}
    keys |= {e for e in rhs.coeffs if _within(e, bounds)}
    for e in sorted(keys, key=lambda t: (sum(t), t)):
        if lhs.coeffs.get(e, _ZERO) != rhs.coeffs.get(e, _ZERO):
            return IdentityCheck(False, e)
    return IdentityCheck(True, None)


def series_triangle(
    series: TruncatedSeries, n_min: int, n_max: int | None = None, marker: int = 1
) -> Triangle:
    """Extract the integer triangle (n, k) -> coeff of x^n * marker^k.

    Raises if any in-range coefficient is negative, non-integer, or involves
    the other marker; the catalog formulas all satisfy those constraints.
    """
    if marker not in (1, 2):
        raise ValueError("marker must be 1 or 2")
    other = 2 if marker == 1 else 1
    top = series.bounds[0] if n_max is None else min(n_max, series.bounds[0])
    entries: dict[tuple[int, int], int] = {}
    for e, c in series.coeffs.items():
        if e[other] != 0:
            raise SeriesError(f"unexpected {VAR_NAMES[other]} exponent in term {e}")
        n, k = e[0], e[marker]
        if n < n_min or n > top:
            continue
        if c.denominator != 1 or c < 0:
            raise SeriesError(f"coefficient at {e} is not a nonnegative integer: {c}")
        entries[(n, k)] = int(c)
    return Triangle(entries, n_min, top)


# -- generating function catalog ------------------------------------------
#
# Formula ids, their marker usage, and what they enumerate:
#   S           large Schroder numbers (no marker)
#   LITTLE      little Schroder numbers (no marker)
#   G_SEP_POS1  separable class by position of the minimum        (table 1)
#   F_SEP_DIST  separable class by min-to-max distance            (table 2)
#   F_SEP_A     refinement of F_SEP_DIST by the cutoff value a    (marker s)
#   G_P31       skew-indecomposable {1324,1423} by min position   (table 3)
#   G_COR42     {1423,2413}, min before max, by max position      (table 4)
#   H_P51       {1324,2134} by last entry                         (table 5)
#   G_CB        {1243,1324}, min adjacent left of max, by first
#               entry; row sums are central binomials             (table 6)

FORMULA_IDS = (
    "S",
    "LITTLE",
    "G_SEP_POS1",
    "F_SEP_DIST",
    "F_SEP_A",
    "G_P31",
    "G_COR42",
    "H_P51",
    "G_CB",
)

FORMULA_MARKERS = {
    "S": 0,
    "LITTLE": 0,
    "G_SEP_POS1": 1,
    "F_SEP_DIST": 1,
    "F_SEP_A": 2,
    "G_P31": 1,
    "G_COR42": 1,
    "H_P51": 1,
    "G_CB": 1,
}

MAX_ORDER = 20


def _schroder_gf(bounds) -> TruncatedSeries:
    # S = (3 - x - sqrt(x^2 - 6x + 1)) / 2, the large Schroder series.
    rad = from_terms({0: 1, 1: -6, 2: 1}, bounds)
    return (from_terms({0: 3, 1: -1}, bounds) - sqrt(rad)) / 2


def _little_schroder_gf(bounds) -> TruncatedSeries:
    # (1 + x - sqrt(1 - 6x + x^2)) / 4, the little Schroder series.
    rad = from_terms({0: 1, 1: -6, 2: 1}, bounds)
    return (from_terms({0: 1, 1: 1}, bounds) - sqrt(rad)) / 4


def _sep_pos1_gf(order: int) -> TruncatedSeries:
    # x u S(x) S(xu) / (S(x) + S(xu) - S(x) S(xu))
    b = (order, order, 0)
    big = _schroder_gf(b)
    big_u = scale_argument(big, 1)
    num = monomial((1, 1, 0), b) * big * big_u
    return num / (big + big_u - big * big_u)


def _sep_dist_gf(bounds) -> TruncatedSeries:
    # x^2 u S(x)^2 S(xu) / (S(xu) + S(x) - S(xu) S(x))^2. The numerator
    # carries S(x)^2 S(xu), not S(x) S(xu)^2: the max's sum-component is
    # counted by position of its maximum, which is the reverse-complement
    # image of counting by position of its minimum. Swapping the two powers
    # mirrors every row k -> n-k (the row sums cannot tell them apart).
    big = _schroder_gf(bounds)
    big_u = scale_argument(big, 1)
    den = big_u + big - big_u * big
    num = monomial((2, 1, 0), bounds) * big * big * big_u
    return num / (den * den)


def _sep_cutoff_gf(order: int) -> TruncatedSeries:
    # The distance series times s S(xs); s marks the cutoff value.
    b = (order, order, order)
    dist = _sep_dist_gf(b)
    big_s = scale_argument(_schroder_gf(b), 2)
    return dist * monomial((0, 0, 1), b) * big_s


def _p31_gf(order: int) -> TruncatedSeries:
    # u x (4u - 3 + 4x - 3ux - sqrt(1 - 6ux + u^2 x^2)) / (4 (u - 1 - ux + 2x))
    b = (order, order, 0)
    rad = from_terms({(0, 0, 0): 1, (1, 1, 0): -6, (2, 2, 0): 1}, b)
    inner = from_terms({(0, 1, 0): 4, (0, 0, 0): -3, (1, 0, 0): 4, (1, 1, 0): -3}, b)
    num = monomial((1, 1, 0), b) * (inner - sqrt(rad))
    den = from_terms({(0, 1, 0): 4, (0, 0, 0): -4, (1, 1, 0): -4, (1, 0, 0): 8}, b)
    return num / den


def _cor42_gf(order: int) -> TruncatedSeries:
    # x u^2 (S(xu) - 1) / (1 + u - S(xu)). The denominator has constant term
    # zero but is exactly divisible by u, so one factor of u is cancelled
    # against the numerator before inverting.
    b = (order, order + 1, 0)
    big_u = scale_argument(_schroder_gf(b), 1)
    num = monomial((1, 1, 0), b) * (big_u - 1)
    den = _shift_down(constant(1, b) + monomial((0, 1, 0), b) - big_u, marker=1)
    return num / den


def _p51_gf(order: int) -> TruncatedSeries:
    # (2ux(1-u)(1-ux) + ux(1 - u(1-u)x)(1 - x - sqrt(1-6x+x^2)))
    #   / (2 (1 - u(1+x) + 2u^2 x))
    b = (order, order, 0)
    rad = from_terms({0: 1, 1: -6, 2: 1}, b)
    tail = from_terms({0: 1, 1: -1}, b) - sqrt(rad)
    ux = monomial((1, 1, 0), b)
    first = 2 * ux * from_terms({(0, 0, 0): 1, (0, 1, 0): -1}, b) * from_terms(
        {(0, 0, 0): 1, (1, 1, 0): -1}, b
    )
    second = ux * from_terms({(0, 0, 0): 1, (1, 1, 0): -1, (1, 2, 0): 1}, b) * tail
    den = from_terms({(0, 0, 0): 2, (0, 1, 0): -2, (1, 1, 0): -2, (1, 2, 0): 4}, b)
    return (first + second) / den


def _cb_gf(order: int) -> TruncatedSeries:
    # (u(1-u) x^2 (1-x)^2 / (1-2x) - u^3 x^3 / sqrt(1-4ux)) / (1 - u - x)
    b = (order, order, 0)
    one_minus_x = from_terms({0: 1, 1: -1}, b)
    first = (
        from_terms({(0, 1, 0): 1, (0, 2, 0): -1}, b)
        * monomial((2, 0, 0), b)
        * one_minus_x
        * one_minus_x
        / from_terms({0: 1, 1: -2}, b)
    )
    second = monomial((3, 3, 0), b) / sqrt(from_terms({(0, 0, 0): 1, (1, 1, 0): -4}, b))
    den = from_terms({(0, 0, 0): 1, (0, 1, 0): -1, (1, 0, 0): -1}, b)
    return (first - second) / den


def formula_series(which: str, order: int = 12) -> TruncatedSeries:
    """Evaluate a catalog generating function, exactly, to the given x order.

    Marker bounds match the x order, which is always enough headroom since
    every catalog series has marker degree at most its x degree.
    """
    if which not in FORMULA_IDS:
        raise ValueError(f"unknown formula id {which!r}; expected one of {FORMULA_IDS}")
    if order < 2:
        raise ValueError("order must be at least 2")
    if order > MAX_ORDER:
        raise ValueError(f"order is capped at {MAX_ORDER}")
    if which == "S":
        return _schroder_gf((order, 0, 0))
    if which == "LITTLE":
        return _little_schroder_gf((order, 0, 0))
    if which == "G_SEP_POS1":
        return _sep_pos1_gf(order)
    if which == "F_SEP_DIST":
        return _sep_dist_gf((order, order, 0))
    if which == "F_SEP_A":
        return _sep_cutoff_gf(order)
    if which == "G_P31":
        return _p31_gf(order)
    if which == "G_COR42":
        return _cor42_gf(order)
    if which == "H_P51":
        return _p51_gf(order)
    if which == "G_CB":
        return _cb_gf(order)
    raise AssertionError("unreachable")
