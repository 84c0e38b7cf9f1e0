"""Exact closed-form evaluators: binomials, sturdiness formulas for the named
families, and one evaluator per cited size/sturdiness bound.

Everything is exact: integers are unbounded and ratios are ``Fraction``.
Bound evaluators return the value together with an applicability flag for the
stated hypothesis; callers outside the hypothesis still get the number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .families import SetFamily


def binom(a: int, b: int) -> int:
    """C(a, b) with the convention that out-of-range arguments give 0."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class BoundValue:
    """An exact bound value plus whether the stated hypothesis holds."""

    name: str
    value: int | Fraction
    applicable: bool
    hypothesis: str


# ---------------------------------------------------------------------------
# Triangle family link-count cases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleLinkCases:
    """Link counts b[i][j] of the triangle family by position of (i, j)
    relative to the core {1,2,3}."""

    outer_outer: int   # i, j both outside the core
    inner_outer: int   # i in the core, j outside
    outer_inner: int   # j in the core, i outside
    inner_inner: int   # i, j both in the core
    minimum: int


def triangle_beta_cases(n: int, k: int) -> TriangleLinkCases:
    if k < 3 or n < 2 * k:
        raise ValueError("requires k >= 3 and n >= 2k")
    outer_outer = 3 * binom(n - 5, k - 3) + binom(n - 5, k - 4)
    inner_outer = 2 * binom(n - 4, k - 2) + binom(n - 4, k - 3)
    outer_inner = binom(n - 4, k - 3)
    inner_inner = binom(n - 3, k - 2)
    return TriangleLinkCases(
        outer_outer,
        inner_outer,
        outer_inner,
        inner_inner,
        min(outer_outer, inner_outer, outer_inner, inner_inner),
    )


def triangle_beta(n: int, k: int) -> int:
    return triangle_beta_cases(n, k).minimum


# ---------------------------------------------------------------------------
# Frankl family sturdiness and the ratio of the first two
# ---------------------------------------------------------------------------

def frankl_beta(n: int, k: int, t: int, i: int) -> int:
    """Sturdiness of the i-th Frankl family, for i in {1, 2}."""
    if t < 1 or i not in (1, 2):
        raise ValueError("requires t >= 1 and i in {1, 2}")
    if k < t + i or n < t + 2 * i or n < k:
        raise ValueError("parameters out of range for the Frankl family")
    if i == 1:
        return binom(n - t - 3, k - t - 2)
    return (t + 3) * binom(n - t - 5, k - t - 3) + binom(n - t - 5, k - t - 4)


@dataclass(frozen=True)
class FranklRatio:
    exact: Fraction
    asymptotic: Fraction
    c: Fraction


def frankl_beta_ratio(n: int, k: int, t: int) -> FranklRatio:
    """Exact ratio beta(A2)/beta(A1) and its limit form (t+3)/c - (t+2)/c^2.

    The two agree only asymptotically: the limit form replaces falling
    products by squares, and at small parameters they can land on opposite
    sides of 1.
    """
    if k < t + 4 or n < t + 5:
        raise ValueError("requires k >= t + 4 and n >= t + 5")
    denom = frankl_beta(n, k, t, 1)
    if denom == 0:
        raise ZeroDivisionError("beta(A1) = 0 for these parameters")
    c = Fraction(n - t - 4, k - t - 3)
    exact = Fraction(frankl_beta(n, k, t, 2), denom)
    asymptotic = Fraction(t + 3, 1) / c - Fraction(t + 2, 1) / c ** 2
    return FranklRatio(exact, asymptotic, c)


# ---------------------------------------------------------------------------
# Structural constants of a 10-edge regular selection on [6] and the link
# formulas of its up-closure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class G0Stats:
    """Degrees, pair co-degrees and covered-subset counts of a 10-member
    3-uniform family on [6]."""

    degrees: tuple[int, ...]
    codegrees: tuple[tuple[int, ...], ...]
    covered_counts: dict[int, int]  # m -> number of m-subsets of [6] containing a member


def g0_stats(family: SetFamily) -> G0Stats:
    if family.n != 6 or family.uniform_k != 3 or len(family) != 10:
        raise ValueError("expects a 10-member 3-uniform family on [6]")
    masks = family.masks
    degrees = tuple(
        sum(1 for m in masks if m >> i & 1) for i in range(6)
    )
    codegrees = tuple(
        tuple(
            sum(1 for m in masks if m >> i & 1 and m >> j & 1) if i != j else 0
            for j in range(6)
        )
        for i in range(6)
    )
    covered = {}
    for m_size in range(3, 7):
        cnt = 0
        for combo in combinations(range(6), m_size):
            cm = 0
            for i in combo:
                cm |= 1 << i
            if any(g & ~cm == 0 for g in masks):
                cnt += 1
        covered[m_size] = cnt
    stats = G0Stats(degrees, codegrees, covered)
    if sum(degrees) != 30 or covered[3] != 10 or covered[6] != 1:
        raise ValueError("family does not have the structure of a 10-edge 3-graph")
    return stats


@dataclass(frozen=True)
class F0LinkValues:
    """Link counts of the up-closure, by position of the avoided point i and
    the contained point j relative to [6]; these count members containing j
    and avoiding i."""

    both_outside: int
    i_inside: int
    j_inside: int
    both_inside: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.both_outside, self.i_inside, self.j_inside, self.both_inside)


F0_PRINTED_COEFFICIENTS = {
    "both_outside": (10, 16, 6, 1),
    "i_inside": (5, 5, 1),
    "j_inside": (5, 10, 5, 1),
    "both_inside": (3, 4, 1),
}


def _constant(values: list[int], what: str) -> int:
    vs = set(values)
    if len(vs) != 1:
        raise ValueError(f"{what} is not constant across index choices: {sorted(vs)}")
    return vs.pop()


def f0_derived_coefficients(stats: G0Stats) -> dict[str, tuple[int, ...]]:
    """Trace-partition coefficients computed from the concrete selection.

    Raises if the selection is not symmetric enough for the four values to be
    independent of the representative pair within each class.
    """
    total = 10
    deg = stats.degrees
    cod = stats.codegrees
    avoid = [total - d for d in deg]

    def pair_covered(x: int, y: int) -> bool:
        # some member avoids both x and y
        return total - deg[x] - deg[y] + cod[x][y] > 0

    both_outside = tuple(stats.covered_counts[m] for m in (3, 4, 5, 6))
    i_inside = (
        _constant([avoid[i] for i in range(6)], "member count avoiding a point"),
        _constant(
            [sum(1 for x in range(6) if x != i and pair_covered(i, x)) for i in range(6)],
            "covered 4-subsets avoiding a point",
        ),
        _constant([1 if avoid[i] else 0 for i in range(6)], "covered 5-subset avoiding a point"),
    )
    j_inside = (
        _constant([deg[j] for j in range(6)], "degree"),
        _constant(
            [
                sum(1 for x, y in combinations([z for z in range(6) if z != j], 2)
                    if pair_covered(x, y))
                for j in range(6)
            ],
            "covered 4-subsets through a point",
        ),
        _constant(
            [sum(1 for x in range(6) if x != j and avoid[x]) for j in range(6)],
            "covered 5-subsets through a point",
        ),
        1,
    )
    both_inside = (
        _constant(
            [deg[j] - cod[i][j] for i in range(6) for j in range(6) if i != j],
            "degree minus co-degree",
        ),
        _constant(
            [
                sum(1 for x in range(6) if x not in (i, j) and pair_covered(i, x))
                for i in range(6)
                for j in range(6)
                if i != j
            ],
            "covered 4-subsets through j avoiding i",
        ),
        _constant([1 if avoid[i] else 0 for i in range(6)], "covered 5-subset avoiding i"),
    )
    return {
        "both_outside": both_outside,
        "i_inside": i_inside,
        "j_inside": j_inside,
        "both_inside": both_inside,
    }


def _f0_values(n: int, k: int, coeffs: dict[str, tuple[int, ...]]) -> F0LinkValues:
    bo = coeffs["both_outside"]
    ii = coeffs["i_inside"]
    ji = coeffs["j_inside"]
    bi = coeffs["both_inside"]
    both_outside = sum(bo[m - 3] * binom(n - 8, k - m - 1) for m in (3, 4, 5, 6))
    i_inside = sum(ii[m - 3] * binom(n - 7, k - m - 1) for m in (3, 4, 5))
    j_inside = sum(ji[m - 3] * binom(n - 7, k - m) for m in (3, 4, 5, 6))
    both_inside = sum(bi[m - 3] * binom(n - 6, k - m) for m in (3, 4, 5))
    return F0LinkValues(both_outside, i_inside, j_inside, both_inside)


def f0_link_formulas(n: int, k: int, stats: G0Stats) -> F0LinkValues:
    """Exact link counts of the up-closure, from selection-derived coefficients."""
    if n < 8 or k < 3:
        raise ValueError("requires n >= 8 and k >= 3")
    return _f0_values(n, k, f0_derived_coefficients(stats))


def f0_link_formulas_printed(n: int, k: int) -> F0LinkValues:
    """The same four case values evaluated with the printed constants."""
    if n < 8 or k < 3:
        raise ValueError("requires n >= 8 and k >= 3")
    return _f0_values(n, k, F0_PRINTED_COEFFICIENTS)


# ---------------------------------------------------------------------------
# Size and sturdiness bound evaluators
# ---------------------------------------------------------------------------

def ekr_size_bound(n: int, k: int, t: int) -> BoundValue:
    """Maximum size of a t-intersecting k-uniform family for large n."""
    return BoundValue(
        "ekr-size",
        binom(n - t, k - t),
        n >= (k - t + 1) * (t + 1),
        "n >= (k-t+1)(t+1)",
    )


def katona_size_bound(n: int, t: int) -> BoundValue:
    """Maximum size of a non-uniform t-intersecting family (classical form)."""
    if not 0 < t < n:
        raise ValueError("requires 0 < t < n")
    if (n - t) % 2 == 0:
        value = sum(binom(n, i) for i in range((n + t) // 2, n + 1))
    else:
        value = binom(n - 1, (n + t - 1) // 2) + sum(
            binom(n, i) for i in range((n + t + 1) // 2, n + 1)
        )
    return BoundValue("katona-size", value, True, "0 < t < n")


def katona_size_bound_printed(n: int, t: int) -> BoundValue:
    """Odd-case variant with the first binomial index lowered by one, kept for
    comparison; brute force contradicts it at (n, t) = (5, 2)."""
    if not 0 < t < n:
        raise ValueError("requires 0 < t < n")
    if (n - t) % 2 == 0:
        return katona_size_bound(n, t)
    value = binom(n - 1, (n + t - 1) // 2 - 1) + sum(
        binom(n, i) for i in range((n + t + 1) // 2, n + 1)
    )
    return BoundValue("katona-size-printed", value, True, "0 < t < n, n - t odd")


def uniform_intersecting_beta_bound(n: int, k: int) -> BoundValue:
    """Maximum sturdiness of an intersecting k-uniform family for large n."""
    return BoundValue(
        "uniform-intersecting-beta", binom(n - 4, k - 3), n >= 36 * (k + 6),
        "n >= 36(k+6)",
    )


def uniform_t_intersecting_beta_bound(n: int, k: int, t: int) -> BoundValue:
    """Maximum sturdiness of a t-intersecting k-uniform family for large n."""
    return BoundValue(
        "uniform-t-intersecting-beta",
        binom(n - t - 3, k - t - 2),
        n >= 2 * (t + 3) ** 2 * k ** 2,
        "n >= 2(t+3)^2 k^2",
    )


def any_intersecting_beta_bound(n: int) -> BoundValue:
    """Maximum sturdiness of a non-uniform intersecting family: 2^(n-3)."""
    value: int | Fraction
    value = 1 << (n - 3) if n >= 3 else Fraction(1, 1 << (3 - n))
    return BoundValue("any-intersecting-beta", value, n >= 1, "n >= 1")


def any_t_intersecting_beta_bound(n: int, t: int) -> BoundValue:
    """Maximum sturdiness of a non-uniform t-intersecting family, split by the
    parity of n - t."""
    if not 0 < t < n:
        raise ValueError("requires 0 < t < n")
    if (n - t) % 2 == 0:
        s = (n - t) // 2
        value = sum(binom(n - 2, j) for j in range(s))
        return BoundValue("any-t-intersecting-beta", value, True, "n - t even")
    s = (n - t - 1) // 2
    value = binom(n - 4, s - 2) + sum(binom(n - 2, j) for j in range(s))
    return BoundValue(
        "any-t-intersecting-beta",
        value,
        n >= max(4 * (s + 2) ** 2, 36 * (s + 7)),
        "n - t odd and n >= max{4(s+2)^2, 36(s+7)}",
    )


def shifted_r_wise_beta_bound(n: int, k: int, t: int, r: int) -> BoundValue:
    """Sturdiness bound for shifted r-wise t-intersecting k-uniform families."""
    return BoundValue(
        "shifted-rwise-beta",
        binom(n - t - r - 1, k - t - r),
        n >= (t + r) * (k - t - r + 2) + 2,
        "n >= (t+r)(k-t-r+2)+2",
    )


def r_wise_beta_bound(n: int, k: int, t: int, r: int) -> BoundValue:
    """Sturdiness bound for r-wise t-intersecting k-uniform families, large n."""
    return BoundValue(
        "rwise-beta",
        binom(n - t - r - 1, k - t - r),
        n >= 2 * (t + r + 1) ** 2 * k ** 2,
        "n >= 2(t+r+1)^2 k^2",
    )


def beta_vs_diversity_bound(n: int, k: int, gamma: int) -> Fraction:
    """For k-uniform families, sturdiness is at most k/(n-1) times diversity."""
    if n < 2:
        raise ValueError("requires n >= 2")
    return Fraction(k * gamma, n - 1)


def beta_vs_size_bound(n: int, size: int) -> Fraction:
    """Sturdiness is at most n/(4(n-1)) times the member count."""
    if n < 2:
        raise ValueError("requires n >= 2")
    return Fraction(n * size, 4 * (n - 1))


def beta_vs_size_bound_odd(n: int, size: int) -> Fraction:
    """Refinement for odd n = 2l+1: at most (l+1)/(2(2l+1)) times the count."""
    if n < 3 or n % 2 == 0:
        raise ValueError("requires odd n >= 3")
    ell = (n - 1) // 2
    return Fraction((ell + 1) * size, 2 * (2 * ell + 1))


def cross_degree_product_bound(n: int, k: int) -> BoundValue:
    """Minimum-degree product bound for cross-intersecting k-uniform pairs."""
    return BoundValue(
        "cross-degree-product", binom(n - 2, k - 2) ** 2, n > 2 * k, "n > 2k"
    )


def cross_distance_size_bound(n: int, w: int) -> BoundValue:
    """Size bound for the smaller of two families at pairwise distance <= w."""
    if w < 0:
        raise ValueError("requires w >= 0")
    s, odd = divmod(w, 2)
    value = sum(binom(n, j) for j in range(s + 1))
    if odd:
        value += binom(n - 1, s)
    return BoundValue("cross-distance-size", value, True, "w >= 0")


def diameter_beta_bound(n: int, w: int) -> BoundValue:
    """Sturdiness bound for families of diameter at most w."""
    if w < 0:
        raise ValueError("requires w >= 0")
    s, odd = divmod(w, 2)
    value = sum(binom(n - 2, j) for j in range(s))
    if odd:
        value += binom(n - 3, s - 1)
    return BoundValue("diameter-beta", value, True, "w >= 0")


def union_beta_bound(n: int, u: int) -> BoundValue:
    """Sturdiness bound for u-union families, split by the parity of u."""
    if u < 0:
        raise ValueError("requires u >= 0")
    s, odd = divmod(u, 2)
    if not odd:
        value = sum(binom(n - 2, j) for j in range(s))
        return BoundValue("union-beta", value, True, "u even")
    value = binom(n - 4, s - 2) + sum(binom(n - 2, j) for j in range(s))
    return BoundValue(
        "union-beta",
        value,
        n >= max(4 * (s + 2) ** 2, 36 * (s + 7)),
        "u odd and n >= max{4(s+2)^2, 36(s+7)}",
    )


def cross_intersecting_size_bound(n: int, k: int, t: int) -> BoundValue:
    """Joint size bound for a (t+1)-intersecting (k+t)-uniform family crossed
    with a k-uniform one."""
    return BoundValue(
        "cross-intersecting-size",
        1 + binom(n, k) - binom(n - k - t, k),
        n >= 2 * k + t,
        "n >= 2k+t",
    )


def t_intersecting_size_bound(n: int, k: int, t: int) -> BoundValue:
    """Size bound C(n, k-t) for t-intersecting k-uniform families."""
    return BoundValue(
        "t-intersecting-size", binom(n, k - t), n > 2 * k - t, "n > 2k-t"
    )


def hilton_milner_size_bound(n: int, k: int) -> BoundValue:
    """Size bound for non-trivial (non-star) intersecting k-uniform families."""
    return BoundValue(
        "hilton-milner-size",
        binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1,
        n >= 2 * k + 1,
        "n >= 2k+1",
    )


def intersecting_gamma_bound(n: int, k: int) -> BoundValue:
    """Diversity bound C(n-3, k-2) for intersecting k-uniform families, large n."""
    return BoundValue(
        "intersecting-gamma", binom(n - 3, k - 2), n > 36 * k, "n > 36k"
    )


def triangle_remainder_bound(n: int, k: int, alpha: Fraction) -> Fraction:
    """18 alpha C(n-33, k-33): members left outside the best triangle window."""
    return 18 * alpha * binom(n - 33, k - 33)


def conjectured_union_beta(n: int, s: int) -> BoundValue:
    """Conjectured sturdiness bound for (2s+1)-union families."""
    value = sum(binom(n - 2, j) for j in range(s)) + binom(n - 4, s - 2)
    return BoundValue("conjectured-union-beta", value, n >= 4 * (s + 1), "n >= 4(s+1)")


def conjectured_diameter_beta(n: int, s: int) -> BoundValue:
    """Conjectured sturdiness bound for diameter-(2s+1) families."""
    value = sum(binom(n - 2, j) for j in range(s)) + binom(n - 4, s - 2)
    return BoundValue("conjectured-diameter-beta", value, n >= 4 * (s + 1), "n >= 4(s+1)")


def conjectured_iu_beta(n: int) -> BoundValue:
    """Conjectured sturdiness bound 2^(n-4) for IU families."""
    value: int | Fraction
    value = 1 << (n - 4) if n >= 4 else Fraction(1, 1 << (4 - n))
    return BoundValue("conjectured-iu-beta", value, n >= 1, "n >= 1")


def hamming_ball_beta(n: int, s: int) -> int:
    """Exact sturdiness of the radius-s ball around the empty set."""
    if not 0 <= s <= n:
        raise ValueError("requires 0 <= s <= n")
    return sum(binom(n - 2, j) for j in range(s))


def diameter_example_beta(n: int, s: int) -> int:
    """Exact sturdiness of the ball-plus-triangle diameter example."""
    if s < 1 or n < 2 * (s + 1):
        raise ValueError("requires s >= 1 and n >= 2(s+1)")
    return sum(binom(n - 2, j) for j in range(s)) + binom(n - 4, s - 2)


def example_511_beta(n: int, s: int, beta_g: int) -> int:
    """Sturdiness of an intersecting (s+1)-graph joined with everything of
    size at most s, given the graph's own sturdiness."""
    return beta_g + sum(binom(n - 2, i) for i in range(s))


def example_511_gamma(n: int, s: int, gamma_g: int) -> int:
    return gamma_g + sum(binom(n - 1, i) for i in range(s + 1))


def example_511_size_bound(n: int, s: int) -> BoundValue:
    value = binom(n - 1, s) + sum(binom(n, i) for i in range(s + 1))
    return BoundValue("example511-size", value, n >= 2 * s + 2, "n >= 2s+2")


def density_limit(alpha: Fraction, t: int, ell: int) -> Fraction:
    """Limit of C(n-t, k-l)/C(n, k) along k/n -> alpha: alpha^l (1-alpha)^(t-l)."""
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie strictly between 0 and 1")
    return alpha ** ell * (1 - alpha) ** (t - ell)
