"""Registered verification claims: each maps an identifier to a deterministic
check of one exact identity, bound, or construction property, returning a
verdict plus the numbers behind it.  The ``verify`` CLI command runs these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import constructions as cons
from . import formulas as fx
from . import metrics as mx
from . import search as sx
from . import transforms as tf
from .families import SetFamily, Subset, complement_family, mask_of


# ---------------------------------------------------------------------------
# Seeded corpora
# ---------------------------------------------------------------------------

def random_family(rng: random.Random, n: int, max_members: int | None = None) -> SetFamily:
    cap = min(1 << n, 40 if max_members is None else max_members)
    m = rng.randint(0, cap)
    masks = rng.sample(range(1 << n), m)
    return SetFamily.from_masks(n, masks)


def random_nested_pair(rng: random.Random, n: int) -> tuple[SetFamily, SetFamily]:
    big = random_family(rng, n)
    keep = [m for m in big.masks if rng.random() < 0.6]
    return SetFamily.from_masks(n, keep), big


def random_saturated(rng: random.Random, n: int, k: int, t: int) -> SetFamily:
    """A random maximal t-intersecting k-uniform family: greedy over a
    shuffled scan order (maximal greedy growth is saturation)."""
    masks = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    rng.shuffle(masks)
    chosen: list[int] = []
    for m in masks:
        if all((m & c).bit_count() >= t for c in chosen):
            chosen.append(m)
    return SetFamily.from_masks(n, chosen)


def random_t_intersecting(rng: random.Random, n: int, k: int, t: int) -> SetFamily:
    sat = random_saturated(rng, n, k, t)
    keep = [m for m in sat.masks if rng.random() < 0.7]
    if not keep:
        keep = [sat.masks[0]]
    return SetFamily.from_masks(n, keep)


def _count_contains_avoids(family: SetFamily, j: int, i: int) -> int:
    """Members containing j and avoiding i."""
    bj, bi = 1 << (j - 1), 1 << (i - 1)
    return sum(1 for m in family.masks if m & bj and not m & bi)


# ---------------------------------------------------------------------------
# Claim plumbing
# ---------------------------------------------------------------------------

@dataclass
class ClaimResult:
    cid: str
    passed: bool
    details: dict
    notes: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class Claim:
    cid: str
    summary: str
    anchor: str
    fn: Callable[[int, int], ClaimResult]


def _claim_eq5(seed: int, workers: int) -> ClaimResult:
    values = {n: mx.sturdiness(cons.power_set(n)) for n in range(2, 13)}
    ok = all(v == 1 << (n - 2) for n, v in values.items())
    return ClaimResult("eq5", ok, {"beta": values})


def _claim_eq6(seed: int, workers: int) -> ClaimResult:
    bad = []
    for n in range(2, 13):
        for k in range(0, n + 1):
            got = mx.sturdiness(cons.k_level(n, k))
            if got != fx.binom(n - 2, k - 1):
                bad.append((n, k, got))
    return ClaimResult("eq6", not bad, {"mismatches": bad})


def _claim_duality(seed: int, workers: int) -> ClaimResult:
    rng = random.Random(seed)
    checked = 0
    for _ in range(1000):
        n = rng.randint(2, 10)
        fam = random_family(rng, n)
        if mx.sturdiness(fam) != mx.sturdiness(complement_family(fam)):
            return ClaimResult("prop12-duality", False, {"counterexample_n": n})
        checked += 1
    return ClaimResult("prop12-duality", True, {"families_checked": checked})


def _claim_monotonicity(seed: int, workers: int) -> ClaimResult:
    rng = random.Random(seed)
    for _ in range(500):
        n = rng.randint(2, 10)
        small, big = random_nested_pair(rng, n)
        if not mx.link_matrix(small).entrywise_le(mx.link_matrix(big)):
            return ClaimResult("eq3-monotonicity", False, {"counterexample_n": n})
    return ClaimResult("eq3-monotonicity", True, {"pairs_checked": 500})


def _claim_triangle(seed: int, workers: int) -> ClaimResult:
    details = {}
    ok = True
    for n, k in [(8, 4), (9, 3)]:
        fam = cons.triangle(n, k)
        cases = fx.triangle_beta_cases(n, k)
        got = {
            "outer_outer": _count_contains_avoids(fam, n, n - 1),
            "inner_outer": _count_contains_avoids(fam, 1, n),
            "outer_inner": _count_contains_avoids(fam, n, 1),
            "inner_inner": _count_contains_avoids(fam, 1, 2),
        }
        want = {
            "outer_outer": cases.outer_outer,
            "inner_outer": cases.inner_outer,
            "outer_inner": cases.outer_inner,
            "inner_inner": cases.inner_inner,
        }
        beta = mx.sturdiness(fam)
        details[f"({n},{k})"] = {"counted": got, "formula": want, "beta": beta}
        ok = ok and got == want and beta == cases.minimum == fx.binom(n - 4, k - 3)
    return ClaimResult("claim16", ok, details)


def _uniform_corpus(rng: random.Random) -> list[SetFamily]:
    fams = [
        cons.triangle(8, 4),
        cons.triangle(9, 3),
        cons.frankl(9, 4, 1, 2),
        cons.f0(8, 4),
        cons.k_level(7, 3),
        cons.star(8, 4, 1),
    ]
    for _ in range(20):
        n = rng.randint(4, 9)
        k = rng.randint(2, max(2, n // 2))
        fams.append(random_t_intersecting(rng, n, k, 1))
    return fams


def _claim_ineq9(seed: int, workers: int) -> ClaimResult:
    rng = random.Random(seed)
    checked = 0
    for fam in _uniform_corpus(rng):
        k = fam.uniform_k
        if k is None or fam.n < 2:
            continue
        lhs = mx.sturdiness(fam)
        rhs = fx.beta_vs_diversity_bound(fam.n, k, mx.diversity(fam))
        if Fraction(lhs) > rhs:
            return ClaimResult("ineq9", False, {"n": fam.n, "k": k, "beta": lhs, "rhs": str(rhs)})
        checked += 1
    return ClaimResult("ineq9", True, {"families_checked": checked})


def _claim_cor22(seed: int, workers: int) -> ClaimResult:
    details = {}
    ok = True
    for n in (12, 13, 14):
        a1 = cons.frankl(n, 4, 1, 1)
        bound = fx.shifted_r_wise_beta_bound(n, 4, 1, 2)
        shifted = mx.is_shifted(a1)
        beta = mx.sturdiness(a1)
        details[f"A1({n},4,1)"] = {"beta": beta, "bound": bound.value, "applicable": bound.applicable}
        ok = ok and shifted and bound.applicable and beta <= bound.value
    a2 = cons.frankl(14, 5, 1, 2)
    bound = fx.shifted_r_wise_beta_bound(14, 5, 1, 2)
    ok = ok and mx.is_shifted(a2) and bound.applicable and mx.sturdiness(a2) <= bound.value
    details["A2(14,5,1)"] = {"beta": mx.sturdiness(a2), "bound": bound.value}
    return ClaimResult("cor22", ok, details)


def _claim_frankl_beta(seed: int, workers: int) -> ClaimResult:
    rng = random.Random(seed)
    details = {}
    ok = True
    for n, k, t in [(8, 4, 1), (10, 5, 2), (11, 5, 1)]:
        got = mx.sturdiness(cons.frankl(n, k, t, 1))
        want = fx.frankl_beta(n, k, t, 1)
        details[f"A1({n},{k},{t})"] = {"counted": got, "formula": want}
        ok = ok and got == want
    got2 = mx.sturdiness(cons.frankl(12, 6, 1, 2))
    ok = ok and got2 == fx.frankl_beta(12, 6, 1, 2) == 66
    details["A2(12,6,1)"] = {"counted": got2, "formula": 66}
    base = cons.frankl_tilde(9, 4, 1)
    top = cons.frankl(9, 4, 1, 1)
    extra = [m for m in top.masks if not base.has_mask(m)]
    want = mx.sturdiness(top)
    for _ in range(5):
        mid = SetFamily.from_masks(9, base.masks + tuple(m for m in extra if rng.random() < 0.5))
        ok = ok and mx.sturdiness(mid) == want
    details["sandwich(9,4,1)"] = {"beta": want}
    return ClaimResult("frankl-beta", ok, details)


def _claim_frankl_ratio(seed: int, workers: int) -> ClaimResult:
    r50 = fx.frankl_beta_ratio(97, 50, 1)
    r_small = fx.frankl_beta_ratio(10, 5, 1)
    ok = (
        abs(r50.exact - Fraction(5, 4)) < Fraction(15, 1000)
        and r50.asymptotic == Fraction(5, 4)
        and r_small.exact == Fraction(17, 15)
        and r_small.asymptotic == Fraction(17, 25)
    )
    return ClaimResult(
        "frankl-ratio",
        ok,
        {"exact_k50": str(r50.exact), "exact_small": str(r_small.exact),
         "asymptotic_small": str(r_small.asymptotic)},
        notes=["the printed ratio chain is asymptotic: at (t,k,n)=(1,5,10) the exact "
               "value 17/15 > 1 while the limit form 17/25 < 1"],
    )


def _claim_g0(seed: int, workers: int) -> ClaimResult:
    sels = sx.regular_selections()
    degrees_ok = all(set(mx.degree_vector(s)) == {5} for s in sels)
    tau_ok = all(mx.transversal_number(s) == 3 for s in sels)
    n4_ok = all(fx.g0_stats(s).covered_counts[4] == 15 for s in sels)
    co_constant = sum(
        1 for s in sels
        if len({fx.g0_stats(s).codegrees[i][j] for i in range(6) for j in range(6) if i != j}) == 1
    )
    return ClaimResult(
        "g0-prop51",
        bool(sels) and degrees_ok and tau_ok and n4_ok,
        {"selections": len(sels), "constant_codegree_selections": co_constant},
        notes=[f"{co_constant} of {len(sels)} regular selections have constant pair "
               "co-degree 2 (recorded, not asserted)"],
    )


def _claim_f0(seed: int, workers: int) -> ClaimResult:
    stats = fx.g0_stats(cons.g0())
    details = {}
    ok = True
    for n, k in [(8, 4), (9, 4), (13, 5)]:
        fam = cons.f0(n, k)
        derived = fx.f0_link_formulas(n, k, stats)
        brute = {
            "both_outside": _count_contains_avoids(fam, n, n - 1),
            "i_inside": _count_contains_avoids(fam, 7, 1),
            "j_inside": _count_contains_avoids(fam, 1, 7),
            "both_inside": _count_contains_avoids(fam, 2, 1),
        }
        want = {
            "both_outside": derived.both_outside,
            "i_inside": derived.i_inside,
            "j_inside": derived.j_inside,
            "both_inside": derived.both_inside,
        }
        details[f"({n},{k})"] = {"counted": brute, "derived": want}
        ok = ok and brute == want
    printed = fx.f0_link_formulas_printed(13, 5)
    derived = fx.f0_link_formulas(13, 5, stats)
    return ClaimResult(
        "f0-prop36",
        ok,
        details,
        notes=[f"printed coefficient 16 gives {printed.both_outside} at (13,5); the "
               f"selection-derived coefficient 15 gives {derived.both_outside}, "
               "matching the brute count"],
    )


def _claim_lemma41(seed: int, workers: int) -> ClaimResult:
    rng = random.Random(seed)
    checked = 0
    for _ in range(20):
        fam = random_saturated(rng, 8, 4, 1)
        b = tf.basis(fam, 1)
        bf = b.to_family()
        antichain = all(
            not (p & ~q == 0 or q & ~p == 0) for p, q in combinations(b.masks, 2)
        )
        t_int = mx.is_t_intersecting(bf, 1)
        regen = tf.generated(bf, 8, 4) == fam
        if not (antichain and t_int and regen):
            return ClaimResult("lemma41", False, {"failed_after": checked})
        checked += 1
    return ClaimResult("lemma41", True, {"families_checked": checked})


def _claim_lemma42(seed: int, workers: int) -> ClaimResult:
    rng = random.Random(seed)
    checked = 0
    for n in (8, 9):
        for _ in range(10):
            fam = random_saturated(rng, n, 4, 1)
            if mx.t_transversal_number(fam, 1) < 2:
                continue
            levels = tf.basis_levels(tf.basis(fam, 1))
            lhs = tf.lemma42_lhs(levels, 4, 1)
            if lhs > 1:
                return ClaimResult("lemma42", False, {"n": n, "lhs": str(lhs)})
            checked += 1
    return ClaimResult("lemma42", True, {"families_checked": checked})


def _claim_lemma43(seed: int, workers: int) -> ClaimResult:
    fam = tf.saturate(cons.frankl(10, 5, 1, 2), 1)
    rep = tf.lemma43_check(fam, 1)
    ok = rep.applicable and rep.holds and set(rep.counts.values()) == {4} and rep.bound == 48
    details = {"A2(10,5,1)": {"bound": rep.bound, "counts": rep.counts,
                              "applicable": rep.applicable, "holds": rep.holds}}
    rng = random.Random(seed)
    applicable = 0
    for _ in range(15):
        f = random_saturated(rng, 9, 4, 1)
        r = tf.lemma43_check(f, 1)
        if r.applicable:
            applicable += 1
            ok = ok and r.holds
    details["random(9,4,1)_applicable"] = applicable
    return ClaimResult("lemma43", ok, details)


def _claim_fact51(seed: int, workers: int) -> ClaimResult:
    rng = random.Random(seed)
    checked = 0
    for _ in range(200):
        n = rng.randint(2, 8)
        fam = random_family(rng, n)
        beta = mx.sturdiness(fam)
        if Fraction(beta) > fx.beta_vs_size_bound(n, len(fam)):
            return ClaimResult("fact51", False, {"n": n})
        if n % 2 == 1 and n >= 3:
            if Fraction(beta) > fx.beta_vs_size_bound_odd(n, len(fam)):
                return ClaimResult("fact51", False, {"n": n, "odd_case": True})
        checked += 1
    return ClaimResult("fact51", True, {"families_checked": checked})


def _claim_thm18i(seed: int, workers: int) -> ClaimResult:
    bound = fx.any_t_intersecting_beta_bound(4, 2)
    res = sx.max_beta(sx.ConstraintSpec.t_intersecting_any(4, 2), workers=workers)
    ok = res.exhausted and res.value <= bound.value
    rng = random.Random(seed)
    for _ in range(100):
        n = rng.randint(3, 7)
        t = rng.randint(1, n - 1)
        if (n - t) % 2 != 0:
            t = max(1, t - 1)
        if (n - t) % 2 != 0 or t < 1:
            continue
        fam = random_family(rng, n)
        if not mx.is_t_intersecting(fam, t):
            continue
        if mx.sturdiness(fam) > fx.any_t_intersecting_beta_bound(n, t).value:
            return ClaimResult("thm18i", False, {"n": n, "t": t})
    return ClaimResult("thm18i", ok, {"max_beta_n4_t2": res.value, "bound": bound.value})


def _claim_thm56_tight(seed: int, workers: int) -> ClaimResult:
    ball = cons.hamming_ball(6, 1)
    bound = fx.diameter_beta_bound(6, 2)
    beta = mx.sturdiness(ball)
    ok = mx.diameter(ball) == 2 and beta == bound.value == 1
    ball82 = cons.hamming_ball(8, 2)
    ok = ok and mx.sturdiness(ball82) == fx.hamming_ball_beta(8, 2) == 7
    return ClaimResult("thm56-tight", ok, {"beta_ball_6_1": beta, "bound": bound.value,
                                           "beta_ball_8_2": mx.sturdiness(ball82)})


def _claim_example511(seed: int, workers: int) -> ClaimResult:
    graph = cons.triangle(9, 3)
    fam = cons.example_511(9, 2, graph)
    got = mx.sturdiness(fam)
    want = fx.example_511_beta(9, 2, mx.sturdiness(graph))
    return ClaimResult("example511", got == want, {"counted": got, "formula": want})


def _claim_fact64(seed: int, workers: int) -> ClaimResult:
    # the hypothesis asks for an IU family admitting an intersecting/union split
    rng = random.Random(seed)
    fams = [SetFamily.from_elements(4, [(1, 2), (2, 3), (1, 3), (1, 2, 3)])]
    for _ in range(400):
        n = rng.randint(4, 6)
        fams.append(random_family(rng, n, max_members=24))
    checked = 0
    for fam in fams:
        n = fam.n
        if not mx.is_iu(fam):
            continue
        for xm in range(1 << n):
            if mx.split_check(fam, Subset(xm)):
                checked += 1
                if Fraction(mx.sturdiness(fam)) > fx.conjectured_iu_beta(n).value:
                    return ClaimResult("fact64", False, {"n": n, "window": xm})
                break
    return ClaimResult("fact64", True, {"split_passing_families": checked})


def _claim_katona(seed: int, workers: int) -> ClaimResult:
    details = {}
    ok = True
    for n, t in [(4, 1), (5, 2)]:
        fam = cons.katona_family(n, t)
        res = sx.max_size(sx.ConstraintSpec.t_intersecting_any(n, t), workers=workers)
        bound = fx.katona_size_bound(n, t)
        details[f"({n},{t})"] = {"construction": len(fam), "search_max": res.value,
                                 "bound": bound.value}
        ok = ok and res.exhausted and len(fam) == res.value == bound.value
    printed = fx.katona_size_bound_printed(5, 2)
    return ClaimResult(
        "katona-bruteforce", ok, details,
        notes=[f"first-binomial-lowered variant gives {printed.value} at (5,2); "
               f"exhaustive search gives {details['(5,2)']['search_max']}"],
    )


def _claim_thm15(seed: int, workers: int) -> ClaimResult:
    res = sx.max_beta(sx.ConstraintSpec.t_intersecting_any(4, 1), workers=workers)
    bound = fx.any_intersecting_beta_bound(4)
    ok = res.exhausted and res.value <= bound.value
    return ClaimResult("thm15", ok, {"max_beta": res.value, "bound": bound.value})


CLAIMS: dict[str, Claim] = {
    c.cid: c
    for c in [
        Claim("eq5", "sturdiness of the power set", "beta(2^[n]) = 2^(n-2)", _claim_eq5),
        Claim("eq6", "sturdiness of the full k-level", "beta([n] choose k) = C(n-2,k-1)", _claim_eq6),
        Claim("prop12-duality", "sturdiness is complementation-invariant",
              "beta(F) = beta(F^c)", _claim_duality),
        Claim("eq3-monotonicity", "link counts grow with the family",
              "F within G implies b(F) <= b(G) entrywise", _claim_monotonicity),
        Claim("claim16", "triangle family link counts and sturdiness",
              "beta(T(n,k)) = C(n-4,k-3) for n >= 2k", _claim_triangle),
        Claim("ineq9", "sturdiness against diversity for uniform families",
              "beta <= k/(n-1) * gamma", _claim_ineq9),
        Claim("cor22", "shifted pairwise-intersecting sturdiness bound",
              "beta <= C(n-t-r-1,k-t-r) for shifted r-wise t-intersecting", _claim_cor22),
        Claim("frankl-beta", "sturdiness of the first two Frankl families",
              "beta(A1) = C(n-t-3,k-t-2); beta(A2) = (t+3)C(n-t-5,k-t-3)+C(n-t-5,k-t-4)",
              _claim_frankl_beta),
        Claim("frankl-ratio", "exact vs limit form of beta(A2)/beta(A1)",
              "ratio -> (t+3)/c - (t+2)/c^2 with c = (n-t-4)/(k-t-3)", _claim_frankl_ratio),
        Claim("g0-prop51", "regular 10-edge selections on [6]",
              "degrees all 5 and transversal number 3", _claim_g0),
        Claim("f0-prop36", "link counts of the up-closure of the regular selection",
              "four case formulas from selection-derived coefficients", _claim_f0),
        Claim("lemma41", "basis of a saturated family",
              "basis is a t-intersecting antichain regenerating the family", _claim_lemma41),
        Claim("lemma42", "weighted basis-level sum",
              "sum |B^(l)| / (C(l,t) l k^(l-t-1)) <= 1", _claim_lemma42),
        Claim("lemma43", "branching bound on level-(t+2) basis members",
              "|B^(t+2) avoiding y| <= 4(t+1)(k-t+2)", _claim_lemma43),
        Claim("fact51", "sturdiness against the member count",
              "beta <= n/(4(n-1)) |F|, refined for odd n", _claim_fact51),
        Claim("thm18i", "non-uniform t-intersecting sturdiness, even gap",
              "beta <= sum_{j<s} C(n-2,j) when n-t = 2s", _claim_thm18i),
        Claim("thm56-tight", "diameter bound met by the ball",
              "beta(B_s(empty)) = sum_{j<s} C(n-2,j)", _claim_thm56_tight),
        Claim("example511", "sturdiness of graph-plus-small-sets families",
              "beta(F) = beta(G) + sum_{i<s} C(n-2,i)", _claim_example511),
        Claim("fact64", "split condition forces the IU sturdiness bound",
              "intersecting/union split implies beta <= 2^(n-4)", _claim_fact64),
        Claim("katona-bruteforce", "extremal t-intersecting sizes at desk scale",
              "construction size = exhaustive maximum", _claim_katona),
        Claim("thm15", "non-uniform intersecting sturdiness",
              "beta <= 2^(n-3)", _claim_thm15),
    ]
}


def run_claim(cid: str, seed: int = 0, workers: int = 1) -> ClaimResult:
    if cid not in CLAIMS:
        raise KeyError(cid)
    return CLAIMS[cid].fn(seed, workers)


def run_claims(cids: list[str], seed: int = 0, workers: int = 1) -> list[ClaimResult]:
    return [run_claim(cid, seed, workers) for cid in cids]
