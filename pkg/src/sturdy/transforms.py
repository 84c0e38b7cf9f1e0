"""Family transformations and structural decompositions: compressions to a
shifted fixpoint, the coordinatewise partial order, saturation of
t-intersecting uniform families, basis extraction, and the exact quantities
attached to the basis levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .families import SetFamily, Subset, elements_of, mask_of
from .metrics import is_t_intersecting, is_t_transversal, t_transversal_number


def shift_once(family: SetFamily, i: int, j: int) -> SetFamily:
    """Replace j by i (i < j) in every member whose swap is absent."""
    if not 1 <= i < j <= family.n:
        raise ValueError("requires 1 <= i < j <= n")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    have = family._mask_set
    out = []
    for m in family.masks:
        if m & bj and not m & bi:
            swap = (m ^ bj) | bi
            out.append(m if swap in have else swap)
        else:
            out.append(m)
    return SetFamily.from_masks(family.n, out)


def shift_closure(family: SetFamily) -> SetFamily:
    """Apply compressions in lexicographic (i, j) order until a full sweep is
    a no-op.  Terminates because every change strictly lowers the total
    element sum."""
    cur = family
    while True:
        changed = False
        for i in range(1, cur.n):
            for j in range(i + 1, cur.n + 1):
                nxt = shift_once(cur, i, j)
                if nxt != cur:
                    cur = nxt
                    changed = True
        if not changed:
            return cur


def precedes(a: Subset, b: Subset) -> bool:
    """Coordinatewise comparison of the sorted element lists of equal-size sets."""
    ae, be = a.elements, b.elements
    if len(ae) != len(be):
        raise ValueError("sets must have equal size")
    return all(x <= y for x, y in zip(ae, be))


def is_downclosed(family: SetFamily) -> bool:
    """Closed under single-element decrements within each size level; this is
    equivalent to being shifted."""
    have = family._mask_set
    for m in family.masks:
        for x in elements_of(m):
            if x == 1:
                continue
            lower = 1 << (x - 2)
            if m & lower:
                continue
            if ((m ^ (1 << (x - 1))) | lower) not in have:
                return False
    return True


def _k_level_masks(n: int, k: int) -> list[int]:
    return [mask_of(c) for c in combinations(range(1, n + 1), k)]


def saturate(family: SetFamily, t: int) -> SetFamily:
    """Grow a k-uniform t-intersecting family to a maximal one by scanning all
    k-sets in lexicographic order and adding greedily until a fixpoint.

    Maximal supersets are not unique; the fixed scan order makes this one
    deterministic.
    """
    if not family.masks:
        raise ValueError("cannot saturate the empty family")
    k = family.uniform_k
    if k is None:
        raise ValueError("family must be k-uniform")
    if not is_t_intersecting(family, t):
        raise ValueError("family must be t-intersecting")
    current = list(family.masks)
    candidates = _k_level_masks(family.n, k)
    have = set(current)
    while True:
        added = False
        for cand in candidates:
            if cand in have:
                continue
            if all((cand & m).bit_count() >= t for m in current):
                current.append(cand)
                have.add(cand)
                added = True
        if not added:
            return SetFamily.from_masks(family.n, current)


def is_saturated(family: SetFamily, t: int) -> bool:
    """No further k-set can be added without breaking the t-intersecting property."""
    k = family.uniform_k
    if k is None:
        raise ValueError("family must be k-uniform and nonempty")
    masks = family.masks
    have = family._mask_set
    for cand in _k_level_masks(family.n, k):
        if cand in have:
            continue
        if all((cand & m).bit_count() >= t for m in masks):
            return False
    return True


@dataclass(frozen=True)
class Basis:
    """Containment-minimal t-transversals of size at most k of a saturated
    family; an antichain that regenerates the family by up-closure."""

    n: int
    t: int
    k: int
    masks: tuple[int, ...]

    def to_family(self) -> SetFamily:
        return SetFamily.from_masks(self.n, self.masks)

    def level(self, ell: int) -> tuple[int, ...]:
        return tuple(m for m in self.masks if m.bit_count() == ell)


def basis(family: SetFamily, t: int) -> Basis:
    """Extract the basis of a saturated t-intersecting k-uniform family.

    Enumerates candidate transversals level by level over subsets of the
    union of the members, pruning supersets of minimal transversals already
    found; exact, intended for n <= 20 and k <= 6.
    """
    k = family.uniform_k
    if k is None or not family.masks:
        raise ValueError("family must be k-uniform and nonempty")
    if not is_t_intersecting(family, t):
        raise ValueError("family must be t-intersecting")
    if not is_saturated(family, t):
        raise ValueError("family must be saturated")
    masks = family.masks
    tau = t_transversal_number(family, t)
    universe = elements_of(family.union_mask)
    found: list[int] = []
    for ell in range(tau, k + 1):
        for combo in combinations(universe, ell):
            cm = mask_of(combo)
            if any(b & ~cm == 0 for b in found):
                continue
            if is_t_transversal(cm, masks, t):
                found.append(cm)
    return Basis(family.n, t, k, tuple(sorted(found, key=elements_of)))


def generated(seed: SetFamily, n: int, k: int) -> SetFamily:
    """Up-closure inside the k-level of [n]: all k-sets containing a seed member."""
    if n < seed.n:
        raise ValueError("target ground set must contain the seed's")
    out: set[int] = set()
    for b in seed.masks:
        size = b.bit_count()
        if size > k:
            raise ValueError("seed member larger than k")
        others = [e for e in range(1, n + 1) if not b >> (e - 1) & 1]
        for rest in combinations(others, k - size):
            out.add(b | mask_of(rest))
    return SetFamily.from_masks(n, out)


@dataclass(frozen=True)
class BasisLevels:
    """The basis partitioned by member size, plus the least prefix size r at
    which the t-transversal number of the prefix exceeds t."""

    n: int
    t: int
    k: int
    levels: dict[int, tuple[int, ...]]
    r: int


def basis_levels(b: Basis) -> BasisLevels:
    levels: dict[int, tuple[int, ...]] = {}
    for m in b.masks:
        levels.setdefault(m.bit_count(), ())
    levels = {ell: b.level(ell) for ell in sorted({m.bit_count() for m in b.masks})}
    for r in range(min(levels, default=b.k), b.k + 1):
        prefix = [m for m in b.masks if m.bit_count() <= r]
        if not prefix:
            continue
        fam = SetFamily.from_masks(b.n, prefix)
        if t_transversal_number(fam, b.t) >= b.t + 1:
            return BasisLevels(b.n, b.t, b.k, levels, r)
    raise ValueError(
        "every basis prefix admits a t-transversal of size t; no valid r exists"
    )


def lemma42_lhs(levels: BasisLevels, k: int, t: int) -> Fraction:
    """Exact weighted count sum over the basis levels from r up to k."""
    total = Fraction(0)
    for ell in range(levels.r, k + 1):
        count = len(levels.levels.get(ell, ()))
        if count:
            from .formulas import binom

            weight = binom(ell, t) * ell * k ** (ell - t - 1)
            total += Fraction(count, weight)
    return total


@dataclass(frozen=True)
class Lemma43Report:
    """Per-point counts of level-(t+2) basis members avoiding the point,
    checked against the branching bound 4(t+1)(k-t+2)."""

    applicable: bool
    reason: str | None
    t: int
    k: int
    bound: int
    counts: dict[int, int]
    holds: bool


def lemma43_check(family: SetFamily, t: int) -> Lemma43Report:
    k = family.uniform_k
    if k is None or not family.masks:
        return Lemma43Report(False, "family not k-uniform or empty", t, 0, 0, {}, True)
    bound = 4 * (t + 1) * (k - t + 2)
    if not is_t_intersecting(family, t) or not is_saturated(family, t):
        return Lemma43Report(False, "family not saturated t-intersecting", t, k, bound, {}, True)
    if t_transversal_number(family, t) != t + 2:
        return Lemma43Report(False, "t-transversal number differs from t+2", t, k, bound, {}, True)
    b = basis(family, t)
    level = b.level(t + 2)
    if not level:
        return Lemma43Report(False, "no basis members of size t+2", t, k, bound, {}, True)
    level_fam = SetFamily.from_masks(family.n, level)
    if t_transversal_number(level_fam, t) < t + 1:
        return Lemma43Report(
            False, "level t+2 of the basis has a size-t t-transversal", t, k, bound, {}, True
        )
    union = 0
    for m in level:
        union |= m
    counts = {
        y: sum(1 for m in level if not m >> (y - 1) & 1) for y in elements_of(union)
    }
    holds = all(c <= bound for c in counts.values())
    return Lemma43Report(True, None, t, k, bound, counts, holds)
