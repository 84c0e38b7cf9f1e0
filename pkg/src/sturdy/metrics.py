"""Family invariants and predicates: link counts, sturdiness, diversity,
degrees, transversal numbers, and structure recognizers.

The central quantity is the link count ``b[i][j]``: the number of members that
contain i and avoid j.  Sturdiness is the minimum of ``b[i][j]`` over ordered
pairs i != j, diversity the minimum number of members avoiding a point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .families import (
    SetFamily,
    Subset,
    complement_family,
    elements_of,
)


def _column_masks(n: int, masks: tuple[int, ...]) -> list[int]:
    """cols[i] has bit ell set iff element i+1 lies in member ell."""
    cols = [0] * n
    for idx, m in enumerate(masks):
        bit = 1 << idx
        while m:
            low = m & -m
            cols[low.bit_length() - 1] |= bit
            m ^= low
    return cols


def _beta_masks(n: int, masks: tuple[int, ...]) -> int:
    """Sturdiness from raw member masks (hot path shared with the search)."""
    if n < 2:
        raise ValueError("sturdiness needs a ground set with at least 2 elements")
    if not masks:
        return 0
    cols = _column_masks(n, masks)
    allm = (1 << len(masks)) - 1
    best: int | None = None
    for i in range(n):
        ci = cols[i]
        for j in range(n):
            if i == j:
                continue
            v = (ci & (allm ^ cols[j])).bit_count()
            if best is None or v < best:
                if v == 0:
                    return 0
                best = v
    return best  # type: ignore[return-value]


@dataclass(frozen=True)
class LinkMatrix:
    """The n x n matrix of link counts; the diagonal is identically zero."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """b[i][j] with 1-based indices."""
        return self.rows[i - 1][j - 1]

    def total(self) -> int:
        return sum(map(sum, self.rows))

    def min_offdiagonal(self) -> int:
        if self.n < 2:
            raise ValueError("no off-diagonal entries for n < 2")
        return min(
            self.rows[i][j] for i in range(self.n) for j in range(self.n) if i != j
        )

    def entrywise_le(self, other: "LinkMatrix") -> bool:
        return self.n == other.n and all(
            a <= b
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )


def link_matrix(family: SetFamily) -> LinkMatrix:
    """Count, for every ordered pair (i, j), the members containing i and avoiding j."""
    n = family.n
    cols = _column_masks(n, family.masks)
    allm = (1 << len(family.masks)) - 1
    rows = tuple(
        tuple(
            0 if i == j else (cols[i] & (allm ^ cols[j])).bit_count()
            for j in range(n)
        )
        for i in range(n)
    )
    return LinkMatrix(n, rows)


def sturdiness(family: SetFamily) -> int:
    """Minimum over ordered pairs i != j of the link count; 0 for the empty family."""
    return _beta_masks(family.n, family.masks)


def diversity(family: SetFamily) -> int:
    """Minimum over points y of the number of members avoiding y."""
    if family.n < 1:
        raise ValueError("empty ground set")
    if not family.masks:
        return 0
    cols = _column_masks(family.n, family.masks)
    return len(family.masks) - max(c.bit_count() for c in cols)


def degree_vector(family: SetFamily) -> list[int]:
    """degree of i = number of members containing i, for i = 1..n."""
    cols = _column_masks(family.n, family.masks)
    return [c.bit_count() for c in cols]


def min_degree(family: SetFamily) -> int:
    return min(degree_vector(family))


# ---------------------------------------------------------------------------
# Intersection / union / distance predicates
# ---------------------------------------------------------------------------

def is_t_intersecting(family: SetFamily, t: int) -> bool:
    """Every two members (repetition allowed) share at least t elements.

    Repetition makes the condition on a single member |F| >= t.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    masks = family.masks
    if any(m.bit_count() < t for m in masks):
        return False
    for a, b in combinations(masks, 2):
        if (a & b).bit_count() < t:
            return False
    return True


def is_intersecting(family: SetFamily) -> bool:
    return is_t_intersecting(family, 1)


def t_intersecting_witness(family: SetFamily, t: int) -> tuple[int, ...] | None:
    """Lexicographically first violating member pair (or single member), as masks."""
    masks = family.masks
    for m in masks:
        if m.bit_count() < t:
            return (m,)
    for a, b in combinations(masks, 2):
        if (a & b).bit_count() < t:
            return (a, b)
    return None


def is_r_wise_t_intersecting(family: SetFamily, r: int, t: int) -> bool:
    """Every r members (repetition allowed) share at least t elements."""
    return r_wise_witness(family, r, t) is None


def r_wise_witness(family: SetFamily, r: int, t: int) -> tuple[int, ...] | None:
    """A minimal violating selection of at most r distinct members, or None.

    DFS over index-increasing selections; a partial intersection below t is
    already a witness, and members that do not shrink the running
    intersection are skipped (they never occur in a minimal witness).
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if t < 1:
        raise ValueError("t must be >= 1")
    masks = family.masks

    def rec(start: int, inter: int, chosen: list[int]) -> tuple[int, ...] | None:
        if inter.bit_count() < t:
            return tuple(chosen)
        if len(chosen) == r:
            return None
        for idx in range(start, len(masks)):
            nxt = inter & masks[idx]
            if nxt == inter:
                continue
            chosen.append(masks[idx])
            hit = rec(idx + 1, nxt, chosen)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return rec(0, family.full_mask, [])


def union_width(family: SetFamily) -> int:
    """Maximum |F u F'| over member pairs, repetition allowed."""
    masks = family.masks
    if not masks:
        raise ValueError("union width of the empty family is undefined")
    best = max(m.bit_count() for m in masks)
    for a, b in combinations(masks, 2):
        v = (a | b).bit_count()
        if v > best:
            best = v
    return best


def is_u_union(family: SetFamily, u: int) -> bool:
    """Every two members (repetition allowed) have union of size at most u."""
    if u < 0:
        raise ValueError("u must be >= 0")
    if not family.masks:
        return True
    return union_width(family) <= u


def diameter(family: SetFamily) -> int:
    """Maximum symmetric-difference distance between two members."""
    masks = family.masks
    if not masks:
        raise ValueError("diameter of the empty family is undefined")
    best = 0
    for a, b in combinations(masks, 2):
        v = (a ^ b).bit_count()
        if v > best:
            best = v
    return best


def is_iu(family: SetFamily) -> bool:
    """Both the family and its complement family are intersecting."""
    return is_intersecting(family) and is_intersecting(complement_family(family))


# ---------------------------------------------------------------------------
# Transversals
# ---------------------------------------------------------------------------

def _t_cover_exists(masks: tuple[int, ...], t: int, chosen: int, budget: int,
                    elem_order: list[int]) -> bool:
    """Can ``chosen`` be extended by at most ``budget`` elements to meet every
    member in at least t points?  Branches on the member with largest deficit."""
    worst = -1
    worst_deficit = 0
    for m in masks:
        d = t - (m & chosen).bit_count()
        if d > worst_deficit:
            worst_deficit = d
            worst = m
    if worst_deficit == 0:
        return True
    if worst_deficit > budget:
        return False
    free = worst & ~chosen
    for e in elem_order:
        bit = 1 << (e - 1)
        if free & bit and _t_cover_exists(masks, t, chosen | bit, budget - 1, elem_order):
            return True
    return False


def t_transversal_number(family: SetFamily, t: int) -> int:
    """Minimum size of a set meeting every member in at least t elements."""
    if t < 1:
        raise ValueError("t must be >= 1")
    masks = family.masks
    if not masks:
        return 0
    if any(m.bit_count() < t for m in masks):
        raise ValueError(f"a member has fewer than t={t} elements; no t-transversal exists")
    degs = degree_vector(family)
    elem_order = sorted(
        elements_of(family.union_mask), key=lambda e: (-degs[e - 1], e)
    )
    for size in range(t, len(elem_order) + 1):
        if _t_cover_exists(masks, t, 0, size, elem_order):
            return size
    raise AssertionError("unreachable: the union of all members is a t-transversal")


def transversal_number(family: SetFamily) -> int:
    """Minimum size of a set meeting every member; the empty set must not be a member."""
    if family.has_mask(0):
        raise ValueError("the empty set is a member; no transversal exists")
    return t_transversal_number(family, 1)


def is_t_transversal(mask: int, masks: tuple[int, ...], t: int) -> bool:
    return all((mask & m).bit_count() >= t for m in masks)


# ---------------------------------------------------------------------------
# Shiftedness, Hamming balls, split condition
# ---------------------------------------------------------------------------

def is_shifted(family: SetFamily) -> bool:
    """Fixed by every compression replacing j by i < j when the result is absent."""
    have = family._mask_set
    n = family.n
    for m in family.masks:
        mm = m
        while mm:
            low = mm & -mm
            j = low.bit_length()
            mm ^= low
            for i in range(1, j):
                bi = 1 << (i - 1)
                if m & bi:
                    continue
                if ((m ^ low) | bi) not in have:
                    return False
    return True


def shifted_witness(family: SetFamily) -> tuple[int, int, int] | None:
    """(i, j, member mask) whose i-for-j swap is missing, or None if shifted."""
    have = family._mask_set
    for m in family.masks:
        for j in elements_of(m):
            for i in range(1, j):
                bi = 1 << (i - 1)
                if m & bi:
                    continue
                if ((m ^ (1 << (j - 1))) | bi) not in have:
                    return (i, j, m)
    return None


def _subsets_lex(n: int, mask: int = 0, lo: int = 1):
    """All subsets of [n] in lexicographic order of their element lists."""
    yield mask
    for e in range(lo, n + 1):
        yield from _subsets_lex(n, mask | 1 << (e - 1), e + 1)


def is_hamming_ball(family: SetFamily) -> tuple[Subset, int] | None:
    """Recognize a sandwiched ball: some center C and radius r with
    B_r(C) inside the family inside B_{r+1}(C).

    Scans all 2^n centers (refused for n > 20) in lexicographic order; for
    the first center admitting a valid radius, the largest one is reported,
    so an exact ball comes back with its own radius.
    """
    n = family.n
    if n > 20:
        raise ValueError("center search refused for n > 20")
    if not family.masks:
        return None
    ball_sizes = [0] * (n + 1)
    acc = 0
    for r in range(n + 1):
        acc += math.comb(n, r)
        ball_sizes[r] = acc
    for center in _subsets_lex(n):
        cnt = [0] * (n + 1)
        dmax = 0
        for m in family.masks:
            d = (m ^ center).bit_count()
            cnt[d] += 1
            if d > dmax:
                dmax = d
        within = 0
        contained = -1  # largest radius whose whole ball lies in the family
        for r in range(n + 1):
            within += cnt[r]
            if within == ball_sizes[r]:
                contained = r
            else:
                break
        if contained >= max(dmax - 1, 0):
            return Subset(center), contained
    return None


def split_check(family: SetFamily, window: Subset) -> bool:
    """Traces on ``window`` form an intersecting family and traces on its
    complement form a union family (no two traces cover it).

    An empty complement side makes the union condition vacuous.
    """
    xm = window.mask
    ym = family.full_mask & ~xm
    traces_x = sorted({m & xm for m in family.masks})
    if family.masks:
        if traces_x and traces_x[0] == 0:
            return False
        for a, b in combinations(traces_x, 2):
            if a & b == 0:
                return False
    if ym:
        traces_y = sorted({m & ym for m in family.masks})
        for a in traces_y:
            if a == ym:
                return False
        for a, b in combinations(traces_y, 2):
            if a | b == ym:
                return False
    return True


def split_witness(family: SetFamily, window: Subset) -> tuple[int, int] | None:
    """A violating trace pair for ``split_check``, as member-trace masks."""
    xm = window.mask
    ym = family.full_mask & ~xm
    traces_x = sorted({m & xm for m in family.masks})
    for a in traces_x:
        if a == 0:
            return (a, a)
    for a, b in combinations(traces_x, 2):
        if a & b == 0:
            return (a, b)
    if ym:
        traces_y = sorted({m & ym for m in family.masks})
        for a in traces_y:
            if a == ym:
                return (a, a)
        for a, b in combinations(traces_y, 2):
            if a | b == ym:
                return (a, b)
    return None


# ---------------------------------------------------------------------------
# Summary report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MetricReport:
    n: int
    member_count: int
    beta: int
    gamma: int
    delta: int
    degrees: tuple[int, ...]
    uniform: bool
    uniform_k: int | None


def metric_report(family: SetFamily) -> MetricReport:
    degs = degree_vector(family)
    return MetricReport(
        n=family.n,
        member_count=len(family),
        beta=sturdiness(family),
        gamma=diversity(family),
        delta=min(degs),
        degrees=tuple(degs),
        uniform=family.is_uniform,
        uniform_k=family.uniform_k,
    )
