"""Deterministic builders for the named families: power set, uniform levels,
stars, triangle and Frankl families, Hamming balls, the regular 10-edge
selection on [6] and its up-closure, plus the extremal examples used by the
size and diameter bounds.

Every builder is a pure function of its parameters and returns a canonical
family, so downstream numbers are reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .families import SetFamily, Subset, mask_of
from .metrics import is_intersecting
from .transforms import generated


def power_set(n: int) -> SetFamily:
    """All subsets of [n]; refused above n = 20 to keep materialization sane."""
    if not 1 <= n <= 20:
        raise ValueError("power_set requires 1 <= n <= 20")
    return SetFamily.from_masks(n, range(1 << n))


def k_level(n: int, k: int) -> SetFamily:
    """All k-subsets of [n]."""
    if not 0 <= k <= n:
        raise ValueError("requires 0 <= k <= n")
    return SetFamily.from_masks(
        n, (mask_of(c) for c in combinations(range(1, n + 1), k))
    )


def star(n: int, k: int, center: int) -> SetFamily:
    """All k-subsets of [n] containing the center element."""
    if not (1 <= k <= n and 1 <= center <= n):
        raise ValueError("requires 1 <= k <= n and a center in [n]")
    others = [e for e in range(1, n + 1) if e != center]
    cbit = 1 << (center - 1)
    return SetFamily.from_masks(
        n, (mask_of(c) | cbit for c in combinations(others, k - 1))
    )


def triangle_at(n: int, k: int, core: Subset) -> SetFamily:
    """k-subsets meeting a fixed 3-element core in at least 2 points."""
    elems = core.elements
    if len(elems) != 3 or any(e > n for e in elems):
        raise ValueError("core must be three distinct elements of [n]")
    if not 2 <= k <= n:
        raise ValueError("requires 2 <= k <= n")
    others = [e for e in range(1, n + 1) if e not in elems]
    masks = []
    for pair in combinations(elems, 2):
        pm = mask_of(pair)
        for rest in combinations(others, k - 2):
            masks.append(pm | mask_of(rest))
    if k >= 3:
        cm = core.mask
        for rest in combinations(others, k - 3):
            masks.append(cm | mask_of(rest))
    return SetFamily.from_masks(n, masks)


def triangle(n: int, k: int) -> SetFamily:
    """The triangle family: k-subsets meeting {1,2,3} in at least 2 points."""
    return triangle_at(n, k, Subset.of(1, 2, 3))


def frankl(n: int, k: int, t: int, i: int) -> SetFamily:
    """The i-th Frankl family: k-subsets meeting [t+2i] in at least t+i points."""
    if t < 1 or not 1 <= i <= k - t:
        raise ValueError("requires t >= 1 and 1 <= i <= k - t")
    if n < k or n < t + 2 * i:
        raise ValueError("requires n >= k and n >= t + 2i")
    window = list(range(1, t + 2 * i + 1))
    others = list(range(t + 2 * i + 1, n + 1))
    masks = []
    for s in range(t + i, min(k, t + 2 * i) + 1):
        for inside in combinations(window, s):
            im = mask_of(inside)
            for rest in combinations(others, k - s):
                masks.append(im | mask_of(rest))
    return SetFamily.from_masks(n, masks)


def frankl_tilde(n: int, k: int, t: int) -> SetFamily:
    """k-subsets meeting [t+2] in exactly t+1 points."""
    if t < 1 or k < t + 1 or n < k or n < t + 2:
        raise ValueError("requires t >= 1, k >= t+1, n >= max(k, t+2)")
    window = list(range(1, t + 3))
    others = list(range(t + 3, n + 1))
    masks = []
    for inside in combinations(window, t + 1):
        im = mask_of(inside)
        for rest in combinations(others, k - t - 1):
            masks.append(im | mask_of(rest))
    return SetFamily.from_masks(n, masks)


def hamming_ball(n: int, r: int, center: Subset = Subset(0)) -> SetFamily:
    """All subsets within symmetric-difference distance r of the center."""
    if not 0 <= r <= n:
        raise ValueError("requires 0 <= r <= n")
    if center.mask >> n:
        raise ValueError("center outside [n]")
    cm = center.mask
    masks = []
    for d in range(r + 1):
        for flip in combinations(range(n), d):
            fm = 0
            for i in flip:
                fm |= 1 << i
            masks.append(cm ^ fm)
    return SetFamily.from_masks(n, masks)


@lru_cache(maxsize=1)
def g0() -> SetFamily:
    """The canonical degree-regular 10-edge intersecting 3-graph on [6].

    Defined as the lexicographically least one-per-complementary-pair
    selection with constant degree vector; fails loudly if no regular
    selection exists.
    """
    from .search import regular_selections

    sels = regular_selections()
    first = sels[0]
    assert len(first) == 10 and is_intersecting(first)
    return first


def f0(n: int, k: int) -> SetFamily:
    """Up-closure of the canonical regular selection inside the k-level of [n]."""
    if n < 6 or k < 3:
        raise ValueError("requires n >= 6 and k >= 3")
    return generated(g0(), n, k)


def katona_family(n: int, t: int) -> SetFamily:
    """The extremal t-intersecting family on [n]: the top half of the cube,
    with the middle level pushed inside [n-1] when n - t is odd."""
    if not 0 < t < n:
        raise ValueError("requires 0 < t < n")
    masks = []
    if (n - t) % 2 == 0:
        lo = (n + t) // 2
        for s in range(lo, n + 1):
            for c in combinations(range(1, n + 1), s):
                masks.append(mask_of(c))
    else:
        lo = (n + t + 1) // 2
        for s in range(lo, n + 1):
            for c in combinations(range(1, n + 1), s):
                masks.append(mask_of(c))
        mid = (n + t - 1) // 2
        for c in combinations(range(1, n), mid):
            masks.append(mask_of(c))
    return SetFamily.from_masks(n, masks)


def diameter_example(n: int, s: int) -> SetFamily:
    """Radius-s ball around the empty set joined with the (s+1)-uniform triangle."""
    if s < 1 or n < 2 * (s + 1):
        raise ValueError("requires s >= 1 and n >= 2(s+1)")
    ball = hamming_ball(n, s)
    tri = triangle(n, s + 1)
    return SetFamily.from_masks(n, ball.masks + tri.masks)


def example_511(n: int, s: int, graph: SetFamily) -> SetFamily:
    """An intersecting (s+1)-graph joined with everything of size at most s."""
    if n < 2 * s + 2:
        raise ValueError("requires n >= 2s+2")
    if graph.n != n:
        raise ValueError("graph must live on the same ground set")
    if graph.uniform_k != s + 1:
        raise ValueError("graph must be (s+1)-uniform")
    if not is_intersecting(graph):
        raise ValueError("graph must be intersecting")
    low = hamming_ball(n, s)
    return SetFamily.from_masks(n, low.masks + graph.masks)


# ---------------------------------------------------------------------------
# Name-keyed builder registry (CLI surface)
# ---------------------------------------------------------------------------

BUILDERS = {
    "powerset": (power_set, ("n",)),
    "klevel": (k_level, ("n", "k")),
    "star": (star, ("n", "k", "c")),
    "triangle": (triangle, ("n", "k")),
    "triangle_at": (triangle_at, ("n", "k", "core")),
    "frankl": (frankl, ("n", "k", "t", "i")),
    "frankl_tilde": (frankl_tilde, ("n", "k", "t")),
    "hamming_ball": (hamming_ball, ("n", "r", "center")),
    "g0": (g0, ()),
    "f0": (f0, ("n", "k")),
    "katona": (katona_family, ("n", "t")),
    "diameter_example": (diameter_example, ("n", "s")),
    "example_511": (example_511, ("n", "s", "graph")),
}


def build(name: str, **params) -> SetFamily:
    """Build a named family; unknown names or missing parameters raise ValueError."""
    if name not in BUILDERS:
        raise ValueError(f"unknown family name {name!r}")
    fn, arg_names = BUILDERS[name]
    missing = [a for a in arg_names if a not in params]
    if missing:
        raise ValueError(f"{name} needs parameters: {', '.join(missing)}")
    extra = [a for a in params if a not in arg_names]
    if extra:
        raise ValueError(f"{name} does not take: {', '.join(extra)}")
    return fn(**{a: params[a] for a in arg_names})
