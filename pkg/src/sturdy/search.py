"""Exhaustive, deterministic search for extremal families under pairwise
constraints, via maximal-clique enumeration over the compatibility graph.

Restricting to inclusion-maximal families is sound for maximizing sturdiness
(and size): both are monotone under adding members.  The enumerator is
Bron-Kerbosch with pivoting over a fixed lexicographic vertex order, so the
stream of maximal families is reproducible.

Parallel runs split the root branches of the enumeration tree across workers
and merge per-branch results in branch order, taking the maximum and breaking
ties by the lexicographically least witness.  A node budget is enforced per
root branch, which keeps truncated results worker-count-invariant as well.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .families import SetFamily, elements_of, mask_of
from .formulas import (
    conjectured_diameter_beta,
    conjectured_iu_beta,
    conjectured_union_beta,
)
from .metrics import (
    _beta_masks,
    is_iu,
    is_t_intersecting,
    is_u_union,
    diameter as family_diameter,
)

DEFAULT_VERTEX_LIMIT = 128
_VALIDATION_STRIDE = 97

NONUNIFORM_KINDS = ("t_intersecting_any", "u_union", "diameter", "iu")


@dataclass(frozen=True)
class ConstraintSpec:
    """A pairwise-checkable family constraint over a fixed ground set."""

    kind: str
    n: int
    k: int | None = None
    t: int | None = None
    u: int | None = None
    w: int | None = None

    def __post_init__(self) -> None:
        if self.kind in NONUNIFORM_KINDS and self.n > 6:
            raise ValueError("non-uniform searches are capped at n <= 6")

    @classmethod
    def t_intersecting_uniform(cls, n: int, k: int, t: int) -> "ConstraintSpec":
        if not (1 <= k <= n and t >= 1):
            raise ValueError("requires 1 <= k <= n and t >= 1")
        return cls("t_intersecting_uniform", n, k=k, t=t)

    @classmethod
    def t_intersecting_any(cls, n: int, t: int) -> "ConstraintSpec":
        if t < 1:
            raise ValueError("requires t >= 1")
        return cls("t_intersecting_any", n, t=t)

    @classmethod
    def u_union(cls, n: int, u: int) -> "ConstraintSpec":
        if u < 0:
            raise ValueError("requires u >= 0")
        return cls("u_union", n, u=u)

    @classmethod
    def diameter(cls, n: int, w: int) -> "ConstraintSpec":
        if w < 0:
            raise ValueError("requires w >= 0")
        return cls("diameter", n, w=w)

    @classmethod
    def iu(cls, n: int) -> "ConstraintSpec":
        if n < 2:
            raise ValueError("requires n >= 2")
        return cls("iu", n)

    def describe(self) -> str:
        parts = [f"n={self.n}"]
        for name in ("k", "t", "u", "w"):
            v = getattr(self, name)
            if v is not None:
                parts.append(f"{name}={v}")
        return f"{self.kind}({', '.join(parts)})"


def vertex_masks(spec: ConstraintSpec) -> list[int]:
    """Candidate member sets in lexicographic element order."""
    n = spec.n
    if spec.kind == "t_intersecting_uniform":
        masks = [mask_of(c) for c in combinations(range(1, n + 1), spec.k)]
        return [m for m in masks if m.bit_count() >= spec.t]
    all_masks = sorted(range(1 << n), key=elements_of)
    if spec.kind == "t_intersecting_any":
        return [m for m in all_masks if m.bit_count() >= spec.t]
    if spec.kind == "u_union":
        return [m for m in all_masks if m.bit_count() <= spec.u]
    if spec.kind == "diameter":
        return all_masks
    if spec.kind == "iu":
        full = (1 << n) - 1
        return [m for m in all_masks if m != 0 and m != full]
    raise ValueError(f"unknown constraint kind {spec.kind!r}")


def pair_ok(spec: ConstraintSpec, a: int, b: int) -> bool:
    """Whether two candidate members may coexist under the constraint."""
    if spec.kind in ("t_intersecting_uniform", "t_intersecting_any"):
        return (a & b).bit_count() >= spec.t
    if spec.kind == "u_union":
        return (a | b).bit_count() <= spec.u
    if spec.kind == "diameter":
        return (a ^ b).bit_count() <= spec.w
    if spec.kind == "iu":
        full = (1 << spec.n) - 1
        return a & b != 0 and a | b != full
    raise ValueError(f"unknown constraint kind {spec.kind!r}")


def satisfies(spec: ConstraintSpec, family: SetFamily) -> bool:
    """Re-validate a family against the constraint via the metric predicates."""
    if spec.kind == "t_intersecting_uniform":
        return (
            family.n == spec.n
            and (not family.masks or family.uniform_k == spec.k)
            and is_t_intersecting(family, spec.t)
        )
    if spec.kind == "t_intersecting_any":
        return family.n == spec.n and is_t_intersecting(family, spec.t)
    if spec.kind == "u_union":
        return family.n == spec.n and is_u_union(family, spec.u)
    if spec.kind == "diameter":
        return family.n == spec.n and (
            not family.masks or family_diameter(family) <= spec.w
        )
    if spec.kind == "iu":
        return family.n == spec.n and (not family.masks or is_iu(family))
    raise ValueError(f"unknown constraint kind {spec.kind!r}")


def _build_graph(spec: ConstraintSpec, limit: int) -> tuple[list[int], list[int]]:
    """Vertex masks plus adjacency bitmasks of the compatibility graph."""
    vm = vertex_masks(spec)
    if len(vm) > limit:
        raise ValueError(
            f"{len(vm)} candidate sets exceed the configured limit {limit}"
        )
    v = len(vm)
    adj = [0] * v
    for p in range(v):
        for q in range(p + 1, v):
            if pair_ok(spec, vm[p], vm[q]):
                adj[p] |= 1 << q
                adj[q] |= 1 << p
    return vm, adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _pivot_candidates(adj: list[int], p: int, x: int) -> int:
    """Candidate vertices to branch on: P minus the neighborhood of the pivot
    maximizing |P & N(u)| (ties to the smallest vertex index)."""
    best_u = -1
    best = -1
    for u in _bits(p | x):
        cnt = (p & adj[u]).bit_count()
        if cnt > best:
            best = cnt
            best_u = u
    return p & ~adj[best_u]


@dataclass
class _RunState:
    nodes: int = 0
    cliques: int = 0
    max_nodes: int | None = None
    deadline: float | None = None
    truncated: bool = False


def _bk_run(adj: list[int], p: int, x: int, r: int, st: _RunState, on_clique) -> bool:
    """Visit all maximal cliques extending r; returns False once the budget is hit."""
    st.nodes += 1
    if st.max_nodes is not None and st.nodes > st.max_nodes:
        st.truncated = True
        return False
    if st.deadline is not None and st.nodes % 256 == 0 and time.monotonic() > st.deadline:
        st.truncated = True
        return False
    if p == 0 and x == 0:
        st.cliques += 1
        on_clique(r)
        return True
    for v in _bits(_pivot_candidates(adj, p, x)):
        vb = 1 << v
        if not _bk_run(adj, p & adj[v], x & adj[v], r | vb, st, on_clique):
            return False
        p &= ~vb
        x |= vb
    return True


def enumerate_maximal(spec: ConstraintSpec, limit: int = DEFAULT_VERTEX_LIMIT):
    """Yield every inclusion-maximal family under the constraint exactly once,
    in the deterministic pivoted enumeration order."""
    vm, adj = _build_graph(spec, limit)
    v = len(vm)
    if v == 0:
        yield SetFamily.from_masks(spec.n, ())
        return
    out: list[int] = []
    st = _RunState()
    _bk_run(adj, (1 << v) - 1, 0, 0, st, out.append)
    for r in out:
        yield SetFamily.from_masks(spec.n, (vm[i] for i in _bits(r)))


@dataclass(frozen=True)
class Budget:
    """Resource limits for a search; hitting either reports a truncated result."""

    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an extremal search over maximal families."""

    objective: str
    value: int
    witness: SetFamily
    families_enumerated: int
    nodes: int
    exhausted: bool

    @property
    def max_beta(self) -> int:
        return self.value


@dataclass(frozen=True)
class _BranchOutcome:
    value: int | None
    witness_masks: tuple[int, ...] | None
    cliques: int
    nodes: int
    truncated: bool


def _family_sort_key(masks: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(elements_of(m) for m in masks))


def _root_branches(adj: list[int], v: int) -> list[tuple[int, int, int]]:
    """(vertex, P, X) for each root branch, in deterministic order."""
    p = (1 << v) - 1
    x = 0
    branches = []
    for u in _bits(_pivot_candidates(adj, p, x)):
        ub = 1 << u
        branches.append((u, p & adj[u], x & adj[u]))
        p &= ~ub
        x |= ub
    return branches


def _objective_fn(objective: str, n: int):
    if objective == "beta":
        return lambda masks: _beta_masks(n, masks)
    if objective == "size":
        return len
    raise ValueError(f"unknown objective {objective!r}")


def _spot_validate(spec: ConstraintSpec, vm: list[int], adj: list[int],
                   clique_bits: int, members: tuple[int, ...]) -> None:
    """Sampled invariants: emitted families satisfy the constraint, are
    maximal, and sturdiness is monotone from any prefix to the whole family."""
    fam = SetFamily.from_masks(spec.n, members)
    assert satisfies(spec, fam), "emitted family violates its constraint"
    for q in range(len(vm)):
        if clique_bits >> q & 1:
            continue
        if adj[q] & clique_bits == clique_bits:
            raise AssertionError("emitted family is not maximal")
    if spec.n >= 2 and len(members) > 1:
        prefix = members[: len(members) // 2]
        assert _beta_masks(spec.n, prefix) <= _beta_masks(spec.n, members)


def _run_branch(spec: ConstraintSpec, objective: str, branch_index: int,
                max_nodes: int | None, max_seconds: float | None,
                limit: int) -> _BranchOutcome:
    """Process one root branch to completion (or budget) and summarize it."""
    vm, adj = _build_graph(spec, limit)
    branches = _root_branches(adj, len(vm))
    u, p0, x0 = branches[branch_index]
    score = _objective_fn(objective, spec.n)

    best_value: int | None = None
    best_key = None
    best_masks: tuple[int, ...] | None = None
    seen = 0

    def on_clique(r: int) -> None:
        nonlocal best_value, best_key, best_masks, seen
        members = tuple(vm[i] for i in _bits(r))
        seen += 1
        if seen % _VALIDATION_STRIDE == 1:
            _spot_validate(spec, vm, adj, r, members)
        v = score(members)
        if best_value is None or v > best_value:
            best_value = v
            best_key = _family_sort_key(members)
            best_masks = members
        elif v == best_value:
            key = _family_sort_key(members)
            if key < best_key:
                best_key = key
                best_masks = members

    st = _RunState(
        max_nodes=max_nodes,
        deadline=None if max_seconds is None else time.monotonic() + max_seconds,
    )
    _bk_run(adj, p0, x0, 1 << u, st, on_clique)
    return _BranchOutcome(best_value, best_masks, st.cliques, st.nodes, st.truncated)


def extremal_search(spec: ConstraintSpec, objective: str = "beta",
                    budget: Budget | None = None, workers: int = 1,
                    limit: int = DEFAULT_VERTEX_LIMIT) -> SearchResult:
    """Maximize an objective over all maximal families under the constraint.

    The witness is the lexicographically least maximizer.  Results (value,
    witness, counts) are identical for any worker count; a hit node budget is
    reported through ``exhausted=False``, never by silent truncation.
    """
    budget = budget or Budget()
    vm, adj = _build_graph(spec, limit)
    v = len(vm)
    score = _objective_fn(objective, spec.n)
    if v == 0:
        empty = SetFamily.from_masks(spec.n, ())
        return SearchResult(objective, score(()), empty, 1, 1, True)
    branches = _root_branches(adj, v)
    args = [
        (spec, objective, idx, budget.max_nodes, budget.max_seconds, limit)
        for idx in range(len(branches))
    ]
    if workers > 1 and len(branches) > 1:
        try:
            with ProcessPoolExecutor(max_workers=min(workers, len(branches))) as pool:
                outcomes = list(pool.map(_run_branch_star, args))
        except (OSError, PermissionError):
            outcomes = [_run_branch(*a) for a in args]
    else:
        outcomes = [_run_branch(*a) for a in args]

    best_value: int | None = None
    best_key = None
    best_masks: tuple[int, ...] | None = None
    cliques = 0
    nodes = 1  # the root node
    truncated = False
    for oc in outcomes:
        cliques += oc.cliques
        nodes += oc.nodes
        truncated = truncated or oc.truncated
        if oc.value is None:
            continue
        if best_value is None or oc.value > best_value:
            best_value = oc.value
            best_masks = oc.witness_masks
            best_key = _family_sort_key(oc.witness_masks)
        elif oc.value == best_value:
            key = _family_sort_key(oc.witness_masks)
            if key < best_key:
                best_key = key
                best_masks = oc.witness_masks
    if best_masks is None:
        raise RuntimeError("search budget too small to finish any branch")
    witness = SetFamily.from_masks(spec.n, best_masks)
    return SearchResult(objective, best_value, witness, cliques, nodes, not truncated)


def _run_branch_star(a):
    return _run_branch(*a)


def max_beta(spec: ConstraintSpec, budget: Budget | None = None,
             workers: int = 1, limit: int = DEFAULT_VERTEX_LIMIT) -> SearchResult:
    """Maximum sturdiness over all maximal families under the constraint."""
    return extremal_search(spec, "beta", budget, workers, limit)


def max_size(spec: ConstraintSpec, budget: Budget | None = None,
             workers: int = 1, limit: int = DEFAULT_VERTEX_LIMIT) -> SearchResult:
    """Maximum member count over all maximal families under the constraint."""
    return extremal_search(spec, "size", budget, workers, limit)


# ---------------------------------------------------------------------------
# One-per-complementary-pair selections on the middle level
# ---------------------------------------------------------------------------

def one_per_pair_selections(n: int, k: int, filt=None,
                            limit: int = DEFAULT_VERTEX_LIMIT):
    """All selections of exactly one k-set from each complementary pair of the
    k-level of [n] (n = 2k), optionally filtered; every such selection is
    intersecting.  Deterministic binary-counter order."""
    if n != 2 * k or k < 1:
        raise ValueError("requires n = 2k >= 2")
    from math import comb

    if comb(n, k) > 2 * limit:
        raise ValueError("too many complementary pairs for the configured limit")
    full = (1 << n) - 1
    kmasks = sorted((mask_of(c) for c in combinations(range(1, n + 1), k)),
                    key=elements_of)
    pairs = [(m, full ^ m) for m in kmasks if elements_of(m) < elements_of(full ^ m)]
    p = len(pairs)
    for sel in range(1 << p):
        members = [pairs[i][sel >> i & 1] for i in range(p)]
        fam = SetFamily.from_masks(n, members)
        if filt is None or filt(fam):
            yield fam


def regular_selections() -> list[SetFamily]:
    """All degree-regular one-per-pair selections on the 3-level of [6], in
    lexicographic order; the first one is the canonical 10-edge selection."""

    def regular(fam: SetFamily) -> bool:
        cols = [sum(1 for m in fam.masks if m >> i & 1) for i in range(6)]
        return len(set(cols)) == 1

    sels = sorted(
        one_per_pair_selections(6, 3, filt=regular),
        key=lambda f: f.member_elements(),
    )
    if not sels:
        raise RuntimeError("no degree-regular one-per-pair selection exists on [6]")
    return sels


# ---------------------------------------------------------------------------
# Conjecture probes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProbeReport:
    """Exhaustive small-n evidence for a conjectured sturdiness bound; this
    reports, it never asserts the conjecture."""

    conjecture: str
    n: int
    s: int | None
    constraint: ConstraintSpec
    result: SearchResult
    rhs: int | Fraction
    within_bound: bool
    hypothesis_met: bool


def probe_conjecture(conjecture: str, n: int, s: int | None = None,
                     budget: Budget | None = None, workers: int = 1) -> ProbeReport:
    if conjecture == "c61":
        if s is None:
            raise ValueError("c61 needs the union parameter s")
        spec = ConstraintSpec.u_union(n, 2 * s + 1)
        bound = conjectured_union_beta(n, s)
    elif conjecture == "c62":
        if s is None:
            raise ValueError("c62 needs the diameter parameter s")
        spec = ConstraintSpec.diameter(n, 2 * s + 1)
        bound = conjectured_diameter_beta(n, s)
    elif conjecture == "c63":
        spec = ConstraintSpec.iu(n)
        bound = conjectured_iu_beta(n)
        s = None
    else:
        raise ValueError(f"unknown conjecture {conjecture!r}")
    result = max_beta(spec, budget=budget, workers=workers)
    return ProbeReport(
        conjecture=conjecture,
        n=n,
        s=s,
        constraint=spec,
        result=result,
        rhs=bound.value,
        within_bound=result.value <= bound.value,
        hypothesis_met=bound.applicable,
    )
