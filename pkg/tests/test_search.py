import random

import pytest

from sturdy import SetFamily, is_intersecting, is_t_intersecting, sturdiness
from sturdy import constructions as cons
from sturdy import metrics as mx
from sturdy import search as sx
from sturdy.search import Budget, ConstraintSpec

import _oracles as oracle


def test_constraint_validation():
    with pytest.raises(ValueError):
        ConstraintSpec.t_intersecting_any(7, 1)  # non-uniform capped at 6
    with pytest.raises(ValueError):
        ConstraintSpec.t_intersecting_uniform(6, 7, 1)
    with pytest.raises(ValueError):
        ConstraintSpec.u_union(5, -1)
    spec = ConstraintSpec.t_intersecting_uniform(12, 4, 1)
    with pytest.raises(ValueError):
        list(sx.enumerate_maximal(spec))  # 495 candidate sets exceed the limit


def test_enumerate_maximal_uniform_631():
    spec = ConstraintSpec.t_intersecting_uniform(6, 3, 1)
    fams = list(sx.enumerate_maximal(spec))
    assert len(fams) == 1024
    full = (1 << 6) - 1
    seen = set()
    for fam in fams:
        assert len(fam) == 10
        assert is_intersecting(fam)
        for m in fam.masks:
            assert not fam.has_mask(full ^ m)
        seen.add(fam.masks)
    assert len(seen) == 1024


def test_enumerate_maximal_nonuniform_41():
    spec = ConstraintSpec.t_intersecting_any(4, 1)
    fams = list(sx.enumerate_maximal(spec))
    assert len(fams) == 12
    for fam in fams:
        assert len(fam) == 8  # every maximal intersecting family fills half the cube
        assert is_intersecting(fam)
        mems = oracle.members(fam)
        assert oracle.is_maximal_under(
            mems, 4, lambda a, b: len(a & b) >= 1, lambda a: len(a) >= 1
        )


def test_enumerate_is_deterministic():
    spec = ConstraintSpec.diameter(4, 2)
    a = [f.masks for f in sx.enumerate_maximal(spec)]
    b = [f.masks for f in sx.enumerate_maximal(spec)]
    assert a == b


def test_enumerate_maximal_diameter_size_bound():
    spec = ConstraintSpec.diameter(4, 2)
    for fam in sx.enumerate_maximal(spec):
        assert len(fam) <= 1 + 4  # radius-1 ball size at n=4


def test_max_beta_uniform_631():
    res = sx.max_beta(ConstraintSpec.t_intersecting_uniform(6, 3, 1))
    assert res.exhausted
    assert res.families_enumerated == 1024
    assert res.value == 3
    assert res.value >= sturdiness(cons.triangle(6, 3)) == 1
    assert sturdiness(res.witness) == 3
    assert mx.degree_vector(res.witness) == [5] * 6


def test_max_beta_nonuniform_bounds():
    res = sx.max_beta(ConstraintSpec.t_intersecting_any(4, 1))
    assert res.value == 1 <= 2  # within the 2^(n-3) ceiling
    res62 = sx.max_beta(ConstraintSpec.t_intersecting_any(6, 2))
    assert res62.value == 5
    assert is_t_intersecting(res62.witness, 2)


def test_max_size_matches_katona():
    for n, t, want in [(4, 1, 8), (5, 2, 10), (6, 2, 22)]:
        res = sx.max_size(ConstraintSpec.t_intersecting_any(n, t))
        assert res.exhausted and res.value == want


def test_witness_is_lex_least():
    spec = ConstraintSpec.t_intersecting_any(4, 1)
    res = sx.max_size(spec)
    best = [f for f in sx.enumerate_maximal(spec) if len(f) == res.value]
    assert res.witness.member_elements() == min(f.member_elements() for f in best)


def test_worker_invariance():
    for spec, objective in [
        (ConstraintSpec.t_intersecting_any(4, 1), "beta"),
        (ConstraintSpec.t_intersecting_any(6, 2), "beta"),
        (ConstraintSpec.t_intersecting_any(5, 2), "size"),
    ]:
        base = sx.extremal_search(spec, objective, workers=1)
        for w in (2, 8):
            other = sx.extremal_search(spec, objective, workers=w)
            assert (other.value, other.witness, other.families_enumerated) == (
                base.value,
                base.witness,
                base.families_enumerated,
            )


def test_budget_truncation_is_reported_and_deterministic():
    spec = ConstraintSpec.diameter(6, 3)
    full = sx.max_beta(spec)
    assert full.exhausted
    capped = sx.max_beta(spec, budget=Budget(max_nodes=400))
    assert not capped.exhausted
    assert capped.families_enumerated < full.families_enumerated
    capped2 = sx.max_beta(spec, budget=Budget(max_nodes=400), workers=4)
    assert (capped.value, capped.witness, capped.families_enumerated) == (
        capped2.value, capped2.witness, capped2.families_enumerated,
    )


def test_one_per_pair_selections():
    fams = list(sx.one_per_pair_selections(4, 2))
    assert len(fams) == 8
    assert all(len(f) == 3 for f in fams)
    assert all(is_intersecting(f) for f in fams)
    fams63 = list(sx.one_per_pair_selections(6, 3))
    assert len(fams63) == 1024
    with pytest.raises(ValueError):
        list(sx.one_per_pair_selections(5, 2))


def test_regular_selections():
    sels = sx.regular_selections()
    assert len(sels) == 12
    for s in sels:
        assert mx.degree_vector(s) == [5] * 6
        assert mx.transversal_number(s) == 3
    keys = [s.member_elements() for s in sels]
    assert keys == sorted(keys)
    assert sels[0] == cons.g0()


def test_probe_conjectures():
    p61 = sx.probe_conjecture("c61", 6, s=1)
    assert p61.rhs == 1 and p61.within_bound and not p61.hypothesis_met
    p62 = sx.probe_conjecture("c62", 6, s=1)
    assert p62.rhs == 1 and p62.within_bound
    p63 = sx.probe_conjecture("c63", 5)
    assert p63.rhs == 2 and p63.result.value == 0 and p63.within_bound
    with pytest.raises(ValueError):
        sx.probe_conjecture("c61", 6)
    with pytest.raises(ValueError):
        sx.probe_conjecture("c99", 4)


def test_satisfies_revalidates():
    spec = ConstraintSpec.u_union(5, 3)
    for fam in sx.enumerate_maximal(spec):
        assert sx.satisfies(spec, fam)
    bad = SetFamily.from_elements(5, [(1, 2, 3, 4)])
    assert not sx.satisfies(spec, bad)


def test_empty_vertex_set_yields_empty_family():
    spec = ConstraintSpec.t_intersecting_uniform(4, 2, 3)  # k < t: nothing qualifies
    fams = list(sx.enumerate_maximal(spec))
    assert fams == [SetFamily.from_masks(4, ())]
    res = sx.max_beta(spec)
    assert res.value == 0 and res.exhausted


def test_prefix_monotonicity_sample():
    rng = random.Random(41)
    spec = ConstraintSpec.t_intersecting_any(5, 1)
    fams = list(sx.enumerate_maximal(spec))
    for fam in rng.sample(fams, 20):
        cut = rng.randint(0, len(fam))
        prefix = SetFamily.from_masks(5, fam.masks[:cut])
        assert sturdiness(prefix) <= sturdiness(fam)
