import random
from fractions import Fraction

import pytest

from sturdy import (
    SetFamily,
    Subset,
    avoid,
    is_shifted,
    is_t_intersecting,
    sturdiness,
    t_transversal_number,
)
from sturdy import constructions as cons
from sturdy import metrics as mx
from sturdy import transforms as tf
from sturdy.claims import random_family, random_saturated, random_t_intersecting

import _oracles as oracle


def test_shift_once():
    fam = SetFamily.from_elements(3, [(2, 3)])
    assert tf.shift_once(fam, 1, 2) == SetFamily.from_elements(3, [(1, 3)])
    blocked = SetFamily.from_elements(3, [(1, 3), (2, 3)])
    assert tf.shift_once(blocked, 1, 2) == blocked
    with pytest.raises(ValueError):
        tf.shift_once(fam, 2, 2)


def test_shift_once_preserves_count_and_is_idempotent():
    rng = random.Random(21)
    for _ in range(200):
        fam = random_family(rng, rng.randint(2, 8))
        i = rng.randint(1, fam.n - 1)
        j = rng.randint(i + 1, fam.n)
        once = tf.shift_once(fam, i, j)
        assert len(once) == len(fam)
        assert tf.shift_once(once, i, j) == once
        sizes = sorted(m.bit_count() for m in fam.masks)
        assert sorted(m.bit_count() for m in once.masks) == sizes


def test_shift_closure():
    assert tf.shift_closure(SetFamily.from_elements(3, [(2, 3)])) == SetFamily.from_elements(3, [(1, 2)])
    t = cons.triangle(8, 4)
    assert tf.shift_closure(t) == t
    rng = random.Random(22)
    for _ in range(100):
        fam = random_family(rng, rng.randint(2, 7))
        closed = tf.shift_closure(fam)
        assert is_shifted(closed)
        assert len(closed) == len(fam)
        assert oracle.shifted(oracle.members(closed), fam.n)


def test_shift_closure_preserves_t_intersecting():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(5, 8)
        k = rng.randint(2, n // 2)
        t = rng.randint(1, max(1, k - 1))
        fam = random_t_intersecting(rng, n, k, t)
        closed = tf.shift_closure(fam)
        assert is_t_intersecting(closed, t)
        assert len(closed) == len(fam)


def test_precedes():
    assert tf.precedes(Subset.of(1, 3), Subset.of(2, 3))
    assert tf.precedes(Subset.of(1, 3), Subset.of(1, 3))
    assert not tf.precedes(Subset.of(1, 4), Subset.of(2, 3))
    assert not tf.precedes(Subset.of(2, 3), Subset.of(1, 4))
    with pytest.raises(ValueError):
        tf.precedes(Subset.of(1), Subset.of(1, 2))


def test_shifted_equals_downclosed():
    rng = random.Random(24)
    for _ in range(300):
        fam = random_family(rng, rng.randint(2, 7), max_members=16)
        assert tf.is_downclosed(fam) == mx.is_shifted(fam)


def test_downclosure_under_precedence():
    # shifted families contain every same-size predecessor of every member
    for fam in [cons.triangle(7, 3), cons.frankl(8, 4, 1, 2)]:
        assert is_shifted(fam)
        for m in fam.subsets:
            for other in cons.k_level(fam.n, len(m)).subsets:
                if tf.precedes(other, m):
                    assert other in fam


def test_saturate():
    a1 = cons.frankl(8, 4, 1, 1)
    assert tf.saturate(a1, 1) == a1
    single = SetFamily.from_elements(4, [(1, 2, 3, 4)])
    assert tf.saturate(single, 4) == single
    grown = tf.saturate(SetFamily.from_elements(6, [(1, 2, 3)]), 1)
    assert len(grown) == 10
    assert grown.has_mask(0b111)
    assert is_t_intersecting(grown, 1)
    assert tf.is_saturated(grown, 1)
    with pytest.raises(ValueError):
        tf.saturate(SetFamily.from_elements(4, [(1,), (1, 2)]), 1)  # not uniform
    with pytest.raises(ValueError):
        tf.saturate(SetFamily.from_elements(4, [(1, 2), (3, 4)]), 1)  # not intersecting


def test_basis_triangle():
    b = tf.basis(cons.frankl(8, 4, 1, 1), 1)
    assert b.to_family() == SetFamily.from_elements(8, [(1, 2), (1, 3), (2, 3)])
    assert tf.generated(b.to_family(), 8, 4) == cons.frankl(8, 4, 1, 1)


def test_basis_star():
    fam = tf.saturate(SetFamily.from_elements(7, [(1, 2, 3)]), 3)
    # every member contains {1,2,3}: the saturated star generated by it
    b = tf.basis(fam, 3)
    assert b.to_family() == SetFamily.from_elements(7, [(1, 2, 3)])


def test_basis_requires_saturation():
    tilde = cons.frankl_tilde(8, 4, 1)
    with pytest.raises(ValueError):
        tf.basis(tilde, 1)


def test_basis_matches_oracle_minimal_transversals():
    rng = random.Random(25)
    for _ in range(10):
        fam = random_saturated(rng, 7, 3, 1)
        b = tf.basis(fam, 1)
        mems = oracle.members(fam)
        want = {frozenset(s) for s in oracle.minimal_t_transversals(mems, 7, 1, 3)}
        got = {frozenset(elems) for elems in b.to_family().member_elements()}
        assert got == want


def test_generated():
    seed = SetFamily.from_elements(5, [(1, 2)])
    out = tf.generated(seed, 5, 3)
    assert out == SetFamily.from_elements(5, [(1, 2, 3), (1, 2, 4), (1, 2, 5)])
    assert tf.generated(SetFamily.from_elements(8, [(1, 2), (1, 3), (2, 3)]), 8, 4) == cons.triangle(8, 4)
    assert tf.generated(SetFamily.from_masks(5, ()), 5, 3) == SetFamily.from_masks(5, ())
    with pytest.raises(ValueError):
        tf.generated(SetFamily.from_elements(5, [(1, 2, 3, 4)]), 5, 3)


def test_basis_levels_and_lemma42():
    b = tf.basis(cons.frankl(8, 4, 1, 1), 1)
    lv = tf.basis_levels(b)
    assert lv.r == 2 and set(lv.levels) == {2} and len(lv.levels[2]) == 3
    assert tf.lemma42_lhs(lv, 4, 1) == Fraction(3, 4)

    from itertools import combinations

    a2 = cons.frankl(10, 5, 1, 2)
    b2 = tf.basis(a2, 1)
    lv2 = tf.basis_levels(b2)
    assert lv2.r == 3
    assert len(lv2.levels[3]) == 10
    assert {Subset(m).elements for m in lv2.levels[3]} == set(
        combinations(range(1, 6), 3)
    )
    assert tf.lemma42_lhs(lv2, 5, 1) == Fraction(10, 45)


def test_basis_levels_error_for_star():
    fam = tf.saturate(SetFamily.from_elements(7, [(1, 2, 3)]), 3)
    with pytest.raises(ValueError):
        tf.basis_levels(tf.basis(fam, 3))


def test_lemma43():
    rep = tf.lemma43_check(cons.frankl(10, 5, 1, 2), 1)
    assert rep.applicable and rep.holds
    assert rep.bound == 48
    assert set(rep.counts.values()) == {4}
    assert set(rep.counts) == {1, 2, 3, 4, 5}

    star_like = tf.saturate(SetFamily.from_elements(8, [(1, 2, 3, 4)]), 1)
    rep2 = tf.lemma43_check(star_like, 1)
    assert not rep2.applicable


def test_lemma41_on_random_saturated():
    rng = random.Random(26)
    from itertools import combinations

    for _ in range(10):
        fam = random_saturated(rng, 8, 4, 1)
        b = tf.basis(fam, 1)
        bf = b.to_family()
        assert is_t_intersecting(bf, 1)
        for p, q in combinations(b.masks, 2):
            assert p & ~q != 0 and q & ~p != 0  # antichain
        assert tf.generated(bf, 8, 4) == fam


def test_shifted_link_locations():
    # diversity is met at the first point and sturdiness at the extreme pair
    for fam in [cons.triangle(8, 4), cons.frankl(9, 4, 1, 2), cons.frankl(10, 5, 2, 1),
                cons.frankl_tilde(9, 4, 1), cons.power_set(5)]:
        assert is_shifted(fam)
        assert mx.diversity(fam) == len(avoid(fam, 1))
        assert sturdiness(fam) == mx.link_matrix(fam).entry(fam.n, 1)


def test_shifted_avoid_one_intersection_boost():
    a12 = cons.frankl(9, 4, 2, 1)  # meets [4] in >= 3 points: 3-wise intersecting
    assert mx.is_r_wise_t_intersecting(a12, 3, 1)
    assert is_shifted(a12)
    assert is_t_intersecting(avoid(a12, 1), 3)


def test_cor22_bound_on_frankl_instances():
    from sturdy.formulas import shifted_r_wise_beta_bound

    for n in range(12, 16):
        a1 = cons.frankl(n, 4, 1, 1)
        bv = shifted_r_wise_beta_bound(n, 4, 1, 2)
        assert bv.applicable
        assert sturdiness(a1) <= bv.value


def test_shift_closure_respects_cor22_on_random_inputs():
    from sturdy.formulas import shifted_r_wise_beta_bound

    rng = random.Random(27)
    for _ in range(30):
        n = rng.randint(12, 14)
        fam = random_t_intersecting(rng, n, 4, 1)
        closed = tf.shift_closure(fam)
        bv = shifted_r_wise_beta_bound(n, 4, 1, 2)
        assert bv.applicable
        assert sturdiness(closed) <= bv.value
