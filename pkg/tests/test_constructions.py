from math import comb

import pytest

from sturdy import (
    SetFamily,
    Subset,
    diameter,
    diversity,
    is_intersecting,
    is_shifted,
    is_t_intersecting,
    sturdiness,
    transversal_number,
    union_width,
)
from sturdy import constructions as cons
from sturdy import formulas as fx

import _oracles as oracle


def test_power_set_and_levels():
    assert len(cons.power_set(4)) == 16
    assert sturdiness(cons.power_set(4)) == 4
    assert len(cons.k_level(5, 2)) == 10
    assert sturdiness(cons.k_level(5, 2)) == 3
    assert sturdiness(cons.star(8, 4, 1)) == 0
    assert len(cons.star(8, 4, 1)) == comb(7, 3)
    with pytest.raises(ValueError):
        cons.k_level(4, 5)
    with pytest.raises(ValueError):
        cons.power_set(21)


def test_triangle_counts_and_structure():
    t = cons.triangle(8, 4)
    assert len(t) == 3 * comb(5, 2) + comb(5, 1) == 35
    assert sturdiness(t) == 4
    assert is_intersecting(t) and is_shifted(t)
    shifted_core = cons.triangle_at(8, 4, Subset.of(2, 5, 7))
    assert len(shifted_core) == 35 and is_intersecting(shifted_core)
    assert not is_shifted(shifted_core)
    assert cons.triangle_at(8, 4, Subset.of(1, 2, 3)) == t
    with pytest.raises(ValueError):
        cons.triangle_at(8, 4, Subset.of(1, 2))


def test_frankl_families():
    assert cons.frankl(8, 4, 1, 1) == cons.triangle(8, 4)
    a1 = cons.frankl(10, 5, 2, 1)
    assert sturdiness(a1) == comb(5, 1) == 5
    assert is_t_intersecting(a1, 2) and is_shifted(a1)
    a2 = cons.frankl(12, 6, 1, 2)
    assert is_t_intersecting(a2, 1) and is_shifted(a2)
    tilde = cons.frankl_tilde(9, 4, 1)
    assert is_shifted(tilde)
    top = cons.frankl(9, 4, 1, 1)
    assert all(top.has_mask(m) for m in tilde.masks)
    with pytest.raises(ValueError):
        cons.frankl(10, 5, 2, 4)  # i > k - t


def test_frankl_sandwich_sturdiness():
    import random

    rng = random.Random(13)
    base = cons.frankl_tilde(9, 4, 1)
    top = cons.frankl(9, 4, 1, 1)
    extra = [m for m in top.masks if not base.has_mask(m)]
    want = sturdiness(top)
    assert sturdiness(base) == want
    for _ in range(20):
        mid = SetFamily.from_masks(
            9, base.masks + tuple(m for m in extra if rng.random() < 0.5)
        )
        assert sturdiness(mid) == want


def test_hamming_ball():
    assert cons.hamming_ball(5, 0, Subset.of(2, 3)) == SetFamily.from_elements(5, [(2, 3)])
    ball = cons.hamming_ball(6, 2)
    assert len(ball) == sum(comb(6, j) for j in range(3))
    assert sturdiness(cons.hamming_ball(8, 2)) == 7
    assert oracle.beta(oracle.members(cons.hamming_ball(8, 2)), 8) == 7
    with pytest.raises(ValueError):
        cons.hamming_ball(4, 5)


def test_g0_structure():
    g = cons.g0()
    assert len(g) == 10
    assert oracle.degrees(oracle.members(g), 6) == [5] * 6
    assert transversal_number(g) == 3
    full = (1 << 6) - 1
    for m in g.masks:
        assert not g.has_mask(full ^ m)
    # one member from each complementary pair, hence intersecting
    assert is_intersecting(g)
    stats = fx.g0_stats(g)
    assert stats.covered_counts == {3: 10, 4: 15, 5: 6, 6: 1}


def test_f0():
    assert cons.f0(6, 3) == cons.g0()
    f = cons.f0(8, 4)
    assert len(f) == 35
    assert is_intersecting(f)
    mems = oracle.members(f)
    assert oracle.link_count(mems, 8, 7) == 10  # contains 8, avoids 7
    for n, k in [(8, 4), (9, 4)]:
        assert is_intersecting(cons.f0(n, k))
    with pytest.raises(ValueError):
        cons.f0(5, 3)


def test_katona_family():
    assert len(cons.katona_family(6, 2)) == 22
    assert len(cons.katona_family(4, 1)) == 8
    assert len(cons.katona_family(5, 2)) == 10
    for n, t in [(6, 2), (4, 1), (5, 2), (7, 3)]:
        fam = cons.katona_family(n, t)
        assert is_t_intersecting(fam, t)
        assert oracle.t_intersecting(oracle.members(fam), t)
    with pytest.raises(ValueError):
        cons.katona_family(4, 4)


def test_diameter_example():
    fam = cons.diameter_example(8, 2)
    assert diameter(fam) == 5
    assert sturdiness(fam) == 8
    assert oracle.diam(oracle.members(fam)) == 5


def test_example_511():
    g = cons.triangle(9, 3)
    fam = cons.example_511(9, 2, g)
    assert union_width(fam) <= 5
    assert sturdiness(fam) == sturdiness(g) + sum(comb(7, j) for j in range(2))
    assert diversity(fam) == diversity(g) + sum(comb(8, j) for j in range(3))
    assert len(fam) <= fx.example_511_size_bound(9, 2).value
    with pytest.raises(ValueError):
        cons.example_511(9, 2, cons.k_level(9, 3))  # not intersecting
    with pytest.raises(ValueError):
        cons.example_511(9, 2, cons.triangle(9, 4))  # wrong uniformity


def test_builders_deterministic():
    assert cons.triangle(8, 4) == cons.triangle(8, 4)
    assert cons.g0() == cons.g0()
    assert cons.katona_family(5, 2) == cons.katona_family(5, 2)


def test_build_registry():
    fam = cons.build("triangle", n=8, k=4)
    assert fam == cons.triangle(8, 4)
    with pytest.raises(ValueError):
        cons.build("triangle", n=8)
    with pytest.raises(ValueError):
        cons.build("nope", n=1)
    with pytest.raises(ValueError):
        cons.build("g0", n=6)
