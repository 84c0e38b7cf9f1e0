import random
from fractions import Fraction

import pytest

from sturdy import (
    SetFamily,
    Subset,
    avoid,
    complement_family,
    degree_vector,
    diameter,
    diversity,
    is_hamming_ball,
    is_intersecting,
    is_iu,
    is_r_wise_t_intersecting,
    is_shifted,
    is_t_intersecting,
    is_u_union,
    link_matrix,
    metric_report,
    min_degree,
    split_check,
    sturdiness,
    t_transversal_number,
    transversal_number,
    union_width,
)
from sturdy import constructions as cons
from sturdy.claims import random_family, random_t_intersecting

import _oracles as oracle


def test_link_matrix_small_examples():
    lm = link_matrix(cons.k_level(3, 2))
    assert all(lm.entry(i, j) == 1 for i in (1, 2, 3) for j in (1, 2, 3) if i != j)
    lm2 = link_matrix(cons.power_set(3))
    assert all(lm2.entry(i, j) == 2 for i in (1, 2, 3) for j in (1, 2, 3) if i != j)
    assert all(lm.entry(i, i) == 0 for i in (1, 2, 3))


def test_link_matrix_total_identity_and_oracle():
    rng = random.Random(1)
    for _ in range(300):
        fam = random_family(rng, rng.randint(1, 9))
        lm = link_matrix(fam)
        assert lm.total() == sum(
            m.bit_count() * (fam.n - m.bit_count()) for m in fam.masks
        )
        assert [list(r) for r in lm.rows] == oracle.link_entries(
            oracle.members(fam), fam.n
        )


def test_link_matrix_equals_incidence_product():
    # cross-check against the 0-1 incidence matrix product
    numpy = pytest.importorskip("numpy")
    rng = random.Random(2)
    for _ in range(100):
        fam = random_family(rng, rng.randint(2, 9))
        a = numpy.array(
            [[1 if m >> i & 1 else 0 for m in fam.masks] for i in range(fam.n)],
            dtype=int,
        )
        if len(fam) == 0:
            a = a.reshape(fam.n, 0)
        prod = a @ (1 - a).T
        lm = link_matrix(fam)
        assert [list(r) for r in lm.rows] == prod.tolist()


def test_sturdiness_examples():
    assert sturdiness(cons.star(8, 4, 1)) == 0
    assert sturdiness(cons.triangle(8, 4)) == 4
    assert sturdiness(cons.frankl(12, 6, 1, 2)) == 66
    assert sturdiness(SetFamily.from_masks(5, ())) == 0
    with pytest.raises(ValueError):
        sturdiness(SetFamily.from_elements(1, [(1,)]))


def test_diversity_examples():
    assert diversity(cons.star(7, 3, 1)) == 0
    assert diversity(cons.triangle(8, 4)) == 10
    for n, k in [(6, 2), (8, 3)]:
        assert diversity(cons.k_level(n, k)) == oracle.gamma(
            oracle.members(cons.k_level(n, k)), n
        )
        from math import comb

        assert diversity(cons.k_level(n, k)) == comb(n - 1, k)


def test_degrees():
    assert degree_vector(cons.g0()) == [5] * 6
    assert degree_vector(cons.power_set(4)) == [8] * 4
    assert min_degree(cons.power_set(4)) == 8
    rng = random.Random(3)
    for _ in range(100):
        fam = random_family(rng, rng.randint(1, 9))
        assert sum(degree_vector(fam)) == sum(m.bit_count() for m in fam.masks)


def test_t_intersecting():
    assert is_t_intersecting(cons.frankl(10, 5, 2, 1), 2)
    assert not is_t_intersecting(SetFamily.from_elements(3, [(), (1,)]), 1)
    assert is_intersecting(cons.star(8, 4, 1))
    assert not is_t_intersecting(cons.triangle(8, 4), 2)
    rng = random.Random(4)
    for _ in range(100):
        fam = random_family(rng, rng.randint(2, 7), max_members=12)
        t = rng.randint(1, 3)
        assert is_t_intersecting(fam, t) == oracle.t_intersecting(oracle.members(fam), t)


def test_r_wise_t_intersecting():
    assert is_r_wise_t_intersecting(cons.star(7, 3, 2), 4, 1)
    assert not is_r_wise_t_intersecting(cons.triangle(9, 3), 3, 1)
    bad = SetFamily.from_elements(9, [(1, 2, 4), (1, 3, 5), (2, 3, 6)])
    assert not is_r_wise_t_intersecting(bad, 3, 1)
    assert is_r_wise_t_intersecting(cons.frankl(9, 4, 1, 1), 2, 1)
    assert is_r_wise_t_intersecting(cons.frankl(9, 4, 2, 1), 3, 1)
    rng = random.Random(5)
    for _ in range(60):
        fam = random_family(rng, 6, max_members=10)
        r, t = rng.randint(2, 3), rng.randint(1, 2)
        assert is_r_wise_t_intersecting(fam, r, t) == oracle.r_wise_t_intersecting(
            oracle.members(fam), r, t, 6
        )


def test_union_width_and_diameter():
    assert union_width(SetFamily.from_elements(4, [()])) == 0
    assert union_width(cons.power_set(4)) == 4
    assert diameter(cons.hamming_ball(6, 1)) == 2
    assert diameter(SetFamily.from_elements(5, [(), (1, 2, 3, 4, 5)])) == 5
    assert diameter(cons.diameter_example(8, 2)) == 5
    with pytest.raises(ValueError):
        union_width(SetFamily.from_masks(4, ()))
    with pytest.raises(ValueError):
        diameter(SetFamily.from_masks(4, ()))
    assert is_u_union(SetFamily.from_masks(4, ()), 0)
    ex = cons.example_511(9, 2, cons.triangle(9, 3))
    assert union_width(ex) <= 2 * 2 + 1


def test_is_iu():
    good = SetFamily.from_elements(4, [(1, 2), (2, 3), (1, 3), (1, 2, 3)])
    assert is_iu(good)
    assert not is_iu(cons.power_set(3))
    upstar = SetFamily.from_masks(4, [m for m in range(16) if m & 1])
    assert not is_iu(upstar)


def test_transversal_numbers():
    assert transversal_number(cons.g0()) == 3
    assert transversal_number(cons.star(8, 4, 1)) == 1
    assert transversal_number(cons.triangle(8, 4)) == 2
    with pytest.raises(ValueError):
        transversal_number(SetFamily.from_elements(3, [()]))
    assert transversal_number(SetFamily.from_masks(5, ())) == 0

    assert t_transversal_number(SetFamily.from_elements(5, [(1, 2, 3), (1, 2, 4)]), 2) == 2
    assert t_transversal_number(cons.frankl(10, 5, 2, 1), 2) == 3
    assert t_transversal_number(cons.frankl(10, 5, 1, 2), 1) == 3
    with pytest.raises(ValueError):
        t_transversal_number(SetFamily.from_elements(4, [(1,)]), 2)


def test_transversal_against_oracle():
    rng = random.Random(6)
    for _ in range(40):
        fam = random_t_intersecting(rng, rng.randint(4, 7), rng.randint(2, 3), 1)
        mems = oracle.members(fam)
        assert transversal_number(fam) == oracle.tau(mems, fam.n)
        assert t_transversal_number(fam, 2) == oracle.tau(mems, fam.n, t=2)


def test_is_shifted():
    assert is_shifted(cons.triangle(8, 4))
    assert is_shifted(cons.frankl(9, 4, 1, 2))
    assert is_shifted(cons.frankl_tilde(9, 4, 1))
    assert not is_shifted(cons.star(5, 2, 2))
    rng = random.Random(7)
    for _ in range(80):
        fam = random_family(rng, 6, max_members=14)
        assert is_shifted(fam) == oracle.shifted(oracle.members(fam), 6)


def test_is_hamming_ball():
    assert is_hamming_ball(cons.hamming_ball(4, 1)) == (Subset(0), 1)
    extended = SetFamily.from_masks(4, cons.hamming_ball(4, 1).masks + (0b0011,))
    assert is_hamming_ball(extended) == (Subset(0), 1)
    assert is_hamming_ball(SetFamily.from_elements(4, [(), (1, 2)])) is None
    assert is_hamming_ball(SetFamily.from_masks(6, ())) is None
    shifted_ball = cons.hamming_ball(5, 2, Subset.of(2, 4))
    assert is_hamming_ball(shifted_ball) == (Subset.of(2, 4), 2)
    with pytest.raises(ValueError):
        is_hamming_ball(SetFamily.from_elements(21, [(1,)]))


def test_split_check():
    g = SetFamily.from_elements(4, [(1, 2), (2, 3), (1, 3), (1, 2, 3)])
    assert split_check(g, Subset.of(1, 2, 3))
    assert not split_check(g, Subset.of(4))
    # window = everything: the union side is vacuous
    assert split_check(g, Subset.of(1, 2, 3, 4))
    fam = SetFamily.from_elements(3, [(1, 2), (1, 3)])
    assert split_check(fam, Subset.of(1, 2, 3))
    # a trace equal to the complement side breaks the union condition
    assert not split_check(fam, Subset.of(1, 2))
    assert split_check(SetFamily.from_masks(5, ()), Subset.of(1))


def test_metric_report():
    rep = metric_report(cons.triangle(8, 4))
    assert (rep.beta, rep.gamma, rep.delta) == (4, 10, 13)
    assert rep.uniform and rep.uniform_k == 4 and rep.member_count == 35
    assert rep.beta <= min(
        e for i, row in enumerate(link_matrix(cons.triangle(8, 4)).rows)
        for j, e in enumerate(row) if i != j
    )


def test_duality_and_union_intersecting_correspondence():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(2, 8)
        fam = random_family(rng, n)
        t = rng.randint(1, max(1, n - 1))
        assert is_t_intersecting(fam, t) == is_u_union(complement_family(fam), n - t)


def test_beta_at_most_size_scaled():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randint(2, 8)
        fam = random_family(rng, n)
        assert Fraction(sturdiness(fam)) <= Fraction(n * len(fam), 4 * (n - 1))


def test_shifted_avoid_one_is_two_intersecting():
    for fam in [cons.triangle(8, 4), cons.frankl(9, 4, 1, 1), cons.frankl(10, 5, 2, 1)]:
        assert is_shifted(fam) and is_intersecting(fam)
        assert is_t_intersecting(avoid(fam, 1), 2)
