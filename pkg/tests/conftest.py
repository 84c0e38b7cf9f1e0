import random

import pytest

from sturdy import SetFamily
from sturdy import constructions as cons
from sturdy import transforms as tf
from sturdy.claims import random_family, random_t_intersecting


def build_corpus() -> list[tuple[str, SetFamily]]:
    """Named families exercised by the global-inequality and invariant tests."""
    rng = random.Random(20240917)
    corpus = [
        ("powerset4", cons.power_set(4)),
        ("klevel52", cons.k_level(5, 2)),
        ("klevel73", cons.k_level(7, 3)),
        ("star841", cons.star(8, 4, 1)),
        ("star632", cons.star(6, 3, 2)),
        ("triangle84", cons.triangle(8, 4)),
        ("triangle93", cons.triangle(9, 3)),
        ("triangle104", cons.triangle(10, 4)),
        ("frankl9411", cons.frankl(9, 4, 1, 1)),
        ("frankl9412", cons.frankl(9, 4, 1, 2)),
        ("frankl10521", cons.frankl(10, 5, 2, 1)),
        ("tilde941", cons.frankl_tilde(9, 4, 1)),
        ("ball61", cons.hamming_ball(6, 1)),
        ("ball82", cons.hamming_ball(8, 2)),
        ("diamex82", cons.diameter_example(8, 2)),
        ("ex511", cons.example_511(9, 2, cons.triangle(9, 3))),
        ("katona62", cons.katona_family(6, 2)),
        ("katona52", cons.katona_family(5, 2)),
        ("f084", cons.f0(8, 4)),
        ("g0", cons.g0()),
    ]
    for idx in range(30):
        n = rng.randint(2, 10)
        corpus.append((f"random{idx}", random_family(rng, n)))
    for idx in range(15):
        n = rng.randint(5, 9)
        k = rng.randint(2, n // 2)
        corpus.append((f"tint{idx}", random_t_intersecting(rng, n, k, 1)))
    for idx in range(8):
        n = rng.randint(4, 7)
        k = rng.randint(2, n // 2)
        fam = random_t_intersecting(rng, n, k, 1)
        corpus.append((f"closure{idx}", tf.shift_closure(fam)))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus slice on at most 6 points, padded with extra random families."""
    rng = random.Random(77)
    fams = [(name, fam) for name, fam in corpus if fam.n <= 6]
    for idx in range(40):
        n = rng.randint(4, 6)
        fams.append((f"small{idx}", random_family(rng, n, max_members=20)))
    return fams
