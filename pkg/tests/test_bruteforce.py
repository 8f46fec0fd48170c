"""Grid-search oracle for generalized inverses."""

import random
from fractions import Fraction as F

import pytest

from convreg import (
    Measure,
    UniverseTooLarge,
    brute_force_ginverse,
    candidate_universe,
    closure,
    convolve,
    decide_regular,
    dirac,
    enumerate_group,
    load_cayley,
    support,
    uniform_on,
)
from convreg.bruteforce import _compositions

Z2 = load_cayley("cayley 2\n0 1\n1 0\n")
Z4 = load_cayley("cayley 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n")


def test_composition_order_is_reverse_lexicographic():
    assert list(_compositions(2, 3)) == [
        (2, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (0, 2, 0),
        (0, 1, 1),
        (0, 0, 2),
    ]


def test_candidate_universe_with_identity_atom_is_the_support():
    mu = uniform_on(Z4, [Z4.element(2)])
    assert candidate_universe(mu) == support(mu)


def test_candidate_universe_translates_by_first_atom():
    mu = Measure(Z4, [(Z4.element(1), F(1, 2)), (Z4.element(3), F(1, 2))])
    # x = 1, universe = {1^-1 * s * 1^-1} = {3*1*3, 3*3*3} = {1, 3}.
    assert [el.payload for el in candidate_universe(mu)] == [1, 3]


def test_uniform_pair_finds_identity_point_mass_first():
    mu = uniform_on(Z2, [Z2.element(1)])
    nu = brute_force_ginverse(mu, 2, candidate_universe(mu))
    assert nu == dirac(Z2.element(0))


def test_skewed_pair_has_no_inverse_up_to_eight():
    mu = Measure(Z2, [(Z2.element(0), F(3, 4)), (Z2.element(1), F(1, 4))])
    assert brute_force_ginverse(mu, 8, enumerate_group(Z2)) is None


def test_point_mass_inverse_found_at_denominator_one():
    g = Z4.element(1)
    mu = dirac(g)
    nu = brute_force_ginverse(mu, 1, closure(Z4, [g]))
    assert nu == dirac(g.inverse())


def test_every_hit_is_verified_by_convolution():
    rng = random.Random(2718)
    elems = list(enumerate_group(Z4))
    for _ in range(40):
        chosen = rng.sample(elems, rng.randint(1, 3))
        raw = [rng.randint(1, 4) for _ in chosen]
        total = sum(raw)
        mu = Measure(Z4, [(el, F(v, total)) for el, v in zip(chosen, raw)])
        nu = brute_force_ginverse(mu, 4, candidate_universe(mu))
        if nu is not None:
            assert convolve(convolve(mu, nu), mu) == mu


def test_oracle_agrees_with_engine_on_a_sample():
    rng = random.Random(99)
    elems = list(enumerate_group(Z4))
    for _ in range(60):
        chosen = rng.sample(elems, rng.randint(1, 3))
        raw = [rng.randint(1, 6) for _ in chosen]
        total = sum(raw)
        mu = Measure(Z4, [(el, F(v, total)) for el, v in zip(chosen, raw)])
        engine_regular = decide_regular(mu).status == "regular"
        oracle_hit = brute_force_ginverse(mu, 8, candidate_universe(mu)) is not None
        assert engine_regular == oracle_hit


def test_budgets_are_enforced():
    mu = uniform_on(Z4, [Z4.element(1), Z4.element(2), Z4.element(3)])
    with pytest.raises(UniverseTooLarge):
        brute_force_ginverse(mu, 2, enumerate_group(Z4), max_atoms=3)
    with pytest.raises(UniverseTooLarge):
        brute_force_ginverse(mu, 50, enumerate_group(Z4), max_candidates=100)
    with pytest.raises(ValueError):
        brute_force_ginverse(mu, 0, enumerate_group(Z4))
