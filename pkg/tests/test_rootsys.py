import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from demchar.rootsys import (
    Dominance,
    build_datum,
    dominance_compare,
    dominance_leq,
    is_dominant,
    is_regular_dominant,
    pairing,
    simple_reflection,
    weight_add,
    weight_sub,
)

import oracles

TEST_MATRIX = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4), ("E", 6)]


def test_a1_datum():
    d = build_datum("A", 1)
    assert d.cartan == ((2,),)
    assert d.simple_roots == ((2,),)
    assert d.rho == (1,)
    assert d.positive_roots == ((2,),)


def test_a2_datum():
    d = build_datum("A", 2)
    assert d.cartan == ((2, -1), (-1, 2))
    assert d.simple_roots == ((2, -1), (-1, 2))
    assert len(d.positive_roots) == 3
    assert (1, 1) in d.positive_roots  # alpha_1 + alpha_2


def test_g2_datum():
    d = build_datum("G", 2)
    assert len(d.positive_roots) == 6


@pytest.mark.parametrize("family,rank", TEST_MATRIX)
def test_positive_root_count_classical(family, rank):
    d = build_datum(family, rank)
    assert len(d.positive_roots) == oracles.classical_positive_root_count(family, rank)


@pytest.mark.parametrize("family,rank", TEST_MATRIX)
def test_positive_roots_sum_to_twice_rho(family, rank):
    d = build_datum(family, rank)
    total = (0,) * rank
    for beta in d.positive_roots:
        total = weight_add(total, beta)
    assert total == tuple(2 * c for c in d.rho)


@pytest.mark.parametrize("family,rank", TEST_MATRIX)
def test_simple_reflection_permutes_other_positive_roots(family, rank):
    d = build_datum(family, rank)
    positives = set(d.positive_roots)
    for i in range(1, rank + 1):
        alpha = d.simple_roots[i - 1]
        images = {simple_reflection(d, i, beta) for beta in positives if beta != alpha}
        assert images == positives - {alpha}
        assert simple_reflection(d, i, alpha) == tuple(-c for c in alpha)


def test_cartan_diagonal_and_sign_pattern():
    for family, rank in TEST_MATRIX:
        d = build_datum(family, rank)
        for i in range(rank):
            assert d.cartan[i][i] == 2
            for j in range(rank):
                if i != j:
                    assert d.cartan[i][j] <= 0
                    assert (d.cartan[i][j] == 0) == (d.cartan[j][i] == 0)


@pytest.mark.parametrize(
    "family,rank",
    [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 2)],
)
def test_invalid_type_rejected(family, rank):
    with pytest.raises(ValueError):
        build_datum(family, rank)


def test_rank_guard_configurable():
    with pytest.raises(ValueError):
        build_datum("A", 9)
    d = build_datum("A", 9, max_rank=9)
    assert d.rank == 9


def test_pairing_examples():
    d2 = build_datum("A", 2)
    assert pairing(d2, (1, 1), 1) == 1
    assert pairing(d2, (-2, 1), 1) == -2
    d1 = build_datum("A", 1)
    assert pairing(d1, (3,), 1) == 3
    with pytest.raises(ValueError):
        pairing(d2, (1, 1), 3)
    with pytest.raises(ValueError):
        pairing(d2, (1, 1), 0)


def test_simple_reflection_examples():
    d = build_datum("A", 2)
    assert simple_reflection(d, 1, (1, 0)) == (-1, 1)
    # rho maps to rho - alpha_i for every i
    for i in (1, 2):
        assert simple_reflection(d, i, d.rho) == weight_sub(d.rho, d.simple_roots[i - 1])


@settings(max_examples=50, deadline=None)
@given(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), st.sampled_from([1, 2]))
def test_simple_reflection_involution(lam, i):
    d = build_datum("A", 2)
    assert simple_reflection(d, i, simple_reflection(d, i, lam)) == lam


def test_dominance_flags():
    d = build_datum("A", 2)
    assert is_regular_dominant(d, d.rho)
    assert is_dominant(d, (0, 3)) and not is_regular_dominant(d, (0, 3))
    assert not is_dominant(d, (-1, 2)) and not is_regular_dominant(d, (-1, 2))


def test_dominance_compare_examples():
    d = build_datum("A", 2)
    # lam - mu = alpha_1, so mu <= lam
    assert dominance_compare(d, (1, 0), (-1, 1)) == Dominance.LESS_OR_EQUAL
    assert dominance_compare(d, (1, 0), (1, 0)) == Dominance.EQUAL
    assert dominance_compare(d, (1, 0), (0, 1)) == Dominance.NON_INTEGRAL
    assert dominance_compare(d, (-1, 1), (1, 0)) == Dominance.GREATER_OR_EQUAL
    # alpha_1 - alpha_2 has mixed signs
    assert dominance_compare(d, (3, -3), (0, 0)) == Dominance.INCOMPARABLE


def test_dominance_transitivity_random_triples():
    rng = random.Random(7)
    for family, rank in [("A", 2), ("B", 2), ("A", 3)]:
        d = build_datum(family, rank)
        for _ in range(50):
            nu = oracles.random_weight(rng, rank)
            mu = nu
            for i in range(rank):
                c = rng.randint(0, 3)
                mu = weight_add(mu, tuple(c * x for x in d.simple_roots[i]))
            lam = mu
            for i in range(rank):
                c = rng.randint(0, 3)
                lam = weight_add(lam, tuple(c * x for x in d.simple_roots[i]))
            assert dominance_leq(d, nu, mu)
            assert dominance_leq(d, mu, lam)
            assert dominance_leq(d, nu, lam)


def test_family_normalization():
    assert build_datum("a", 2).family == "A"
