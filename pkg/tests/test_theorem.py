import itertools
import random

import jsonschema
import pytest

from demchar.charring import CharElement, extreme_weight, monomial
from demchar.demazure import demazure_char, top_cohomology_char
from demchar.rootsys import weight_sub
from demchar.theorem import (
    VERIFICATION_REPORT_SCHEMA,
    chi_prime_identity,
    chi_prime_longest,
    epsilon_char,
    psi_character,
    starred_top_characters,
    sweep_verify_lemma31,
    sweep_verify_theorem,
    theorem_lhs,
    theorem_rhs,
    verify_lemma31,
    verify_theorem,
)
from demchar.weyl import element_by_word, lower_interval

import oracles


def test_lhs_frozen_examples():
    g1 = oracles.group("A", 1)
    s = g1.longest_element
    assert theorem_lhs(g1, s, (2,)) == monomial((2,)) + monomial((0,))
    assert theorem_lhs(g1, g1.identity_element, (3,)) == monomial((3,))
    g2 = oracles.group("A", 2)
    s1 = element_by_word(g2, (1,))
    assert theorem_lhs(g2, s1, (2, 1)) == monomial((2, 1)) + monomial((0, 2))


def test_rhs_frozen_examples():
    g1 = oracles.group("A", 1)
    s = g1.longest_element
    assert theorem_rhs(g1, s, (2,)) == monomial((2,)) + monomial((0,))
    g2 = oracles.group("A", 2)
    s1 = element_by_word(g2, (1,))
    assert theorem_rhs(g2, s1, (2, 1)) == monomial((2, 1)) + monomial((0, 2))
    assert theorem_rhs(g2, g2.longest_element, (1, 1)) == monomial((1, 1))


def test_verify_examples():
    g1 = oracles.group("A", 1)
    r = verify_theorem(g1, g1.longest_element, (2,))
    assert r.passed and r.lhs == r.rhs and r.difference.is_zero()
    g2 = oracles.group("A", 2)
    r = verify_theorem(g2, g2.longest_element, (1, 1))
    assert r.passed
    assert r.lhs == monomial((1, 1))
    assert r.interval_size == 6


def test_verify_exhaustive_a2():
    g = oracles.group("A", 2)
    for tau in g.elements:
        r = verify_theorem(g, tau, (2, 2))
        assert r.passed
        assert r.dim_lhs == r.dim_rhs


def test_precondition_regular_dominant():
    g = oracles.group("A", 2)
    for fn in (theorem_lhs, theorem_rhs, verify_theorem, verify_lemma31):
        with pytest.raises(ValueError):
            fn(g, g.longest_element, (0, 1))


def test_report_passed_iff_difference_zero():
    g = oracles.group("A", 1)
    r = verify_theorem(g, g.longest_element, (3,))
    assert r.passed == r.difference.is_zero() == (r.lhs == r.rhs) == True  # noqa: E712


def test_report_json_schema_and_per_w():
    g = oracles.group("A", 2)
    tau = g.longest_element
    r = verify_theorem(g, tau, (2, 1), keep_per_w=True)
    data = r.to_json_dict(tau, (2, 1))
    jsonschema.validate(data, VERIFICATION_REPORT_SCHEMA)
    assert data["passed"] is True
    assert data["difference_terms"] == []
    assert set(r.per_w_terms) == {w.word for w in lower_interval(g, tau)}
    total = CharElement.zero(2)
    for term in r.per_w_terms.values():
        total = total + term
    assert total == r.lhs


def test_epsilon_frozen_examples():
    g = oracles.group("A", 1)
    s = g.longest_element
    assert epsilon_char(g, g.identity_element, (2,)) == monomial((1,))
    assert epsilon_char(g, s, (2,)) == monomial((-1,))
    g2 = oracles.group("A", 2)
    for lam in [(1, 1), (3, 2)]:
        assert epsilon_char(g2, g2.identity_element, lam) == monomial(weight_sub(lam, (1, 1)))


def test_lemma_examples():
    g = oracles.group("A", 1)
    s = g.longest_element
    r = verify_lemma31(g, s, (2,))
    assert r.passed
    assert r.lhs == monomial((1,)) + monomial((-1,))
    assert verify_lemma31(g, g.identity_element, (4,)).passed


def test_lemma_exhaustive_b2():
    g = oracles.group("B", 2)
    for tau in g.elements:
        assert verify_lemma31(g, tau, (2, 2)).passed


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2)])
def test_epsilon_nonnegative_with_expected_lowest_weight(family, rank):
    g = oracles.group(family, rank)
    d = g.datum
    for lam in itertools.product((1, 2), repeat=rank):
        for w in g.elements:
            eps = epsilon_char(g, w, lam)
            assert all(c > 0 for c in eps.terms.values())
            if not eps.is_zero():
                low = w.apply(weight_sub(lam, d.rho))
                assert extreme_weight(d, eps, "lowest") == low
                assert eps.coeff(low) == 1


def test_starred_top_lowest_weight():
    g = oracles.group("B", 2)
    d = g.datum
    lam = (2, 3)
    for w in g.elements:
        v = top_cohomology_char(g, w, lam).star()
        if v.is_zero():
            continue
        expected = tuple(a + b for a, b in zip(w.apply(weight_sub(lam, d.rho)), d.rho))
        assert extreme_weight(d, v, "lowest") == expected


def test_dimension_bookkeeping():
    g = oracles.group("A", 2)
    lam = (2, 2)
    for tau in g.elements:
        total = sum(epsilon_char(g, w, lam).dimension() for w in lower_interval(g, tau))
        assert total == demazure_char(g, tau, weight_sub(lam, g.datum.rho)).dimension()


def test_psi_character_forced_cases():
    for family, rank in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)]:
        g = oracles.group(family, rank)
        zero = (0,) * rank
        assert psi_character(g.identity_element, chi_prime_identity(rank)) == zero
        assert psi_character(g.longest_element, chi_prime_longest(rank)) == zero
        assert psi_character(g.identity_element, zero) == (2,) * rank


def test_psi_character_arithmetic_identity():
    g = oracles.group("B", 2)
    rng = random.Random(43)
    rho = g.datum.rho
    for _ in range(50):
        chi = oracles.random_weight(rng, 2, -5, 5)
        w = g.elements[rng.randrange(g.order)]
        lhs = weight_sub(psi_character(w, chi), rho)
        rhs = weight_sub(w.apply(rho), w.apply(chi))
        assert lhs == rhs


def test_sweeps_match_pairwise_verification():
    g = oracles.group("B", 2)
    lam = (2, 1)
    sweep_t = sweep_verify_theorem(g, lam)
    sweep_l = sweep_verify_lemma31(g, lam)
    for tau in g.elements:
        direct_t = verify_theorem(g, tau, lam)
        direct_l = verify_lemma31(g, tau, lam)
        assert sweep_t[tau.index].lhs == direct_t.lhs
        assert sweep_t[tau.index].rhs == direct_t.rhs
        assert sweep_l[tau.index].lhs == direct_l.lhs
        assert sweep_l[tau.index].rhs == direct_l.rhs
        assert sweep_t[tau.index].passed and sweep_l[tau.index].passed


def test_theorem_lhs_accepts_precomputed_terms():
    g = oracles.group("A", 2)
    lam = (2, 2)
    terms = starred_top_characters(g, lam)
    for tau in g.elements:
        assert theorem_lhs(g, tau, lam, terms=terms) == theorem_lhs(g, tau, lam)
