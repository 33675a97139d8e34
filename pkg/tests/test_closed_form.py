import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from dicentropy.closed_form import (
    binom, binomial_even_pmf, binomial_pmf, coupling_pmf, cycle_colour_pmf, entropy,
)
from dicentropy.exact_dist import exact_pmf_enumeration, exact_pmf_inclusion_exclusion
from dicentropy.hypergraph import gen_cycle
from dicentropy.pmf import Pmf, pmf_from_csv, pmf_to_csv


def test_binomial_examples():
    assert binomial_pmf(0).as_dict() == {0: 1}
    assert binomial_pmf(2).as_dict() == {0: F(1, 4), 1: F(1, 2), 2: F(1, 4)}
    assert binomial_pmf(4).as_dict() == {k: F(c, 16) for k, c in enumerate([1, 4, 6, 4, 1])}


def test_binom_convention():
    assert binom(3, -1) == 0 and binom(3, 4) == 0
    assert [binom(10, k) for k in range(11)] == [math.comb(10, k) for k in range(11)]


def test_even_binomial_examples():
    assert binomial_even_pmf(3).as_dict() == {0: F(1, 4), 2: F(3, 4)}
    assert binomial_even_pmf(4).as_dict() == {0: F(1, 8), 2: F(6, 8), 4: F(1, 8)}
    assert binomial_even_pmf(1).as_dict() == {0: 1}
    with pytest.raises(ValueError):
        binomial_even_pmf(0)


def test_cycle_law_examples():
    assert cycle_colour_pmf(3).as_dict() == {2: F(3, 4), 3: F(1, 4)}
    assert cycle_colour_pmf(4).as_dict() == {2: F(1, 8), 3: F(6, 8), 4: F(1, 8)}
    assert cycle_colour_pmf(5).as_dict() == {3: F(5, 16), 4: F(10, 16), 5: F(1, 16)}
    with pytest.raises(ValueError):
        cycle_colour_pmf(2)


def test_coupling_examples():
    assert coupling_pmf(3).as_dict() == {0: F(1, 4), 2: F(3, 4)}
    assert coupling_pmf(4).as_dict() == {0: F(1, 8), 2: F(6, 8), 4: F(1, 8)}
    assert coupling_pmf(1).as_dict() == {0: 1}


def test_entropy_examples():
    assert entropy(Pmf.from_mapping({0: 1})) == 0.0
    assert entropy(Pmf.from_mapping({k: F(1, 4) for k in range(4)})) == 2.0
    expected = -(0.75 * math.log2(0.75) + 0.25 * math.log2(0.25))
    assert entropy(cycle_colour_pmf(3)) == pytest.approx(0.811278, abs=1e-6)
    assert entropy(cycle_colour_pmf(3)) == pytest.approx(expected, abs=1e-15)


@given(st.integers(1, 300))
def test_uniform_entropy(k):
    assert abs(entropy(Pmf.from_mapping({x: F(1, k) for x in range(k)})) - math.log2(k)) <= 1e-12


@pytest.mark.parametrize("n", range(3, 65))
def test_cycle_law_is_shifted_even_binomial(n):
    shifted = cycle_colour_pmf(n).map(lambda x: 2 * (n - x))
    assert shifted == binomial_even_pmf(n)
    assert entropy(cycle_colour_pmf(n)) == pytest.approx(entropy(binomial_even_pmf(n)), abs=1e-12)


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_law_matches_enumeration(n):
    assert exact_pmf_enumeration(gen_cycle(n)) == cycle_colour_pmf(n)


@pytest.mark.parametrize("n", [14, 18])
def test_cycle_law_matches_inclusion_exclusion(n):
    assert exact_pmf_inclusion_exclusion(gen_cycle(n)) == cycle_colour_pmf(n)


@pytest.mark.parametrize("n", range(1, 65))
def test_coupling_identity(n):
    assert coupling_pmf(n) == binomial_even_pmf(n)


@pytest.mark.parametrize("n", range(1, 65))
def test_half_of_binomial_is_even(n):
    p = binomial_pmf(n)
    assert sum(q for k, q in zip(p.support, p.probs) if k % 2 == 0) == F(1, 2)


@pytest.mark.parametrize("n", range(2, 65))
def test_entropy_sandwich(n):
    h_prev = entropy(binomial_pmf(n - 1))
    assert h_prev - 1 <= entropy(binomial_even_pmf(n)) <= h_prev


def test_pmf_validation():
    with pytest.raises(ValueError):
        Pmf((0, 1), (F(1, 2), F(1, 3)))
    with pytest.raises(ValueError):
        Pmf((1, 0), (F(1, 2), F(1, 2)))
    assert Pmf.from_mapping({0: F(0), 1: F(1)}).support == (1,)


def test_pmf_csv_round_trip():
    p = cycle_colour_pmf(6)
    text = pmf_to_csv(p)
    assert text.splitlines()[0] == "x,numerator,denominator,probability_float"
    assert pmf_from_csv(text) == p
