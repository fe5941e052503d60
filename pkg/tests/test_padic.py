from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catalan.padic import (
    INF,
    dominant_term_nonzero,
    ord_factorial,
    ord_p,
    ord_progression_product,
    progression_excess,
    rational_binomial,
)

primes = st.sampled_from([2, 3, 5, 7, 11])
rationals = st.fractions(max_denominator=10**6).filter(lambda f: abs(f.numerator) < 10**9)


def test_examples():
    assert ord_p(3, 18) == 2
    assert ord_p(2, Fraction(3, 8)) == -3
    assert ord_p(5, 0) == INF
    assert ord_factorial(2, 10) == 8
    assert ord_factorial(3, 100) == 48


@given(primes, rationals, rationals)
def test_valuation_rules(p, a, b):
    oa, ob = ord_p(p, a), ord_p(p, b)
    assert ord_p(p, a * b) == oa + ob
    s = ord_p(p, a + b)
    assert s >= min(oa, ob)
    if oa != ob:
        assert s == min(oa, ob)


@given(primes, st.integers(min_value=0, max_value=5000))
def test_legendre_against_naive(q, m):
    naive = sum(ord_p(q, k) for k in range(1, m + 1))
    assert ord_factorial(q, m) == naive
    assert ord_factorial(q, m) * (q - 1) <= m


@given(primes, st.integers(1, 300), st.integers(1, 50), st.integers(1, 40))
def test_progression_excess_bounds(p, a, d, m):
    if d % p == 0:
        with pytest.raises(ValueError):
            ord_progression_product(a, d, m, p)
        return
    excess = progression_excess(a, d, m, p)
    assert all(e in (0, 1) for e in excess)
    prod = 1
    for i in range(m):
        prod *= a + i * d
    assert ord_progression_product(a, d, m, p) == ord_p(p, prod)
    assert ord_p(p, prod) == ord_factorial(p, m) + sum(excess)


def test_progression_zero_product_rejected():
    with pytest.raises(ValueError):
        ord_progression_product(-2, 1, 5, 3)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_binomial_denominator(q):
    for a in (1, 2, -1, 4, 11, -13):
        if a % q == 0:
            continue
        for k in range(41):
            c = rational_binomial(Fraction(a, q), k)
            assert c.denominator == q ** (k + ord_factorial(q, k))


def test_binomial_integer_case():
    assert rational_binomial(5, 2) == 10
    assert rational_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_dominant_term():
    assert dominant_term_nonzero([9, 3, 1], 3)
    assert not dominant_term_nonzero([1, 1], 3)
    with pytest.raises(ValueError):
        dominant_term_nonzero([1], 3)
