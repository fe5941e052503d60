import math
import random

import pytest
from hypothesis import given, strategies as st

from catalan.gaussian import (
    I,
    ONE,
    GaussianInt,
    QuadInt,
    canonical_associate,
    divrem,
    divides,
    factor_gaussian,
    gaussian_gcd,
    gaussian_prime_over,
    norm,
    quad_pow_mod,
    round_half_down,
    units,
)
from catalan.intmath import is_prime

small = st.integers(min_value=-(10**6), max_value=10**6)
gauss = st.builds(GaussianInt, small, small)
nonzero = gauss.filter(bool)


def test_round_half_down():
    assert [round_half_down(n, 2) for n in (-3, -1, 1, 3)] == [-2, -1, 0, 1]
    assert round_half_down(7, 3) == 2


@given(gauss, nonzero)
def test_divrem(z, w):
    q, r = divrem(z, w)
    assert z == w * q + r
    assert 2 * norm(r) <= norm(w)


@given(gauss, gauss)
def test_norm_multiplicative(z, w):
    assert norm(z * w) == norm(z) * norm(w)


def test_units():
    assert units() == {ONE, -ONE, I, -I}
    assert I * I == -ONE


@given(nonzero)
def test_canonical_associate(z):
    c = canonical_associate(z)
    assert c.re > 0 and c.im >= 0
    assert any(u * c == z for u in units())


def test_gcd_examples():
    assert gaussian_gcd(GaussianInt(3, 0), GaussianInt(1, 2)) == ONE
    assert gaussian_gcd(GaussianInt(5, 0), GaussianInt(1, 2)) == GaussianInt(1, 2)
    with pytest.raises(ValueError):
        gaussian_gcd(GaussianInt(0, 0), GaussianInt(0, 0))


@given(nonzero, nonzero)
def test_gcd_divides_both(z, w):
    g = gaussian_gcd(z, w)
    assert divides(g, z) and divides(g, w)


def test_prime_over():
    for p in (2, 5, 13, 101, 7, 11):
        pi = gaussian_prime_over(p)
        assert norm(pi) == (p * p if p % 4 == 3 else p)


def test_factor_five():
    unit, table = factor_gaussian(GaussianInt(5, 0))
    assert set(table) == {GaussianInt(1, 2), GaussianInt(2, 1)}
    assert unit * GaussianInt(1, 2) * GaussianInt(2, 1) == GaussianInt(5, 0)


def test_factor_reconstructs():
    rng = random.Random(7)
    for _ in range(300):
        z = GaussianInt(rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        if not z:
            continue
        unit, table = factor_gaussian(z)
        prod = unit
        for pi, e in table.items():
            assert pi == canonical_associate(pi)
            n = norm(pi)
            assert is_prime(n) or (math.isqrt(n) ** 2 == n and is_prime(math.isqrt(n)))
            prod = prod * pi**e
        assert prod == z


def test_quadint():
    a = QuadInt(2, 1, 3)
    assert (a**5).norm() == 1
    assert quad_pow_mod(a, 10, 97) == (a**10).mod(97)
    with pytest.raises(ValueError):
        a + QuadInt(1, 1, 2)
