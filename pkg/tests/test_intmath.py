import math
import random

import pytest
from hypothesis import given, strategies as st

from catalan.intmath import (
    exact_root,
    factorint,
    iroot,
    is_prime,
    is_square,
    mulmod_words,
    powmod_words,
    primes_up_to,
    require_prime,
    sqrt_minus_one_mod,
)


@given(st.integers(min_value=0, max_value=10**40), st.integers(min_value=2, max_value=7))
def test_iroot_brackets(n, k):
    r, exact = iroot(n, k)
    assert r**k <= n < (r + 1) ** k
    assert exact == (r**k == n)


@given(st.integers(min_value=-(10**30), max_value=10**30))
def test_iroot_odd_signed(n):
    r, exact = iroot(n, 3)
    if exact:
        assert r**3 == n
    assert exact == (exact_root(n, 3) is not None)


def test_iroot_negative_even_rejected():
    with pytest.raises(ValueError):
        iroot(-4, 2)


def test_is_square_small():
    squares = {i * i for i in range(100)}
    assert [n for n in range(10**4) if is_square(n)] == sorted(s for s in squares if s < 10**4)


def test_primes_match_trial_division():
    def naive(n):
        return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))

    assert primes_up_to(3000) == [n for n in range(3001) if naive(n)]
    assert all(is_prime(n) == naive(n) for n in range(3001))


def test_is_prime_known_values():
    assert is_prime(4871) and is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(2**61 + 1)


def test_require_prime():
    assert require_prime(7) == 7
    for bad in (0, 1, 9, -7):
        with pytest.raises(ValueError):
            require_prime(bad)


@given(st.integers(min_value=1, max_value=10**18))
def test_factorint_reconstructs(n):
    f = factorint(n)
    assert math.prod(p**e for p, e in f.items()) == n
    assert all(is_prime(p) for p in f)
    assert list(f) == sorted(f)


def test_factorint_semiprime_beyond_trial_limit():
    p, q = 1000003, 1000033
    assert factorint(p * q) == {p: 1, q: 1}


@pytest.mark.parametrize("bits", [8, 16, 32])
def test_word_arithmetic_matches_builtin(bits):
    rng = random.Random(bits)
    for _ in range(300):
        m = rng.randint(2, 10**15)
        a, b, e = rng.randrange(m), rng.randrange(m), rng.randint(0, 10**6)
        assert mulmod_words(a, b, m, bits) == a * b % m
        assert powmod_words(a, e, m, bits) == pow(a, e, m)


def test_sqrt_minus_one():
    for p in primes_up_to(2000):
        if p % 4 == 1:
            r = sqrt_minus_one_mod(p)
            assert (r * r + 1) % p == 0
