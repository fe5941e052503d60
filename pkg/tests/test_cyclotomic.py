import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from catalan.cyclotomic import (
    CyclotomicInt,
    FiniteAbelianGroup,
    GroupRingElement,
    conjugate,
    cyc_divrem,
    cyc_norm,
    gr_one,
    gr_zero,
)

G = FiniteAbelianGroup((2, 3))
coef = st.integers(-50, 50)
elements = st.dictionaries(st.tuples(st.integers(0, 1), st.integers(0, 2)), coef, max_size=6).map(
    lambda d: GroupRingElement(G, d)
)


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + gr_zero(G) == a and a * gr_one(G) == a
    assert a - a == gr_zero(G)


def test_group():
    assert G.order() == 6 and len(G.elements()) == 6
    assert G.reduce((3, 5)) == (1, 2)
    with pytest.raises(ValueError):
        FiniteAbelianGroup((1,))
    with pytest.raises(ValueError):
        gr_one(G) + gr_one(FiniteAbelianGroup((6,)))


def test_zeta_order():
    for p in (3, 5):
        z = CyclotomicInt.zeta(p)
        assert z**p == CyclotomicInt.from_int(p, 1)
        total = CyclotomicInt.from_int(p, 0)
        for k in range(p):
            total = total + z**k
        assert not total


def _numeric_norm(x: CyclotomicInt) -> int:
    # product over the embeddings zeta -> exp(2 pi i k / p)
    mpmath.mp.dps = 60
    p = x.p
    prod = mpmath.mpc(1)
    for k in range(1, p):
        w = mpmath.exp(2j * mpmath.pi * k / p)
        prod *= sum(c * w**i for i, c in enumerate(x.coords))
    return int(mpmath.nint(prod.real))


def rand_cyc(rng, p, size):
    return CyclotomicInt(p, [rng.randint(-size, size) for _ in range(p - 1)])


@pytest.mark.parametrize("p", [3, 5])
def test_norm_against_embeddings(p):
    rng = random.Random(p)
    for _ in range(200):
        x = rand_cyc(rng, p, 1000)
        assert cyc_norm(x) == _numeric_norm(x)


@pytest.mark.parametrize("p", [3, 5])
def test_norm_multiplicative_and_conjugates(p):
    rng = random.Random(10 + p)
    for _ in range(300):
        x, y = rand_cyc(rng, p, 200), rand_cyc(rng, p, 200)
        assert cyc_norm(x * y) == cyc_norm(x) * cyc_norm(y)
        assert conjugate(x * y, 2) == conjugate(x, 2) * conjugate(y, 2)
        assert cyc_norm(x) >= 0


@pytest.mark.parametrize("p", [3, 5])
def test_divrem(p):
    rng = random.Random(20 + p)
    for _ in range(1000):
        z, w = rand_cyc(rng, p, 10**4), rand_cyc(rng, p, 50)
        if not w:
            continue
        q, r = cyc_divrem(z, w)
        assert z == w * q + r
        assert abs(cyc_norm(r)) < abs(cyc_norm(w))


def test_divrem_exact_and_zero():
    z = CyclotomicInt(5, [3, -1, 4, 2])
    w = CyclotomicInt(5, [1, 1, 0, -2])
    q, r = cyc_divrem(z * w, w)
    assert q == z and not r
    with pytest.raises(ZeroDivisionError):
        cyc_divrem(z, CyclotomicInt.from_int(5, 0))


def test_mixed_p_rejected():
    with pytest.raises(ValueError):
        CyclotomicInt.zeta(3) + CyclotomicInt.zeta(5)
    with pytest.raises(ValueError):
        CyclotomicInt(7, [0] * 6)
