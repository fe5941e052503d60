import math
import random

import pytest
from hypothesis import given, strategies as st

from catalan import ufd
from catalan.gaussian import GaussianInt, norm
from catalan.ufd import Z, ZI, PreconditionError


def test_bachet_examples():
    assert ufd.bachet(Z, 3, 5) == (2, -1)
    assert ufd.bachet(Z, 1, 7) == (1, 0)
    with pytest.raises(ValueError):
        ufd.bachet(Z, 4, 6)


@given(st.integers(-(10**12), 10**12), st.integers(-(10**12), 10**12))
def test_bachet_identity_z(a, b):
    if math.gcd(a, b) != 1:
        return
    c, d = ufd.bachet(Z, a, b)
    assert c * a + d * b == 1


def test_bachet_identity_zi():
    rng = random.Random(3)
    for _ in range(300):
        a = GaussianInt(rng.randint(-999, 999), rng.randint(-999, 999))
        b = GaussianInt(rng.randint(-999, 999), rng.randint(-999, 999))
        if (not a and not b) or not ufd.coprime(ZI, a, b):
            continue
        c, d = ufd.bachet(ZI, a, b)
        assert c * a + d * b == GaussianInt(1)


def test_pp1_examples():
    assert ufd.pp1_extract(Z, [4, 9], 2) == [2, 3]
    assert ufd.pp1_extract(Z, [-8, 27], 3) == [-2, 3]


def test_pp1_rejects():
    with pytest.raises(PreconditionError):
        ufd.pp1_extract(Z, [4, 6], 2)
    with pytest.raises(PreconditionError, match="multiplicity 3"):
        ufd.pp1_extract(Z, [8, 9], 2)


def test_pp1_gaussian_up_to_unit():
    rng = random.Random(11)
    done = 0
    while done < 200:
        r1 = GaussianInt(rng.randint(-30, 30), rng.randint(-30, 30))
        r2 = GaussianInt(rng.randint(-30, 30), rng.randint(-30, 30))
        if not r1 or not r2 or not ufd.coprime(ZI, r1, r2):
            continue
        l = rng.choice([2, 3])
        u = rng.choice(sorted(ZI.units()))
        parts = [r1**l * u**l, r2**l]
        roots = ufd.pp1_extract(ZI, parts, l)
        assert all(ufd.associates(ZI, b**l, a) for b, a in zip(roots, parts))
        assert all(b**l == a for b, a in zip(roots, parts))
        done += 1


def test_pp2_examples():
    r = ufd.pp2_extract(Z, 2, 4, 2, 3)
    assert (abs(r.d), abs(r.e)) == (1, 1)
    r = ufd.pp2_extract(Z, 3, 27, 3, 2)
    assert (abs(r.d), abs(r.e)) == (1, 3)
    r = ufd.pp2_extract(Z, 0, 3, 3, 2)
    assert (r.d, r.e, r.single) == (1, 0, "b")


def test_pp2_rejects_wrong_gcd():
    with pytest.raises(PreconditionError):
        ufd.pp2_extract(Z, 4, 9, 3, 2)
    with pytest.raises(PreconditionError):
        ufd.pp2_extract(Z, 3, 6, 6, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_pp2_roundtrip_z(p):
    rng = random.Random(p)
    for _ in range(100):
        k = rng.choice([2, 3, 4])
        d, e = rng.randint(1, 40), rng.randint(1, 40)
        if d % p == 0 or math.gcd(d, e) != 1:
            continue
        a, b = p * d**k, p ** (k - 1) * e**k
        r = ufd.pp2_extract(Z, a, b, p, k)
        assert {abs(r.d), abs(r.e)} == {d, e} or (abs(r.d), abs(r.e)) == (d, e)
        assert p * abs(r.d) ** k == a and p ** (k - 1) * abs(r.e) ** k == b


def test_pp2_gaussian():
    p = GaussianInt(1, 1)
    rng = random.Random(5)
    for _ in range(100):
        d = GaussianInt(rng.randint(-20, 20), rng.randint(-20, 20))
        e = GaussianInt(rng.randint(-20, 20), rng.randint(-20, 20))
        if not d or not e or norm(d) % 2 == 0 or not ufd.coprime(ZI, d, e):
            continue
        a, b = p * d**2, p * e**2
        r = ufd.pp2_extract(ZI, a, b, p, 2)
        got = {ufd.ZI.canonical(p * r.d**2), ufd.ZI.canonical(p * r.e**2)}
        assert got == {ufd.ZI.canonical(a), ufd.ZI.canonical(b)}


@given(st.integers(1, 10**9), st.integers(1, 10**9))
def test_tables(a, b):
    X, Y = ufd.factorize(Z, a), ufd.factorize(Z, b)
    assert ufd.divides(X, Y) == (b % a == 0)
    assert ufd.gcd_fact(X, Y).element() == math.gcd(a, b)
    assert ufd.multiply_fact(X, Y).element() == a * b


@given(st.integers(-(10**9), 10**9).filter(bool))
def test_factorization_unique(a):
    # factoring an associate or a reordered product gives the same table
    assert ufd.factorize(Z, a).factors == ufd.factorize(Z, -a).factors


def test_associates_mutual_divisibility():
    z = GaussianInt(3, 4)
    for u in ZI.units():
        assert ufd.associates(ZI, z, z * u)
    assert not ufd.associates(ZI, z, z * GaussianInt(1, 1))
    assert ufd.associates(Z, 6, -6) and not ufd.associates(Z, 6, 12)
