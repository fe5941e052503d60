"""Unique factorization over Euclidean domains and the principles of powers.

A :class:`Domain` bundles the ring operations a Euclidean domain needs.
Irreducible factorizations are kept as tables from canonical associates to
multiplicities plus one leftover unit, so two factorizations of associated
elements differ only in that unit and compare equal key-for-key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from . import gaussian
from .gaussian import GaussianInt
from .intmath import factorint


class PreconditionError(ValueError):
    """An input violates the hypothesis of a power principle or lemma."""


class Domain:
    """Capability record for a Euclidean domain.

    Subclasses supply ``divrem`` (whose remainder is zero or strictly smaller
    in the domain's measure), ``units``, ``canonical`` and ``factor``.
    """

    name = "domain"
    zero: Any
    one: Any

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def power(self, a, n: int):
        result = self.one
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def divrem(self, a, b):
        raise NotImplementedError

    def measure(self, a) -> int:
        raise NotImplementedError

    def units(self) -> tuple:
        raise NotImplementedError

    def canonical(self, a):
        raise NotImplementedError

    def factor(self, a) -> tuple[Any, dict]:
        """``(unit, {canonical irreducible: multiplicity})`` for nonzero ``a``."""
        raise NotImplementedError

    def coerce(self, a):
        return a

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        return a in self.units()

    def unit_between(self, a, b):
        """The unit u with a == u*b, or None."""
        for u in self.units():
            if self.mul(u, b) == a:
                return u
        return None

    def divides(self, a, b) -> bool:
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.divrem(b, a)[1])

    def exact_div(self, a, b):
        q, r = self.divrem(a, b)
        if not self.is_zero(r):
            raise ValueError(f"{b} does not divide {a}")
        return q

    def unit_inverse(self, u):
        for v in self.units():
            if self.mul(u, v) == self.one:
                return v
        raise ValueError(f"{u} is not a unit")

    def unit_root(self, u, l: int):
        """A unit v with v**l == u, or None."""
        for v in self.units():
            if self.power(v, l) == u:
                return v
        return None


class IntegerDomain(Domain):
    name = "Z"
    zero = 0
    one = 1

    def coerce(self, a):
        return int(a)

    def divrem(self, a, b):
        if b == 0:
            raise ZeroDivisionError("integer division by zero")
        return divmod(a, b)

    def measure(self, a) -> int:
        return abs(a)

    def units(self):
        return (1, -1)

    def is_unit(self, a):
        return a in (1, -1)

    def canonical(self, a):
        return abs(a)

    def factor(self, a):
        if a == 0:
            raise ValueError("zero has no factorization")
        return (1 if a > 0 else -1), factorint(a)


class GaussianDomain(Domain):
    name = "Z[i]"
    zero = gaussian.ZERO
    one = gaussian.ONE

    def coerce(self, a):
        return GaussianInt.coerce(a)

    def divrem(self, a, b):
        return gaussian.divrem(a, b)

    def measure(self, a) -> int:
        return gaussian.norm(a)

    def units(self):
        return gaussian.UNITS

    def is_unit(self, a):
        return gaussian.is_unit(a)

    def canonical(self, a):
        return gaussian.canonical_associate(a)

    def factor(self, a):
        return gaussian.factor_gaussian(a)


Z = IntegerDomain()
ZI = GaussianDomain()


@dataclass
class Factorization:
    """Irreducible factorization: ``unit * prod(key**mult) == element``."""

    unit: Any
    factors: dict = field(default_factory=dict)
    domain: Domain = field(default=Z, compare=False, repr=False)

    def __post_init__(self):
        if any(m < 1 for m in self.factors.values()):
            raise ValueError("multiplicities must be positive")

    def element(self):
        dom = self.domain
        out = self.unit
        for key, mult in self.factors.items():
            out = dom.mul(out, dom.power(key, mult))
        return out

    def keys(self) -> set:
        return set(self.factors)

    def __getitem__(self, key) -> int:
        return self.factors[key]


def factorize(domain: Domain, a) -> Factorization:
    a = domain.coerce(a)
    if domain.is_zero(a):
        raise ValueError("zero has no irreducible factorization")
    unit, table = domain.factor(a)
    fact = Factorization(unit, dict(table), domain)
    assert fact.element() == a, f"reconstruction failed for {a}"
    return fact


def divides(X: Factorization, Y: Factorization) -> bool:
    return all(key in Y.factors and m <= Y.factors[key] for key, m in X.factors.items())


def gcd_fact(X: Factorization, Y: Factorization) -> Factorization:
    common = {key: min(m, Y.factors[key]) for key, m in X.factors.items() if key in Y.factors}
    return Factorization(X.domain.one, dict(sorted(common.items())), X.domain)


def multiply_fact(X: Factorization, Y: Factorization) -> Factorization:
    table = dict(X.factors)
    for key, m in Y.factors.items():
        table[key] = table.get(key, 0) + m
    return Factorization(X.domain.mul(X.unit, Y.unit), dict(sorted(table.items())), X.domain)


def element_gcd(domain: Domain, a, b):
    """Canonical gcd by the Euclidean algorithm."""
    a, b = domain.coerce(a), domain.coerce(b)
    if domain.is_zero(a) and domain.is_zero(b):
        raise ValueError("gcd(0, 0) does not exist")
    while not domain.is_zero(b):
        a, b = b, domain.divrem(a, b)[1]
    return domain.canonical(a)


def coprime(domain: Domain, a, b) -> bool:
    return domain.is_unit(element_gcd(domain, a, b))


def associates(domain: Domain, a, b) -> bool:
    """Associated iff each divides the other."""
    return domain.divides(a, b) and domain.divides(b, a)


def bachet(domain: Domain, a, b) -> tuple:
    """Coefficients (c, d) with c*a + d*b == 1 for coprime a, b."""
    a, b = domain.coerce(a), domain.coerce(b)
    if domain.is_zero(a) and domain.is_zero(b):
        raise ValueError("0 and 0 are not coprime")
    r0, r1 = a, b
    s0, s1 = domain.one, domain.zero
    t0, t1 = domain.zero, domain.one
    while not domain.is_zero(r1):
        q, r = domain.divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, domain.sub(s0, domain.mul(q, s1))
        t0, t1 = t1, domain.sub(t0, domain.mul(q, t1))
    if not domain.is_unit(r0):
        raise ValueError(f"{a} and {b} are not coprime")
    inv = domain.unit_inverse(r0)
    c, d = domain.mul(s0, inv), domain.mul(t0, inv)
    assert domain.add(domain.mul(c, a), domain.mul(d, b)) == domain.one
    return c, d


def _pairwise_coprime(domain: Domain, parts: Sequence) -> None:
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if domain.is_zero(parts[i]) and domain.is_zero(parts[j]):
                raise PreconditionError(f"parts {i} and {j} are both zero")
            if not coprime(domain, parts[i], parts[j]):
                raise PreconditionError(f"parts {i} and {j} are not coprime")


def _root_of_table(domain: Domain, table: dict, l: int, label: str):
    root = domain.one
    for key, mult in table.items():
        if mult % l:
            raise PreconditionError(
                f"{label}: irreducible {key} has multiplicity {mult}, not divisible by {l}"
            )
        root = domain.mul(root, domain.power(key, mult // l))
    return root


def _absorb_unit(domain: Domain, target, base, root, l: int):
    """Fold the unit ``target / (base * root**l)`` into ``root`` when it is an l-th power."""
    scaled = domain.mul(base, domain.power(root, l))
    u = domain.unit_between(target, scaled)
    if u is None:
        raise AssertionError(f"{target} is not associated to {scaled}")
    v = domain.unit_root(u, l)
    return domain.mul(v, root) if v is not None else root


def pp1_extract(domain: Domain, parts: Sequence, l: int) -> list:
    """Roots b_i with a_i ~ b_i**l for pairwise coprime a_i whose product is
    an l-th power up to a unit.

    Whenever the leftover unit is itself an l-th power it is absorbed, so for
    Z with odd l the equalities a_i == b_i**l hold exactly, signs included.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    parts = [domain.coerce(a) for a in parts]
    _pairwise_coprime(domain, parts)
    out = []
    for i, a in enumerate(parts):
        if domain.is_zero(a):
            out.append(domain.zero)
            continue
        unit, table = domain.factor(a)
        root = _root_of_table(domain, table, l, f"part {i}")
        out.append(_absorb_unit(domain, a, domain.one, root, l))
    return out


@dataclass(frozen=True)
class PP2Result:
    d: Any
    e: Any
    single: str  # which input carries p to the first power: "a" or "b"


def pp2_extract(domain: Domain, a, b, p, k: int) -> PP2Result:
    """Coprime (d, e) with {a, b} ~ {p d^k, p^(k-1) e^k}, given gcd(a, b) ~ p
    and ab ~ c^k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    a, b, p = domain.coerce(a), domain.coerce(b), domain.coerce(p)
    if domain.is_zero(p) or domain.is_unit(p):
        raise PreconditionError(f"{p} is not irreducible")
    _, ptable = domain.factor(p)
    if list(ptable.values()) != [1]:
        raise PreconditionError(f"{p} is not irreducible")
    if not associates(domain, element_gcd(domain, a, b), p):
        raise PreconditionError(f"gcd({a}, {b}) is not associated to {p}")
    p_km1 = domain.power(p, k - 1)
    # the zero branch: 0 = p^(k-1) * 0^k and the other input is ~ p * 1^k
    if domain.is_zero(a) or domain.is_zero(b):
        single = "b" if domain.is_zero(a) else "a"
        other = b if single == "b" else a
        d = _absorb_unit(domain, other, p, domain.one, k)
        return PP2Result(d, domain.zero, single)

    pkey = domain.canonical(p)
    _, ta = domain.factor(a)
    _, tb = domain.factor(b)
    single = "a" if ta.get(pkey) == 1 else "b"
    s_val, s_tab, o_val, o_tab = (a, ta, b, tb) if single == "a" else (b, tb, a, ta)
    s_rest = {key: m for key, m in s_tab.items() if key != pkey}
    o_rest = {key: m for key, m in o_tab.items() if key != pkey}
    m = o_tab.get(pkey, 0)
    if (m + 1) % k:
        raise PreconditionError(f"multiplicity {m + 1} of {pkey} in the product is not divisible by {k}")
    o_rest[pkey] = m - (k - 1)
    o_rest = {key: mult for key, mult in o_rest.items() if mult}
    d = _root_of_table(domain, s_rest, k, f"input {single}")
    e = _root_of_table(domain, o_rest, k, "input " + ("b" if single == "a" else "a"))
    d = _absorb_unit(domain, s_val, p, d, k)
    e = _absorb_unit(domain, o_val, p_km1, e, k)
    return PP2Result(d, e, single)
