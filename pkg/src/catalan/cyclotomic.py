"""Integer group rings Z[G] over finite abelian G, and Z[zeta_p] for p in {3, 5}.

Z[zeta_p] is handled as the quotient of the group ring Z[C_p] by the ideal
generated by 1 + g + ... + g^(p-1): products are cyclic convolutions of
length p, after which the top coordinate is folded back onto the basis
1, zeta, ..., zeta^(p-2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .gaussian import round_half_down

# ---------------------------------------------------------------- group rings


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups; elements are coordinate tuples."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        if not self.cyclic_orders or any(n < 2 for n in self.cyclic_orders):
            raise ValueError("cyclic orders must all be at least 2")

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.cyclic_orders)

    def reduce(self, g) -> tuple[int, ...]:
        if len(g) != len(self.cyclic_orders):
            raise ValueError(f"element {g} has the wrong number of coordinates")
        return tuple(x % n for x, n in zip(g, self.cyclic_orders))

    def op(self, g, h) -> tuple[int, ...]:
        return tuple((x + y) % n for x, y, n in zip(g, h, self.cyclic_orders))

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.cyclic_orders)))

    def order(self) -> int:
        out = 1
        for n in self.cyclic_orders:
            out *= n
        return out


@dataclass(frozen=True)
class GroupRingElement:
    group: FiniteAbelianGroup
    coefficients: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, ...], int] = {}
        for g, c in self.coefficients.items():
            g = self.group.reduce(g)
            clean[g] = clean.get(g, 0) + c
        object.__setattr__(self, "coefficients", {g: c for g, c in sorted(clean.items()) if c})

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.group == other.group
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.group, tuple(self.coefficients.items())))

    def __add__(self, other):
        return gr_add(self, other)

    def __mul__(self, other):
        return gr_mul(self, other)

    def __neg__(self):
        return GroupRingElement(self.group, {g: -c for g, c in self.coefficients.items()})

    def __sub__(self, other):
        return gr_add(self, -other)


def gr_zero(group: FiniteAbelianGroup) -> GroupRingElement:
    return GroupRingElement(group, {})


def gr_one(group: FiniteAbelianGroup) -> GroupRingElement:
    return GroupRingElement(group, {group.identity: 1})


def _same_group(x: GroupRingElement, y: GroupRingElement) -> None:
    if x.group != y.group:
        raise ValueError(f"group mismatch: {x.group.cyclic_orders} vs {y.group.cyclic_orders}")


def gr_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    _same_group(x, y)
    out = dict(x.coefficients)
    for g, c in y.coefficients.items():
        out[g] = out.get(g, 0) + c
    return GroupRingElement(x.group, out)


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution: (xy)(g) = sum over e*f = g of x(e) y(f)."""
    _same_group(x, y)
    op = x.group.op
    out: dict[tuple[int, ...], int] = {}
    for e, a in x.coefficients.items():
        for f, b in y.coefficients.items():
            g = op(e, f)
            out[g] = out.get(g, 0) + a * b
    return GroupRingElement(x.group, out)


# ---------------------------------------------------------- cyclotomic integers

SUPPORTED_P = (3, 5)


@dataclass(frozen=True)
class CyclotomicInt:
    """sum coords[i] * zeta_p^i over i < p - 1."""

    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.p not in SUPPORTED_P:
            raise ValueError(f"only p in {SUPPORTED_P} is supported, got {self.p}")
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_int(cls, p: int, n: int) -> CyclotomicInt:
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> CyclotomicInt:
        return _fold(p, [1 if i == k % p else 0 for i in range(p)])

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        _same_p(self, other)
        return CyclotomicInt(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CyclotomicInt(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return cyc_mul(self, other)

    def __pow__(self, n: int):
        out = CyclotomicInt.from_int(self.p, 1)
        for _ in range(n):
            out = out * self
        return out


def _same_p(x: CyclotomicInt, y: CyclotomicInt) -> None:
    if not isinstance(y, CyclotomicInt):
        raise TypeError(f"expected CyclotomicInt, got {type(y).__name__}")
    if x.p != y.p:
        raise ValueError(f"cannot combine elements of Z[zeta_{x.p}] and Z[zeta_{y.p}]")


def _fold(p: int, full: list[int]) -> CyclotomicInt:
    """Reduce a length-p vector (mod zeta^p = 1) using 1 + zeta + ... + zeta^(p-1) = 0."""
    top = full[p - 1]
    return CyclotomicInt(p, tuple(c - top for c in full[: p - 1]))


def cyc_mul(x: CyclotomicInt, y: CyclotomicInt) -> CyclotomicInt:
    _same_p(x, y)
    p = x.p
    full = [0] * p
    for i, a in enumerate(x.coords):
        if a:
            for j, b in enumerate(y.coords):
                full[(i + j) % p] += a * b
    return _fold(p, full)


def conjugate(x: CyclotomicInt, k: int) -> CyclotomicInt:
    """Image of x under zeta -> zeta^k (k prime to p)."""
    p = x.p
    if k % p == 0:
        raise ValueError("k must be prime to p")
    full = [0] * p
    for i, a in enumerate(x.coords):
        full[(i * k) % p] += a
    return _fold(p, full)


def _cofactor(x: CyclotomicInt) -> CyclotomicInt:
    """Product of the conjugates other than x itself."""
    out = CyclotomicInt.from_int(x.p, 1)
    for k in range(2, x.p):
        out = cyc_mul(out, conjugate(x, k))
    return out


def cyc_norm(x: CyclotomicInt) -> int:
    """Field norm: the product of all p - 1 conjugates, a rational integer."""
    n = cyc_mul(x, _cofactor(x))
    if any(n.coords[1:]):
        raise AssertionError(f"norm of {x} is not rational: {n}")
    return n.coords[0]


class DivisionFailure(ArithmeticError):
    """No quotient in the search window brought the remainder norm below N(w)."""

    def __init__(self, z, w, best_norm):
        super().__init__(f"no quotient for {z} / {w}: best |N(r)| = {best_norm} >= |N(w)|")
        self.z, self.w, self.best_norm = z, w, best_norm


def exact_quotient(z: CyclotomicInt, w: CyclotomicInt) -> tuple[Fraction, ...]:
    """Coordinates of z / w in Q(zeta_p)."""
    _same_p(z, w)
    n = cyc_norm(w)
    if n == 0:
        raise ZeroDivisionError("cyclotomic division by zero")
    num = cyc_mul(z, _cofactor(w))
    return tuple(Fraction(c, n) for c in num.coords)


def cyc_divrem(z: CyclotomicInt, w: CyclotomicInt) -> tuple[CyclotomicInt, CyclotomicInt]:
    """``z = w q + r`` with ``|N(r)| < |N(w)|``.

    Rounds the exact quotient coordinatewise; if that misses the bound, tries
    every offset in {-1, 0, 1}^(p-1) and keeps the smallest remainder norm.
    Raises :class:`DivisionFailure` if the whole window misses.
    """
    _same_p(z, w)
    if not w:
        raise ZeroDivisionError("cyclotomic division by zero")
    n = cyc_norm(w)
    num = cyc_mul(z, _cofactor(w))
    base = tuple(round_half_down(c, n) for c in num.coords)
    bound = abs(n)

    def attempt(coords):
        q = CyclotomicInt(z.p, coords)
        r = z - w * q
        return abs(cyc_norm(r)), q, r

    rn, q, r = attempt(base)
    if rn < bound:
        return q, r
    best = None
    for offset in itertools.product((-1, 0, 1), repeat=z.p - 1):
        cand = attempt(tuple(b + o for b, o in zip(base, offset)))
        if best is None or cand[0] < best[0]:
            best = cand
    if best[0] < bound:
        return best[1], best[2]
    raise DivisionFailure(z, w, best[0])
