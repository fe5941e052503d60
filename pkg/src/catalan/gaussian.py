"""Gaussian integers Z[i] with norm division, and Z[sqrt d] ring arithmetic."""

from __future__ import annotations

from dataclasses import dataclass

from .intmath import factorint, require_prime, sqrt_minus_one_mod


def round_half_down(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward negative infinity."""
    return -((den - 2 * num) // (2 * den))


@dataclass(frozen=True, order=True)
class GaussianInt:
    re: int
    im: int = 0

    @classmethod
    def coerce(cls, z) -> GaussianInt:
        if isinstance(z, GaussianInt):
            return z
        if isinstance(z, int):
            return cls(z, 0)
        if isinstance(z, complex) and z.real.is_integer() and z.imag.is_integer():
            return cls(int(z.real), int(z.imag))
        raise TypeError(f"cannot interpret {z!r} as a Gaussian integer")

    def __add__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianInt.coerce(other))

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not ring elements")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def __repr__(self):
        if self.im == 0:
            return f"G({self.re})"
        sign = "+" if self.im > 0 else "-"
        return f"G({self.re}{sign}{abs(self.im)}i)"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, -ONE, -I)


def norm(z: GaussianInt) -> int:
    return z.re * z.re + z.im * z.im


def units() -> frozenset[GaussianInt]:
    return frozenset(UNITS)


def is_unit(z: GaussianInt) -> bool:
    return norm(z) == 1


def divrem(z: GaussianInt, w: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """``z = w q + r`` with ``2 N(r) <= N(w)``; coordinates of z/w rounded half down."""
    z, w = GaussianInt.coerce(z), GaussianInt.coerce(w)
    n = norm(w)
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    t = z * w.conjugate()
    q = GaussianInt(round_half_down(t.re, n), round_half_down(t.im, n))
    return q, z - w * q


def divides(w: GaussianInt, z: GaussianInt) -> bool:
    if not w:
        return not z
    return not divrem(z, w)[1]


def exact_div(z: GaussianInt, w: GaussianInt) -> GaussianInt:
    q, r = divrem(z, w)
    if r:
        raise ValueError(f"{w} does not divide {z}")
    return q


def canonical_associate(z: GaussianInt) -> GaussianInt:
    """The associate with re > 0 and im >= 0 (zero maps to itself)."""
    z = GaussianInt.coerce(z)
    if not z:
        return z
    for u in UNITS:
        c = z * u
        if c.re > 0 and c.im >= 0:
            return c
    raise AssertionError("unreachable")


def unit_between(a: GaussianInt, b: GaussianInt) -> GaussianInt | None:
    """The unit u with a == u*b, or None when a and b are not associates."""
    for u in UNITS:
        if u * b == a:
            return u
    return None


def gaussian_gcd(z, w) -> GaussianInt:
    z, w = GaussianInt.coerce(z), GaussianInt.coerce(w)
    if not z and not w:
        raise ValueError("gcd(0, 0) does not exist")
    while w:
        z, w = w, divrem(z, w)[1]
    return canonical_associate(z)


def gaussian_prime_over(p: int) -> GaussianInt:
    """The canonical Gaussian prime dividing the rational prime p.

    Its norm is p, except for p = 3 (mod 4) where p itself stays prime.
    """
    require_prime(p, "p")
    if p == 2:
        return GaussianInt(1, 1)
    if p % 4 == 3:
        return GaussianInt(p)
    t = sqrt_minus_one_mod(p)
    return gaussian_gcd(GaussianInt(p), GaussianInt(t, 1))


def factor_gaussian(z) -> tuple[GaussianInt, dict[GaussianInt, int]]:
    """``(unit, {canonical prime: multiplicity})`` with unit * prod == z.

    The norm is factored in Z; 2 ramifies as (1+i)^2 up to a unit, primes
    3 (mod 4) stay inert, and primes 1 (mod 4) split into a conjugate pair.
    """
    z = GaussianInt.coerce(z)
    if not z:
        raise ValueError("zero has no factorization")
    rest = z
    factors: dict[GaussianInt, int] = {}

    def strip(pi: GaussianInt) -> None:
        nonlocal rest
        count = 0
        while True:
            q, r = divrem(rest, pi)
            if r:
                break
            rest, count = q, count + 1
        if count:
            factors[pi] = factors.get(pi, 0) + count

    for p in factorint(norm(z)):
        pi = gaussian_prime_over(p)
        strip(pi)
        if p % 4 == 1:
            strip(canonical_associate(pi.conjugate()))
    if not is_unit(rest):
        raise AssertionError(f"factorization of {z} left non-unit cofactor {rest}")
    return rest, dict(sorted(factors.items()))


@dataclass(frozen=True)
class QuadInt:
    """The element a + b sqrt(d) of Z[sqrt d]."""

    a: int
    b: int
    d: int

    def _same_ring(self, other: QuadInt) -> None:
        if not isinstance(other, QuadInt):
            raise TypeError(f"expected QuadInt, got {type(other).__name__}")
        if other.d != self.d:
            raise ValueError(f"cannot combine elements of Z[sqrt {self.d}] and Z[sqrt {other.d}]")

    def __add__(self, other: QuadInt) -> QuadInt:
        self._same_ring(other)
        return QuadInt(self.a + other.a, self.b + other.b, self.d)

    def __sub__(self, other: QuadInt) -> QuadInt:
        self._same_ring(other)
        return QuadInt(self.a - other.a, self.b - other.b, self.d)

    def __mul__(self, other: QuadInt) -> QuadInt:
        self._same_ring(other)
        return QuadInt(
            self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    def __pow__(self, n: int) -> QuadInt:
        result, base = QuadInt(1, 0, self.d), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> int:
        return self.a * self.a - self.d * self.b * self.b

    def mod(self, modulus: int) -> QuadInt:
        return QuadInt(self.a % modulus, self.b % modulus, self.d)


def quad_pow_mod(base: QuadInt, m: int, modulus: int) -> QuadInt:
    """(a + b sqrt d)^m with coordinates reduced mod ``modulus`` at every step."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    result = QuadInt(1 % modulus, 0, base.d)
    base = base.mod(modulus)
    while m:
        if m & 1:
            result = (result * base).mod(modulus)
        base = (base * base).mod(modulus)
        m >>= 1
    return result
