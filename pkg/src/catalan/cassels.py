"""Lemmas behind Chao Ko's theorem and the two Cassels relations, plus the
bounded searches standing in for statements about solutions that never occur.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

import mpmath

from .intmath import iroot, require_prime
from .padic import ord_factorial, ord_p, rational_binomial
from .search import SolutionReport, equation, scan, signed


@equation("x^m-y^2=1")
def _lebesgue(x, y, m):
    return x**m - y * y == 1


@equation("x^2-y^q=1")
def _chao_ko(x, y, q):
    return x * x - y**q == 1


@equation("x^p-y^q=1")
def _catalan_pq(x, y, p, q):
    return x**p - y**q == 1


def gcd_quotient(a: int, b: int, q: int) -> int:
    """gcd((a^q - b^q)/(a - b), a - b) for coprime a != b; always 1 or q."""
    require_prime(q, "q")
    if a == b or math.gcd(a, b) != 1:
        raise ValueError(f"need coprime a != b, got ({a}, {b})")
    quotient = sum(a**i * b ** (q - 1 - i) for i in range(q))
    assert quotient * (a - b) == a**q - b**q
    d = math.gcd(quotient, a - b)
    assert d in (1, q), f"gcd {d} does not divide {q}"
    return d


def quotient_binomial_form(a: int, b: int, q: int) -> int:
    """q b^(q-1) + sum_{i>=2} C(q, i) (a-b)^(i-1) b^(q-i): the expansion of
    (a^q - b^q)/(a - b) around b."""
    t = a - b
    return q * b ** (q - 1) + sum(comb(q, i) * t ** (i - 1) * b ** (q - i) for i in range(2, q + 1))


@dataclass(frozen=True)
class CheinDecomposition:
    sign: int
    a: int
    b: int


def chein_decompose(x: int, y: int, q: int) -> CheinDecomposition:
    """After x -> sign*x making (x+1)/2 odd: x - 1 = 2^(q-1) a^q, x + 1 = 2 b^q."""
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be odd and at least 3")
    if x == 0 or y == 0 or x * x - y**q != 1:
        raise ValueError(f"({x}, {y}) is not a nonzero solution of x^2 - y^{q} = 1")
    if y % 2:
        raise AssertionError("y must be even")
    sign = 1 if ((x + 1) // 2) % 2 else -1
    xs = sign * x
    a, ea = iroot((xs - 1) // 2 ** (q - 1), q)
    b, eb = iroot((xs + 1) // 2, q)
    assert (xs - 1) % 2 ** (q - 1) == 0 and ea and eb
    assert xs - 1 == 2 ** (q - 1) * a**q and xs + 1 == 2 * b**q
    assert math.gcd(a, b) == 1 and b % 2 == 1
    return CheinDecomposition(sign, a, b)


@dataclass
class CheinCongruence:
    x: int
    q: int
    factor: int  # b^2 - 2a
    cofactor: int  # (b^(2q) - (2a)^q) / (b^2 - 2a)
    gcd: int
    residue_ok: bool


def chein_congruence_replay(x: int, y: int, q: int) -> CheinCongruence:
    """Replay the x = +-3 (mod q) argument on a concrete solution."""
    dec = chein_decompose(x, y, q)
    xs = dec.sign * x
    a, b = dec.a, dec.b
    lhs = b ** (2 * q) - (2 * a) ** q
    assert lhs == ((xs + 1) // 2) ** 2 - 2 * (xs - 1) == ((xs - 3) // 2) ** 2
    t = b * b - 2 * a
    cof, rem = divmod(lhs, t)
    assert rem == 0
    g = math.gcd(t, cof)
    assert q % g == 0
    residue_ok = g != q or (xs - 3) % q == 0
    return CheinCongruence(x, q, t, cof, g, residue_ok and (x % q in (3 % q, -3 % q)))


@dataclass
class FmnCoefficients:
    m: int
    n: int
    degree: int
    coefficients: list[Fraction]


def fmn_coefficients(m: int, n: int, l: int) -> FmnCoefficients:
    """Taylor coefficients of ((1+X)^m - X^m)^(1/n) at 0, degrees 0..l (l < m)."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd")
    if not 0 <= l < m:
        raise ValueError("need 0 <= l < m")
    alpha = Fraction(m, n)
    return FmnCoefficients(m, n, l, [rational_binomial(alpha, j) for j in range(l + 1)])


class PrecisionError(ArithmeticError):
    """Adjacent sample values could not be separated at the working precision."""


def _exact_compare(u: Fraction, sign: int, s: int, t: int) -> int:
    # f(s) vs f(t) for integers: compare (u^s + sign)^t with (u^t + sign)^s
    left = (u**s + sign) ** t
    right = (u**t + sign) ** s
    return (left > right) - (left < right)


def monotonicity_probe(
    u, kind: str, samples: Sequence, precision_bits: int = 200
) -> bool:
    """Check that f(x) = (u^x +- 1)^(1/x) decreases ("plus") or increases
    ("minus") across the increasing sample points.

    Integer samples are compared exactly through integer powers; otherwise
    interval arithmetic is used, and overlapping intervals raise
    :class:`PrecisionError` instead of guessing.
    """
    u = Fraction(u)
    if kind not in ("plus", "minus"):
        raise ValueError("kind must be 'plus' or 'minus'")
    if kind == "plus" and u < 1 or kind == "minus" and u <= 1:
        raise ValueError(f"u={u} outside the lemma's range for {kind}")
    samples = [Fraction(s) for s in samples]
    if any(s <= 0 for s in samples) or any(b <= a for a, b in zip(samples, samples[1:])):
        raise ValueError("samples must be positive and strictly increasing")
    sign = 1 if kind == "plus" else -1
    want = -1 if kind == "plus" else 1  # sign of f(later) - f(earlier)

    if all(s.denominator == 1 for s in samples):
        ints = [int(s) for s in samples]
        return all(_exact_compare(u, sign, t, s) == want for s, t in zip(ints, ints[1:]))

    iv = mpmath.iv
    old = iv.prec
    iv.prec = precision_bits
    try:
        uu = iv.mpf(u.numerator) / u.denominator
        vals = []
        for s in samples:
            x = iv.mpf(s.numerator) / s.denominator
            vals.append(iv.exp(iv.log(iv.exp(x * iv.log(uu)) + sign) / x))
        for s, (a, b) in zip(samples, zip(vals, vals[1:])):
            if b.b < a.a:
                step = -1
            elif b.a > a.b:
                step = 1
            else:
                raise PrecisionError(f"cannot separate f near x={s} at {precision_bits} bits")
            if step != want:
                return False
        return True
    finally:
        iv.prec = old


# ------------------------------------------------------------------ searches


def _lebesgue_chunk(lo: int, hi: int, m: int) -> list[tuple[int, int, int]]:
    out = []
    for x in range(lo, hi + 1):
        n = x**m - 1
        if n >= 0:
            y, exact = iroot(n, 2)
            if exact:
                out.extend((x, s, m) for s in signed([y]))
    return out


def lebesgue_search(m: int, bound: int, threads: int = 1) -> SolutionReport:
    """x^m - y^2 = 1 for odd m >= 3 and |x| <= bound (x^m >= 1 forces x >= 1)."""
    if m < 3 or m % 2 == 0:
        raise ValueError("m must be odd and at least 3")
    sols = scan(_lebesgue_chunk, 1, bound, m, threads=threads)
    return SolutionReport("x^m-y^2=1", sols, {"|x|": bound, "m": m})


def _chao_ko_chunk(lo: int, hi: int, q: int, bound: int) -> list[tuple[int, int, int]]:
    out = []
    for y in range(lo, hi + 1):
        x, exact = iroot(y**q + 1, 2)
        if exact and x <= bound:
            out.extend((s, y, q) for s in signed([x]))
    return out


def chao_ko_search(q: int, bound: int, threads: int = 1) -> SolutionReport:
    """x^2 - y^q = 1 with |x| <= bound; y runs from -1 up to (bound^2 - 1)^(1/q)."""
    require_prime(q, "q")
    if q < 3:
        raise ValueError("q must be an odd prime")
    y_max = iroot(bound * bound - 1, q)[0]
    sols = scan(_chao_ko_chunk, -1, y_max, q, bound, threads=threads)
    return SolutionReport("x^2-y^q=1", sols, {"|x|": bound, "q": q})


def _catalan_chunk(lo: int, hi: int, p: int, q: int, bound: int) -> list[tuple[int, int, int, int]]:
    out = []
    for x in range(lo, hi + 1):
        if x == 0:
            continue
        y, exact = iroot(x**p - 1, q)
        if exact and y != 0 and abs(y) <= bound:
            out.append((x, y, p, q))
    return out


def catalan_pq_search(p: int, q: int, bound: int, threads: int = 1) -> SolutionReport:
    """Nonzero x^p - y^q = 1 with |x|, |y| <= bound, for odd primes p > q.

    Any solution found is checked against q | x and p | y; with none found
    the relations hold vacuously, which the trace records.
    """
    require_prime(p, "p")
    require_prime(q, "q")
    if not p > q > 2:
        raise ValueError("need primes p > q > 2")
    sols = scan(_catalan_chunk, -bound, bound, p, q, bound, threads=threads)
    relations = all(x % q == 0 and y % p == 0 for x, y, _, _ in sols)
    trace = [
        f"solutions: {len(sols)}",
        f"q | x and p | y: {'holds' if relations else 'VIOLATED'}" + (" (vacuously)" if not sols else ""),
    ]
    return SolutionReport("x^p-y^q=1", sols, {"|x|,|y|": bound, "p": p, "q": q}, trace)


# ---------------------------------------------------- the D z integrality test


@dataclass
class DzPipeline:
    p: int
    q: int
    a: int
    m: int
    D: int
    summands: list[int] = field(default_factory=list)  # D binom(p/q, k) a^(mq - qk)
    dz: int = 0
    integral: bool = True
    pattern_ok: bool = True


def cassels_dz_pipeline(p: int, q: int, a: int, y: int = 1) -> DzPipeline:
    """Build D z = D a^(mq-p) y - sum_k D binom(p/q, k) a^(mq-qk) on artificial inputs.

    m = floor(p/q) + 1 and D = q^(m + ord_q(m!)). Each summand must be an
    integer, divisible by q for k < m and prime to q for k = m, so that D z
    is a nonzero integer whatever integer y is plugged in.
    """
    require_prime(p, "p")
    require_prime(q, "q")
    if not p > q > 2:
        raise ValueError("need primes p > q > 2")
    if abs(a) < 2:
        raise ValueError("|a| must be at least 2")
    if a % q == 0:
        raise ValueError("a must be prime to q")
    m = p // q + 1
    D = q ** (m + ord_factorial(q, m))
    alpha = Fraction(p, q)
    summands_q = [D * rational_binomial(alpha, k) * Fraction(a) ** (m * q - q * k) for k in range(m + 1)]
    integral = all(s.denominator == 1 for s in summands_q)
    summands = [int(s) for s in summands_q]
    pattern = all(s % q == 0 for s in summands[:-1]) and summands[-1] % q != 0
    dz_q = D * Fraction(a) ** (m * q - p) * y - sum(summands_q)
    integral = integral and dz_q.denominator == 1 and m * q - p >= 0
    dz = int(dz_q)
    if integral and pattern:
        assert ord_p(q, dz) == 0, "D z should be prime to q"
    return DzPipeline(p, q, a, m, D, summands, dz, integral, pattern)
