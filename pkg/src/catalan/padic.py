"""p-adic order on the rationals and the valuation lemmas built on it.

Orders are plain ``int`` values, with ``math.inf`` standing for the order of
zero; ``inf`` absorbs addition and exceeds every integer, which is exactly
the algebra needed for products and sums.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .intmath import require_prime

RationalLike = Union[int, Fraction]
INF = math.inf


def _multiplicity(p: int, n: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def ord_p(p: int, a: RationalLike) -> int | float:
    """Exponent of ``p`` in ``a``; ``inf`` for ``a == 0``.

    >>> ord_p(5, Fraction(7, 50))
    -2
    """
    require_prime(p)
    a = Fraction(a)
    if a == 0:
        return INF
    return _multiplicity(p, a.numerator) - _multiplicity(p, a.denominator)


def ord_factorial(q: int, m: int) -> int:
    """Legendre's formula: the exponent of ``q`` in ``m!``."""
    require_prime(q, "q")
    if m < 0:
        raise ValueError("m must be non-negative")
    total, power = 0, q
    while power <= m:
        total += m // power
        power *= q
    return total


def _progression_terms(a: int, d: int, m: int) -> list[int]:
    return [a + j * d for j in range(m)]


def ord_progression_product(a: int, d: int, m: int, p: int) -> int:
    """Order at ``p`` of ``a (a+d) ... (a+(m-1)d)``, summed term by term."""
    require_prime(p)
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    if d % p == 0:
        raise ValueError(f"p={p} divides the common difference d={d}")
    terms = _progression_terms(a, d, m)
    if any(t == 0 for t in terms):
        raise ValueError("the product is zero; its order is not finite")
    return sum(_multiplicity(p, abs(t)) for t in terms)


def progression_excess(a: int, d: int, m: int, p: int) -> list[int]:
    """Per-level corrections ``m_j - floor(m / p^j)`` for the progression product.

    ``m_j`` counts the terms divisible by ``p^j``; every entry lies in {0, 1}
    when ``gcd(p, d) = 1``. Levels run while ``p^j <= |a| + (m-1) d``, which
    bounds every term magnitude.
    """
    ord_progression_product(a, d, m, p)  # validates the inputs
    terms = _progression_terms(a, d, m)
    top = abs(a) + (m - 1) * d
    out = []
    power = p
    while power <= top:
        count = sum(1 for t in terms if t % power == 0)
        out.append(count - m // power)
        power *= p
    return out


def rational_binomial(alpha: RationalLike, k: int) -> Fraction:
    """``alpha (alpha-1) ... (alpha-k+1) / k!`` in lowest terms."""
    if k < 0:
        raise ValueError("k must be non-negative")
    alpha = Fraction(alpha)
    num = Fraction(1)
    for i in range(k):
        num *= alpha - i
    return num / math.factorial(k)


def dominant_term_nonzero(terms: Iterable[RationalLike], p: int) -> bool:
    """True iff the last term has strictly smaller order than all the others.

    In that case the sum cannot vanish; the exact sum is checked as well.
    """
    terms = [Fraction(t) for t in terms]
    if len(terms) < 2:
        raise ValueError("need at least two terms")
    last = ord_p(p, terms[-1])
    dominant = all(last < ord_p(p, t) for t in terms[:-1])
    if dominant:
        assert sum(terms) != 0, "dominant p-adic term but the sum vanished"
    return dominant
