"""Integer primitives: exact roots, primality, factorization, modular powers."""

from __future__ import annotations

import math
import random
from collections import Counter

# Deterministic Miller-Rabin witnesses: exact for n < 3.18e23, far past 64 bits.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 10**6
_RHO_SEED = 20040605

_small_primes: list[int] = []


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Return ``(r, exact)`` with ``r = floor(n ** (1/k))`` for ``n >= 0``.

    For odd ``k`` negative ``n`` is accepted and ``r`` is the real root
    rounded toward zero. No floating point is involved in the result.
    """
    if k < 1:
        raise ValueError("root index must be positive")
    if n < 0:
        if k % 2 == 0:
            raise ValueError("even root of a negative number")
        r, exact = iroot(-n, k)
        return -r, exact
    if n < 2 or k == 1:
        return n, True
    if k == 2:
        r = math.isqrt(n)
        return r, r * r == n
    # float seed, then integer Newton corrections
    try:
        r = int(round(n ** (1.0 / k)))
    except OverflowError:
        r = 1 << (n.bit_length() // k + 1)
    r = max(r, 1)
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r, r**k == n


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def exact_root(n: int, k: int) -> int | None:
    """The integer ``r`` with ``r**k == n``, or None (non-negative root for even k)."""
    if n < 0 and k % 2 == 0:
        return None
    r, exact = iroot(n, k)
    return r if exact else None


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    return _sieve(limit)


def _trial_primes() -> list[int]:
    global _small_primes
    if not _small_primes:
        _small_primes = _sieve(1000)
    return _small_primes


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _trial_primes()[:25]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int, name: str = "p") -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{name}={p!r} is not a prime")
    return p


def _brent_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}`` (empty for +-1).

    Trial division below 10**6, then Brent's rho with a fixed seed.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: Counter[int] = Counter()
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] += 1
            n //= p
    d = 1009
    while n > 1 and d < _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            out[d] += 1
            n //= d
        d += 2
    if n > 1:
        rng = random.Random(_RHO_SEED)
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                out[m] += 1
                continue
            f = _brent_rho(m, rng)
            stack.extend((f, m // f))
    return dict(sorted(out.items()))


def mulmod_words(a: int, b: int, m: int, word_bits: int) -> int:
    """``a*b mod m`` by consuming ``b`` one machine word at a time.

    Every intermediate stays below ``m << word_bits``; this is a separate
    code path from the builtin ``pow`` for cross-checking.
    """
    a %= m
    b %= m
    mask = (1 << word_bits) - 1
    words = []
    while b:
        words.append(b & mask)
        b >>= word_bits
    acc = 0
    for w in reversed(words):
        acc = ((acc << word_bits) + a * w) % m
    return acc


def powmod_words(base: int, exp: int, m: int, word_bits: int) -> int:
    """Left-to-right square-and-multiply using :func:`mulmod_words`."""
    if m == 1:
        return 0
    result = 1
    base %= m
    for bit in bin(exp)[2:]:
        result = mulmod_words(result, result, m, word_bits)
        if bit == "1":
            result = mulmod_words(result, base, m, word_bits)
    return result


def sqrt_minus_one_mod(p: int) -> int:
    """A square root of -1 modulo a prime ``p = 1 (mod 4)``."""
    if p % 4 != 1:
        raise ValueError(f"-1 is not a square modulo {p}")
    for c in range(2, p):
        t = pow(c, (p - 1) // 4, p)
        if t * t % p == p - 1:
            return t
    raise AssertionError("unreachable for prime p")
