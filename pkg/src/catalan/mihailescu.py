"""Executable forms of the criteria M1-M4, the lifting lemma, the double
Wieferich search, the closing deduction, and the consecutive-powers scan."""

from __future__ import annotations

from dataclasses import dataclass, field

from .intmath import iroot, is_prime, powmod_words, primes_up_to, require_prime
from .search import balanced_quadratic_split, scan, split_range
from .ufd import PreconditionError

M4_PRIMES = frozenset({3, 5})
VERIFY_WORD_BITS = (16, 32)


def _distinct_odd_primes(p: int, q: int) -> None:
    require_prime(p, "p")
    require_prime(q, "q")
    if p == q:
        raise ValueError("p and q must be distinct")
    if p == 2 or q == 2:
        raise ValueError("p and q must be odd")


def wieferich_pair_check(p: int, q: int) -> bool:
    """p^(q-1) = 1 (mod q^2) and q^(p-1) = 1 (mod p^2)."""
    _distinct_odd_primes(p, q)
    return pow(p, q - 1, q * q) == 1 and pow(q, p - 1, p * p) == 1


def wieferich_pair_verify(p: int, q: int) -> bool:
    """Same predicate via word-wise square-and-multiply at every size in VERIFY_WORD_BITS."""
    _distinct_odd_primes(p, q)
    return all(
        powmod_words(p, q - 1, q * q, w) == 1 and powmod_words(q, p - 1, p * p, w) == 1
        for w in VERIFY_WORD_BITS
    )


def _wieferich_chunk(lo: int, hi: int, primes: tuple[int, ...]) -> list[tuple[int, int]]:
    # pairs (p, q) with p < q, q taken from primes[lo..hi]
    out = []
    for j in range(lo, hi + 1):
        q = primes[j]
        q2 = q * q
        for p in primes[:j]:
            if pow(p, q - 1, q2) == 1 and pow(q, p - 1, p * p) == 1:
                out.append((p, q))
    return out


def search_double_wieferich(limit: int, threads: int = 1) -> list[tuple[int, int]]:
    """Unordered pairs p < q of odd primes up to ``limit`` passing the M1 congruences."""
    if limit < 5:
        raise ValueError("limit must be at least 5")
    primes = tuple(p for p in primes_up_to(limit) if p > 2)
    # the j-th prime pairs with j smaller ones; cut so each worker gets equal pairs
    chunks = balanced_quadratic_split(len(primes), threads)
    return scan(_wieferich_chunk, 0, len(primes) - 1, primes, threads=threads, chunks=chunks)


def m2_check(p: int, q: int) -> bool:
    """p = 1 (mod q) or q = 1 (mod p). The criterion is stated for p, q >= 7."""
    _distinct_odd_primes(p, q)
    return p % q == 1 or q % p == 1


def m3_check(p: int, q: int) -> bool:
    """p < 4q^2 and q < 4p^2."""
    _distinct_odd_primes(p, q)
    return p < 4 * q * q and q < 4 * p * p


def m4_resolves(p: int, q: int) -> bool:
    """True when one exponent lies in {3, 5}, the range settled by M4."""
    _distinct_odd_primes(p, q)
    return p in M4_PRIMES or q in M4_PRIMES


@dataclass
class CriteriaVerdict:
    p: int
    q: int
    m1: bool
    m2: bool
    m3: bool
    resolved_by_m4: bool
    notes: list[str] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        """Could (p, q) still carry a solution after M1-M4?"""
        return not self.resolved_by_m4 and self.m1 and self.m2 and self.m3


def criteria_verdict(p: int, q: int) -> CriteriaVerdict:
    if m4_resolves(p, q):
        return CriteriaVerdict(p, q, False, False, False, True, ["M4: exponent in {3, 5}, no search needed"])
    notes = []
    if min(p, q) < 7:
        notes.append("M2/M3 are stated for p, q >= 7")
    return CriteriaVerdict(p, q, wieferich_pair_check(p, q), m2_check(p, q), m3_check(p, q), False, notes)


def lemma_simp_lift(q: int, x: int) -> bool:
    """From x = 1 (mod q) and x^(q-1) = 1 (mod q^2), conclude x = 1 (mod q^2)."""
    require_prime(q, "q")
    q2 = q * q
    if x % q != 1 % q:
        raise PreconditionError(f"{x} is not 1 mod {q}")
    if pow(x, q - 1, q2) != 1 % q2:
        raise PreconditionError(f"{x}^{q - 1} is not 1 mod {q2}")
    lifted = x % q2 == 1 % q2
    assert lifted, "lifting lemma failed"
    return lifted


def m095_relation_check(p: int, q: int, x: int, y: int) -> bool:
    """p^2 | y and q^2 | x for a nonzero solution of x^p - y^q = 1, p > q > 2."""
    require_prime(p, "p")
    require_prime(q, "q")
    if not p > q > 2:
        raise PreconditionError("need primes p > q > 2")
    if x == 0 or y == 0:
        raise PreconditionError("x and y must be nonzero")
    if x**p - y**q != 1:
        raise PreconditionError(f"({x}, {y}) does not satisfy x^{p} - y^{q} = 1")
    return y % (p * p) == 0 and x % (q * q) == 0


@dataclass
class DeductionReport:
    q_limit: int
    primes_checked: int = 0
    even_eliminations: int = 0
    three_eliminations: int = 0
    survivors: list[tuple[int, int]] = field(default_factory=list)
    excluded_by_m4: list[tuple[int, int]] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.survivors == [(19, 3)] and self.excluded_by_m4 == [(19, 3)]


def _deduction_chunk(lo: int, hi: int, primes: tuple[int, ...]) -> list[tuple]:
    out = []
    for q in primes[lo : hi + 1]:
        q2 = q * q
        # M3 caps p = 1 + k q^2 below 4 q^2, so k <= 3
        ks = [k for k in range(1, 10) if 1 + k * q2 < 4 * q2]
        if ks != [1, 2, 3]:
            out.append(("fail", q, f"M3 window for q={q} is {ks}"))
        for k in (1, 3):
            if (1 + k * q2) % 2:
                out.append(("fail", q, f"k={k} gave odd p for q={q}"))
            else:
                out.append(("even", q, k))
        p = 1 + 2 * q2
        if q == 3:
            out.append(("survivor", q, p))
        elif p % 3 == 0:
            out.append(("three", q, p))
        else:
            out.append(("fail", q, f"1+2q^2 = {p} not divisible by 3"))
    return out


def final_deduction_check(q_limit: int, threads: int = 1) -> DeductionReport:
    """Replay the elimination of p = 1 + k q^2 for every odd prime q <= q_limit."""
    if q_limit < 3:
        raise ValueError("q_limit must be at least 3")
    primes = tuple(p for p in primes_up_to(q_limit) if p > 2)
    rows = scan(_deduction_chunk, 0, len(primes) - 1, primes, threads=threads)
    report = DeductionReport(q_limit, primes_checked=len(primes))
    for kind, q, detail in rows:
        if kind == "even":
            report.even_eliminations += 1
        elif kind == "three":
            report.three_eliminations += 1
        elif kind == "survivor":
            p = detail
            if not is_prime(p):
                report.failures.append(f"survivor p={p} is not prime")
            report.survivors.append((p, q))
            if m4_resolves(p, q):
                report.excluded_by_m4.append((p, q))
        else:
            report.failures.append(detail)
    report.survivors.sort()
    report.excluded_by_m4.sort()
    return report


def _powers_chunk(lo: int, hi: int, max_value: int) -> list[int]:
    out = []
    for base in range(lo, hi + 1):
        v = base * base
        while v <= max_value:
            out.append(v)
            v *= base
    return out


def perfect_powers(max_value: int, threads: int = 1) -> list[int]:
    """Sorted distinct x^m <= max_value with x >= 2, m >= 2."""
    top = iroot(max_value, 2)[0]
    return scan(_powers_chunk, 2, top, max_value, threads=threads)


def consecutive_powers(max_value: int, threads: int = 1) -> list[tuple[int, int]]:
    """Pairs (n, n+1) of perfect powers with n + 1 <= max_value."""
    powers = perfect_powers(max_value, threads=threads)
    return [(a, b) for a, b in zip(powers, powers[1:]) if b == a + 1]


__all__ = [
    "CriteriaVerdict",
    "DeductionReport",
    "consecutive_powers",
    "criteria_verdict",
    "final_deduction_check",
    "lemma_simp_lift",
    "m095_relation_check",
    "m2_check",
    "m3_check",
    "m4_resolves",
    "perfect_powers",
    "search_double_wieferich",
    "split_range",
    "wieferich_pair_check",
    "wieferich_pair_verify",
]
