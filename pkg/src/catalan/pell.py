"""Pell equations x^2 - d y^2 = 1: fundamental solution, powers, and the d = 3 identities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb


@dataclass(frozen=True, order=True)
class PellSolution:
    x: int
    y: int
    index: int
    d: int

    def __post_init__(self):
        if self.x * self.x - self.d * self.y * self.y != 1:
            raise ValueError(f"({self.x}, {self.y}) does not solve x^2 - {self.d}y^2 = 1")
        if self.x < 1 or self.y < 0:
            raise ValueError("solutions are kept in the quadrant x > 0, y >= 0")
        if (self.index == 0) != ((self.x, self.y) == (1, 0)):
            raise ValueError("index 0 is reserved for the trivial solution")

    def pair(self) -> tuple[int, int]:
        return self.x, self.y


def _check_d(d: int) -> None:
    if d < 2:
        raise ValueError(f"d={d} must be at least 2")
    r = math.isqrt(d)
    if r * r == d:
        raise ValueError(f"d={d} is a perfect square")


def continued_fraction_sqrt(d: int) -> tuple[int, list[int]]:
    """Leading term and one period of the continued fraction of sqrt(d)."""
    _check_d(d)
    a0 = math.isqrt(d)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return a0, period


def minimal_solution(d: int) -> PellSolution:
    """Fundamental solution from the convergents of sqrt(d)."""
    a0, period = continued_fraction_sqrt(d)
    # convergent p_{r-1}/q_{r-1} (r = period length) solves x^2 - dy^2 = +-1;
    # when r is odd it gives -1 and the second period is needed
    terms = period[:-1] if len(period) % 2 == 0 else period + period[:-1]
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for a in terms:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return PellSolution(p, q, 1, d)


def minimal_solution_bruteforce(d: int, y_limit: int = 10**6) -> PellSolution:
    """Scan y = 1, 2, ... for the first y with 1 + d y^2 a square."""
    _check_d(d)
    for y in range(1, y_limit + 1):
        n = 1 + d * y * y
        x = math.isqrt(n)
        if x * x == n:
            return PellSolution(x, y, 1, d)
    raise ValueError(f"no solution with y <= {y_limit} for d={d}")


def power_binomial(a: int, b: int, d: int, n: int) -> tuple[int, int]:
    """Coordinates of (a + b sqrt d)^n via the binomial theorem."""
    x = sum(comb(n, j) * a ** (n - j) * b**j * d ** (j // 2) for j in range(0, n + 1, 2))
    y = sum(comb(n, j) * a ** (n - j) * b**j * d ** (j // 2) for j in range(1, n + 1, 2))
    return x, y


def nth_solution(d: int, n: int) -> PellSolution:
    if n < 0:
        raise ValueError("n must be non-negative")
    fund = minimal_solution(d)
    x, y = power_binomial(fund.x, fund.y, d, n)
    return PellSolution(x, y, n, d)


def enumerate_solutions(d: int, x_bound: int) -> list[PellSolution]:
    """All natural solutions with x <= x_bound, in increasing x."""
    fund = minimal_solution(d)
    out = []
    x, y, n = 1, 0, 0
    while x <= x_bound:
        out.append(PellSolution(x, y, n, d))
        x, y = x * fund.x + d * y * fund.y, x * fund.y + y * fund.x
        n += 1
    return out


def enumerate_bruteforce(d: int, x_bound: int) -> list[tuple[int, int]]:
    """Independent scan over y of all (x, y) with 1 <= x <= x_bound."""
    _check_d(d)
    out = []
    y = 0
    while True:
        n = 1 + d * y * y
        if n > x_bound * x_bound:
            break
        x = math.isqrt(n)
        if x * x == n:
            out.append((x, y))
        y += 1
    return out


def compose(s: PellSolution, t: PellSolution) -> PellSolution:
    if s.d != t.d:
        raise ValueError("solutions of different Pell equations")
    return PellSolution(s.x * t.x + s.d * s.y * t.y, s.x * t.y + t.x * s.y, s.index + t.index, s.d)


@dataclass
class IdentityReport:
    n: int
    passed: bool
    failure: str | None = None


def _sqrt3_sequence(length: int) -> list[tuple[int, int]]:
    seq = [(1, 0)]
    for _ in range(length - 1):
        x, y = seq[-1]
        seq.append((2 * x + 3 * y, x + 2 * y))
    return seq


def sqrt3_identity_check(n: int) -> IdentityReport:
    """Check the doubling and parity identities of x_n + y_n sqrt3 = (2 + sqrt3)^n.

    The sequence is built by the linear recurrence and compared against the
    binomial expansion, so the recurrence itself is under test too.
    """
    seq = _sqrt3_sequence(2 * n + 2)
    for k in (n, n + 1, 2 * n, 2 * n + 1):
        if seq[k] != power_binomial(2, 1, 3, k):
            return IdentityReport(n, False, f"recurrence x_(k+1)=2x_k+3y_k, y_(k+1)=x_k+2y_k at k={k}")
    (xn, yn), (_, yn1) = seq[n], seq[n + 1]
    checks = [
        ("x_2n = 2 x_n^2 - 1", seq[2 * n][0] == 2 * xn * xn - 1),
        ("y_2n = 2 x_n y_n", seq[2 * n][1] == 2 * xn * yn),
        ("x_2n+1 = (y_n + y_n+1)^2 + 1", seq[2 * n + 1][0] == (yn + yn1) ** 2 + 1),
        ("y_2n+1 = 2 x_n y_n+1 - 1", seq[2 * n + 1][1] == 2 * xn * yn1 - 1),
        ("x_n odd iff n even", (xn % 2 == 1) == (n % 2 == 0)),
        ("x_n, y_n of different parity", (xn - yn) % 2 == 1),
    ]
    for name, ok in checks:
        if not ok:
            return IdentityReport(n, False, name)
    return IdentityReport(n, True)
