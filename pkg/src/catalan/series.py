"""Truncated power series with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def mul_truncated(f: Sequence[Fraction], g: Sequence[Fraction], degree: int) -> list[Fraction]:
    out = [Fraction(0)] * (degree + 1)
    for i, a in enumerate(f[: degree + 1]):
        if a:
            for j, b in enumerate(g[: degree + 1 - i]):
                out[i + j] += a * b
    return out


def pow_truncated(f: Sequence[Fraction], n: int, degree: int) -> list[Fraction]:
    out = [Fraction(1)] + [Fraction(0)] * degree
    for _ in range(n):
        out = mul_truncated(out, f, degree)
    return out


def formal_root(h: Sequence[int | Fraction], n: int, degree: int) -> list[Fraction]:
    """Coefficients of the series g with g(0) = 1 and g^n = h, up to ``degree``.

    Requires h(0) = 1. Coefficient k is read off from [X^k] g^n = h_k, where
    g_k enters linearly as n * g_k and the rest only involves g_0 .. g_(k-1).
    """
    h = [Fraction(c) for c in h] + [Fraction(0)] * (degree + 1)
    if h[0] != 1:
        raise ValueError("constant term must be 1")
    g = [Fraction(1)] + [Fraction(0)] * degree
    for k in range(1, degree + 1):
        rest = pow_truncated(g[:k], n, k)[k]
        g[k] = (h[k] - rest) / n
    return g
