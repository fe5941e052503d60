"""Elementary cases: Pythagorean triples, the quartics x^4 - 2y^2 = 1 and
x^4 - 3y^2 = 1, the curve x^2 - y^3 = 1 and its proof replay, the descent
quartic, and x^3 + y^3 = 2z^3.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import ufd
from .intmath import iroot, is_square
from .pell import PellSolution, power_binomial
from .search import SolutionReport, equation, scan, signed

# ------------------------------------------------------------ equation checks


@equation("x^2-y^3=1")
def _mordell(x, y):
    return x * x - y**3 == 1


@equation("x^4-2y^2=1")
def _quartic2(x, y):
    return x**4 - 2 * y * y == 1


@equation("x^4-3y^2=1")
def _quartic3(x, y):
    return x**4 - 3 * y * y == 1


@equation("x^4-3x^2y^2+3y^4=z^2")
def _conrad(x, y, z):
    return x**4 - 3 * x * x * y * y + 3 * y**4 == z * z


@equation("u,v,u^2-3uv+3v^2 squares")
def _conrad_uv(u, v):
    return is_square(u) and is_square(v) and is_square(u * u - 3 * u * v + 3 * v * v)


@equation("x^3+y^3=2z^3")
def _wakulicz(x, y, z):
    return x**3 + y**3 == 2 * z**3


@equation("x^3-2y^3=+-1")
def _thue(x, y):
    return x**3 - 2 * y**3 in (1, -1)


QUARTIC_KINDS = {"x^4-2y^2=1": 2, "x^4-3y^2=1": 3}

# ------------------------------------------------------- Pythagorean triples


def pythagorean_parametrize(x: int, y: int, z: int) -> tuple[int, int]:
    """Coprime (u, v) with z = u^2 + v^2 and {x, y} = {u^2 - v^2, 2uv}."""
    if min(x, y, z) < 0 or x * x + y * y != z * z:
        raise ValueError(f"({x}, {y}, {z}) is not a Pythagorean triple")
    if math.gcd(x, y) != 1 or math.gcd(x, z) != 1 or math.gcd(y, z) != 1:
        raise ValueError(f"({x}, {y}, {z}) is not pairwise coprime")
    odd = x if x % 2 else y
    # (z - odd)/2 and (z + odd)/2 are coprime with square product, hence squares
    u, v = ufd.pp1_extract(ufd.Z, [(z + odd) // 2, (z - odd) // 2], 2)
    u, v = abs(u), abs(v)
    assert z == u * u + v * v and {x, y} == {u * u - v * v, 2 * u * v}
    return u, v


def onab_decompose(x: int, y: int) -> tuple[int, int]:
    """(a, b) with a^2 - 2b^2 = 1 and x = 2a^2 - 1 +- 2ab, for 2x^2 - y^2 = 1."""
    if x < 0 or y < 0 or 2 * x * x - y * y != 1:
        raise ValueError(f"({x}, {y}) does not satisfy 2x^2 - y^2 = 1")
    y0 = (y - 1) // 2
    legs = (y0, y0 + 1) if y0 % 2 else (y0 + 1, y0)  # odd leg first
    u, v = pythagorean_parametrize(legs[0], legs[1], x)
    if u * u - v * v - 2 * u * v == 1:
        a, b = u - v, v
    else:
        a, b = u + v, u
    assert a * a - 2 * b * b == 1
    assert x in (2 * a * a - 1 + 2 * a * b, 2 * a * a - 1 - 2 * a * b)
    return a, b


# ------------------------------------------------------------------ searches


def _mordell_chunk(lo: int, hi: int, bound: int) -> list[tuple[int, int]]:
    out = []
    for y in range(lo, hi + 1):
        x, exact = iroot(y**3 + 1, 2)
        if exact and x <= bound:
            out.extend((s, y) for s in signed([x]))
    return out


def mordell_search(bound: int, threads: int = 1) -> SolutionReport:
    """All (x, y) with x^2 - y^3 = 1 and |x| <= bound.

    x^2 >= 0 forces y >= -1, and y^3 <= bound^2 - 1 caps y, so only the cube
    side is scanned.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    y_max = iroot(bound * bound - 1, 3)[0]
    sols = scan(_mordell_chunk, -1, y_max, bound, threads=threads)
    return SolutionReport("x^2-y^3=1", sols, {"|x|": bound, "y": [-1, y_max]})


def _quartic_chunk(lo: int, hi: int, c: int) -> list[tuple[int, int]]:
    out = []
    for x in range(lo, hi + 1):
        n = x**4 - 1
        if n >= 0 and n % c == 0:
            y, exact = iroot(n // c, 2)
            if exact:
                out.extend((sx, sy) for sx in signed([x]) for sy in signed([y]))
    return out


def quartic_search(kind: str, bound: int, threads: int = 1) -> SolutionReport:
    if kind not in QUARTIC_KINDS:
        raise ValueError(f"unknown quartic {kind!r}; choose from {sorted(QUARTIC_KINDS)}")
    if bound < 1:
        raise ValueError("bound must be positive")
    sols = scan(_quartic_chunk, 0, bound, QUARTIC_KINDS[kind], threads=threads)
    return SolutionReport(kind, sols, {"|x|": bound})


def _conrad_chunk(lo: int, hi: int, bound: int) -> list[tuple[int, int, int]]:
    out = []
    for x in range(lo, hi + 1):
        if x % 3 == 0:
            continue
        x2 = x * x
        for y in range(1, bound + 1):
            if math.gcd(x, y) != 1:
                continue
            y2 = y * y
            z, exact = iroot(x2 * x2 - 3 * x2 * y2 + 3 * y2 * y2, 2)
            if exact:
                out.append((x, y, z))
    return out


def conrad_quartic_search(bound: int, threads: int = 1) -> SolutionReport:
    """(x, y, z) in N^3, gcd(x, y) = 1, 3 does not divide x, x, y <= bound,
    with x^4 - 3x^2y^2 + 3y^4 = z^2."""
    if bound < 1:
        raise ValueError("bound must be positive")
    sols = scan(_conrad_chunk, 1, bound, bound, threads=threads)
    return SolutionReport("x^4-3x^2y^2+3y^4=z^2", sols, {"x": bound, "y": bound})


def conrad_square_pairs(limit: int) -> SolutionReport:
    """Coprime square u, v <= limit with 3 not dividing u and u^2 - 3uv + 3v^2 square."""
    squares = [k * k for k in range(1, math.isqrt(limit) + 1)]
    sols = [
        (u, v)
        for u in squares
        for v in squares
        if u % 3 and math.gcd(u, v) == 1 and is_square(u * u - 3 * u * v + 3 * v * v)
    ]
    return SolutionReport("u,v,u^2-3uv+3v^2 squares", sols, {"u": limit, "v": limit})


def conrad_base_case() -> list[int]:
    """Square u with u^2 - 3u + 3 a square (the v = 1 case), solved exactly.

    u^2 - 3u + 3 = a^2 means (2a - (2u-3)) (2a + (2u-3)) = 3, so both factors
    are divisors of 3 and only finitely many u arise.
    """
    candidates = set()
    for f in (1, 3, -1, -3):
        g = 3 // f  # f = 2a - t, g = 2a + t, t = 2u - 3
        t2 = g - f
        if t2 % 2 == 0 and (t2 // 2 + 3) % 2 == 0:
            u = (t2 // 2 + 3) // 2
            if u >= 1:
                candidates.add(u)
    assert candidates == {1, 2}
    return sorted(u for u in candidates if is_square(u))


def _wakulicz_chunk(lo: int, hi: int, bound: int) -> list[tuple[int, int, int]]:
    out = []
    for x in range(lo, hi + 1):
        x3 = x**3
        for y in range(-bound, bound + 1):
            s = x3 + y**3
            if s % 2:
                continue
            z, exact = iroot(s // 2, 3)
            if exact and abs(z) <= bound:
                out.append((x, y, z))
    return out


def wakulicz_search(bound: int, threads: int = 1) -> SolutionReport:
    """x^3 + y^3 = 2z^3 with |x|, |y|, |z| <= bound, split into the two trivial families."""
    if bound < 1:
        raise ValueError("bound must be positive")
    sols = scan(_wakulicz_chunk, -bound, bound, bound, threads=threads)
    diagonal = sum(1 for x, y, z in sols if x == y == z)
    antipodal = sum(1 for x, y, z in sols if y == -x and z == 0)
    other = [s for s in sols if not (s[0] == s[1] == s[2] or (s[1] == -s[0] and s[2] == 0))]
    trace = [f"x=y=z: {diagonal}", f"(x,-x,0): {antipodal}", f"other: {len(other)}"]
    return SolutionReport("x^3+y^3=2z^3", sols, {"|x|,|y|,|z|": bound}, trace)


def wakulicz_is_trivial(report: SolutionReport) -> bool:
    return all(x == y == z or (y == -x and z == 0) for x, y, z in report.solutions)


def cubic_thue_search(bound: int) -> SolutionReport:
    """x^3 - 2y^3 = +-1 with |x| <= bound; y is forced by x."""
    sols = []
    for x in range(-bound, bound + 1):
        for rhs in (1, -1):
            n = x**3 - rhs
            if n % 2 == 0:
                y, exact = iroot(n // 2, 3)
                if exact:
                    sols.append((x, y))
    return SolutionReport("x^3-2y^3=+-1", sols, {"|x|": bound})


# ------------------------------------------------------- proof replay x^2-y^3


@dataclass
class KlazarTrace:
    x: int
    y: int
    gcd_branch: int
    witnesses: tuple[int, int]
    pell: tuple[int, int] | None = None
    n: int | None = None
    m: int | None = None
    sub_branch: int | None = None
    steps: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["witnesses"] = list(self.witnesses)
        d["pell"] = list(self.pell) if self.pell is not None else None
        return d


def _sqrt3_pair(n: int) -> tuple[int, int]:
    return power_binomial(2, 1, 3, n)


def klazar_classify(x: int, y: int) -> KlazarTrace:
    """Replay the case analysis for a concrete solution of x^2 - y^3 = 1.

    Every identity the argument uses is re-checked on the actual numbers.
    """
    if x * x - y**3 != 1:
        raise ValueError(f"({x}, {y}) does not satisfy x^2 - y^3 = 1")
    A, B = y + 1, y * y - y + 1
    assert A * B == x * x and A >= 0 and B == A * (y - 2) + 3
    g = math.gcd(A, B)
    assert g in (1, 3)
    steps = [f"x^2 = (y+1)(y^2-y+1) = {A}*{B}", f"gcd = {g}"]

    if g == 1:
        s, t = ufd.pp1_extract(ufd.Z, [A, B], 2)
        s, t = abs(s), abs(t)
        assert (2 * t - 2 * y + 1) * (2 * t + 2 * y - 1) == 3
        steps.append(f"PP1: y+1 = {s}^2, y^2-y+1 = {t}^2")
        steps.append(f"3 = (2a-2y+1)(2a+2y-1) with a = {t}")
        assert y == 0, "the gcd-1 branch only admits y = 0"
        return KlazarTrace(x, y, 1, (s, t), steps=steps)

    res = ufd.pp2_extract(ufd.Z, A, B, 3, 2)
    a, b = (res.d, res.e) if res.single == "a" else (res.e, res.d)
    a, b = abs(a), abs(b)
    assert A == 3 * a * a and B == 3 * b * b
    X = 2 * b
    assert (2 * y - 1) % 3 == 0
    Y = (2 * y - 1) // 3
    assert X * X - 3 * Y * Y == 1 and Y == 2 * a * a - 1
    steps.append(f"PP2: y+1 = 3*{a}^2, y^2-y+1 = 3*{b}^2")
    steps.append(f"(X, Y, a) = ({X}, {Y}, {a}); X^2 - 3Y^2 = 1, Y = 2a^2 - 1")
    if Y < 0:
        assert (X, Y, a) == (2, -1, 0)
        steps.append("Y < 0: y = -1")
        return KlazarTrace(x, y, 3, (a, b), (X, Y), steps=steps)

    PellSolution(X, Y, 1 if Y else 0, 3)
    n = 0
    while _sqrt3_pair(n)[1] < Y:
        n += 1
    assert _sqrt3_pair(n) == (X, Y), "Y is not a y_n"
    assert n % 2 == 1
    m = (n - 1) // 2
    xm, _ = _sqrt3_pair(m)
    _, ym1 = _sqrt3_pair(m + 1)
    assert a * a == xm * ym1 and Y == 2 * xm * ym1 - 1
    g2 = math.gcd(xm, ym1)
    assert g2 in (1, 2)
    steps.append(f"Y = y_{n}, n = 2m+1 with m = {m}; a^2 = x_m y_(m+1) = {xm}*{ym1}")
    steps.append(f"gcd(x_m, y_(m+1)) = {g2}")
    if g2 == 1:
        root, _ = ufd.pp1_extract(ufd.Z, [xm, ym1], 2)
        assert xm == root * root == 1 and m == 0
        steps.append("PP1: x_m is a square, so x_m = 1, m = 0, n = 1, y = 2")
    else:
        ufd.pp2_extract(ufd.Z, xm, ym1, 2, 2)
        assert (m + 1) % 2 == 0
        k = (m + 1) // 2
        xk, yk = _sqrt3_pair(k)
        assert 2 * xk * yk == ym1
        steps.append(f"PP2: y_(m+1) = 2c^2 = 2 x_k y_k with k = {k}")
    return KlazarTrace(x, y, 3, (a, b), (X, Y), n, m, g2, steps)


def euler_square_condition(y: Fraction) -> bool:
    """For y = a/b in lowest terms (b > 0): is b(a^3 + b^3) a square?"""
    y = Fraction(y)
    a, b = y.numerator, y.denominator
    return is_square(b * (a**3 + b**3))
