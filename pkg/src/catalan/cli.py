"""Command-line front end.

Every command writes newline-delimited records: one ``command`` record
echoing the parameters, one ``result`` record per finding, and a closing
``status`` record. Exit code 0 means every check passed, 1 means a check
failed, 2 is a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import cassels, elementary, gaussian, mihailescu, padic, pell, ufd
from .cyclotomic import CyclotomicInt, cyc_divrem, cyc_norm
from .intmath import is_prime
from .search import default_threads
from .series import formal_root

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, gaussian.GaussianInt):
        return [value.re, value.im]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


_BARE = re.compile(r"[\w.^+/-]+")


def _text_value(v) -> str:
    if isinstance(v, str) and _BARE.fullmatch(v):
        return v
    return json.dumps(v, separators=(",", ":"))


@dataclass
class Report:
    command: str
    params: dict
    results: list[dict] = field(default_factory=list)
    passed: bool = True
    timing: float | None = None

    def add(self, **fields) -> None:
        self.results.append(_jsonable(fields))

    def check(self, ok: bool, name: str, **detail) -> None:
        self.add(check=name, ok=bool(ok), **detail)
        self.passed = self.passed and bool(ok)

    def records(self) -> list[dict]:
        out = [{"record": "command", "command": self.command, "params": _jsonable(self.params)}]
        out += [{"record": "result", **r} for r in self.results]
        status = {"record": "status", "status": "pass" if self.passed else "fail"}
        if self.timing is not None:
            status["seconds"] = round(self.timing, 3)
        out.append(status)
        return out

    def render(self, fmt: str) -> str:
        if fmt == "json":
            lines = [json.dumps(r, sort_keys=True, separators=(",", ":")) for r in self.records()]
        else:
            lines = [" ".join(f"{k}={_text_value(v)}" for k, v in r.items()) for r in self.records()]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> Report:
        """Inverse of ``render(..., "json")``."""
        records = [json.loads(line) for line in text.splitlines() if line.strip()]
        head, *body, tail = records
        report = cls(head["command"], head["params"])
        report.results = [{k: v for k, v in r.items() if k != "record"} for r in body]
        report.passed = tail["status"] == "pass"
        report.timing = tail.get("seconds")
        return report


# ------------------------------------------------------------ argument types


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _prime(text: str) -> int:
    value = _nat(text)
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"{value} is not prime")
    return value


def _odd_prime(text: str) -> int:
    value = _prime(text)
    if value == 2:
        raise argparse.ArgumentTypeError("expected an odd prime")
    return value


# ------------------------------------------------------------------ commands


def _expect(report: Report, found: set, expected: set, name: str) -> None:
    report.check(found == expected, name, found=sorted(found), expected=sorted(expected))


def cmd_pell(args, threads):
    report = Report("pell", {"d": args.d, "bound": args.bound})
    sols = pell.enumerate_solutions(args.d, args.bound)
    for s in sols:
        report.add(n=s.index, x=s.x, y=s.y)
    brute = pell.enumerate_bruteforce(args.d, min(args.bound, 10**7))
    mine = [s.pair() for s in sols if s.x <= 10**7]
    report.check(mine == brute, "matches brute-force scan over y")
    if args.d == 3:
        for n in range(args.identities + 1):
            r = pell.sqrt3_identity_check(n)
            if not r.passed:
                report.check(False, "sqrt3 identities", n=n, failure=r.failure)
                break
        else:
            report.check(True, "sqrt3 identities", through=args.identities)
    return report


def cmd_mordell(args, threads):
    report = Report("mordell", {"bound": args.bound})
    res = elementary.mordell_search(args.bound, threads=threads)
    for x, y in res.solutions:
        report.add(x=x, y=y)
    expected = {(3, 2), (-3, 2), (1, 0), (-1, 0), (0, -1)}
    expected = {s for s in expected if abs(s[0]) <= args.bound}
    _expect(report, res.solution_set(), expected, "only the five known solutions")
    return report


def cmd_quartic(args, threads):
    kind = f"x^4-{args.c}y^2=1"
    report = Report("quartic", {"kind": kind, "bound": args.bound})
    res = elementary.quartic_search(kind, args.bound, threads=threads)
    for x, y in res.solutions:
        report.add(x=x, y=y)
    _expect(report, res.solution_set(), {(1, 0), (-1, 0)}, "only (+-1, 0)")
    return report


def cmd_wakulicz(args, threads):
    report = Report("wakulicz", {"bound": args.bound, "thue_bound": args.thue_bound})
    res = elementary.wakulicz_search(args.bound, threads=threads)
    report.add(families=res.trace, count=len(res.solutions))
    report.check(elementary.wakulicz_is_trivial(res), "only x=y=z and (x,-x,0)")
    thue = elementary.cubic_thue_search(args.thue_bound)
    for x, y in thue.solutions:
        report.add(equation=thue.equation, x=x, y=y)
    _expect(report, thue.solution_set(), {(1, 0), (-1, 0), (1, 1), (-1, -1)}, "x^3-2y^3=+-1 solutions")
    return report


def cmd_chao_ko(args, threads):
    report = Report("chao-ko", {"q": args.q, "bound": args.bound})
    res = cassels.chao_ko_search(args.q, args.bound, threads=threads)
    for x, y, _ in res.solutions:
        report.add(x=x, y=y)
    expected = {(1, 0), (-1, 0), (0, -1)}
    if args.q == 3:
        expected |= {(3, 2), (-3, 2)}
    _expect(report, {(x, y) for x, y, _ in res.solutions}, expected, "known solutions only")
    return report


def cmd_lebesgue(args, threads):
    report = Report("lebesgue", {"m": args.m, "bound": args.bound})
    res = cassels.lebesgue_search(args.m, args.bound, threads=threads)
    for x, y, _ in res.solutions:
        report.add(x=x, y=y)
    _expect(report, {(x, y) for x, y, _ in res.solutions}, {(1, 0)}, "only (1, 0)")
    return report


def cmd_catalan_pq(args, threads):
    if not args.p > args.q:
        raise argparse.ArgumentTypeError("need p > q")
    report = Report("catalan-pq", {"p": args.p, "q": args.q, "bound": args.bound})
    res = cassels.catalan_pq_search(args.p, args.q, args.bound, threads=threads)
    for x, y, _, _ in res.solutions:
        report.add(x=x, y=y)
    report.add(trace=res.trace)
    report.check(not res.solutions, "no nonzero solutions")
    return report


def cmd_consecutive(args, threads):
    report = Report("consecutive-powers", {"max": args.max})
    pairs = mihailescu.consecutive_powers(args.max, threads=threads)
    for a, b in pairs:
        report.add(lower=a, upper=b)
    expected = {(8, 9)} if args.max >= 9 else set()
    _expect(report, set(pairs), expected, "only 8 and 9")
    return report


def cmd_wieferich(args, threads):
    report = Report("wieferich", {"limit": args.limit})
    for p, q in mihailescu.search_double_wieferich(args.limit, threads=threads):
        ok = mihailescu.wieferich_pair_verify(p, q)
        report.add(p=p, q=q)
        report.check(ok, "word-size cross-check", p=p, q=q, word_bits=list(mihailescu.VERIFY_WORD_BITS))
    return report


def cmd_deduction(args, threads):
    report = Report("deduction", {"q_limit": args.q_limit})
    r = mihailescu.final_deduction_check(args.q_limit, threads=threads)
    report.add(
        primes_checked=r.primes_checked,
        even_eliminations=r.even_eliminations,
        divisible_by_3=r.three_eliminations,
        survivors=r.survivors,
        excluded_by_m4=r.excluded_by_m4,
    )
    for f in r.failures:
        report.add(failure=f)
    report.check(r.passed, "single survivor (19, 3), excluded by M4")
    return report


def cmd_fmn(args, threads):
    report = Report("fmn", {"m": args.m, "n": args.n, "l": args.l})
    coeffs = cassels.fmn_coefficients(args.m, args.n, args.l).coefficients
    for j, c in enumerate(coeffs):
        report.add(j=j, coefficient=c)
    h = [c for c in _poly_1px_m_minus_xm(args.m)]
    report.check(coeffs == formal_root(h, args.n, args.l), "equals formal n-th root of (1+X)^m - X^m")
    return report


def _poly_1px_m_minus_xm(m: int) -> list[int]:
    from math import comb

    coeffs = [comb(m, j) for j in range(m + 1)]
    coeffs[m] -= 1
    return coeffs


def cmd_factor_gaussian(args, threads):
    z = gaussian.GaussianInt(args.re, args.im)
    report = Report("factor-gaussian", {"re": args.re, "im": args.im})
    if not z:
        report.check(False, "nonzero input")
        return report
    fact = ufd.factorize(ufd.ZI, z)
    report.add(unit=fact.unit)
    for prime, mult in fact.factors.items():
        report.add(prime=prime, norm=gaussian.norm(prime), multiplicity=mult)
    report.check(fact.element() == z, "reconstruction")
    return report


# ------------------------------------------------------------- verify-lemma


def _lemma_pp1(report, rng):
    ok = True
    for _ in range(200):
        l = rng.choice([2, 3, 5])
        bases = [rng.randint(1, 30) for _ in range(3)]
        if any(ufd.element_gcd(ufd.Z, a, b) != 1 for i, a in enumerate(bases) for b in bases[i + 1 :]):
            continue
        parts = [b**l * (rng.choice([1, -1]) if l % 2 else 1) for b in bases]
        roots = ufd.pp1_extract(ufd.Z, parts, l)
        ok &= all(r**l == a for r, a in zip(roots, parts))
    report.check(ok, "PP1 exact roots over Z")


def _lemma_pp2(report, rng):
    ok = True
    for _ in range(200):
        p, k = rng.choice([2, 3, 5, 7]), rng.choice([2, 3])
        d, e = rng.randint(1, 20), rng.randint(0, 20)
        if e == 0:
            d = 1
        if d % p == 0 or math.gcd(d, e) != 1:
            continue
        a, b = p * d**k, p ** (k - 1) * e**k
        res = ufd.pp2_extract(ufd.Z, a, b, p, k)
        got = {p * abs(res.d) ** k, p ** (k - 1) * abs(res.e) ** k}
        ok &= got == {a, b}
    report.check(ok, "PP2 round trip over Z")


def _lemma_bachet(report, rng):
    ok = True
    for _ in range(200):
        a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        if math.gcd(a, b) != 1:
            continue
        c, d = ufd.bachet(ufd.Z, a, b)
        ok &= c * a + d * b == 1
    report.check(ok, "Bachet identity c a + d b = 1")


def _lemma_ogcd(report, rng):
    ok = True
    for _ in range(200):
        q = rng.choice([3, 5, 7, 11, 13])
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        if a == b or math.gcd(a, b) != 1:
            continue
        ok &= q % cassels.gcd_quotient(a, b, q) == 0
        ok &= cassels.quotient_binomial_form(a, b, q) * (a - b) == a**q - b**q
    report.check(ok, "gcd((a^q-b^q)/(a-b), a-b) divides q")


def _lemma_genelege(report, rng):
    ok = True
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        d = rng.randint(1, 40)
        if d % p == 0:
            continue
        a, m = rng.randint(1, 500), rng.randint(1, 60)
        ok &= all(e in (0, 1) for e in padic.progression_excess(a, d, m, p))
    for m in range(1, 200):
        for p in (2, 3, 5, 7):
            ok &= padic.ord_progression_product(1, 1, m, p) == padic.ord_factorial(p, m)
    report.check(ok, "progression excess in {0, 1}; zero for m!")


def _lemma_denonbin(report, rng):
    ok = True
    for q in (3, 5, 7):
        for k in range(0, 41):
            a = rng.randint(-1000, 1000)
            if a % q == 0:
                a += 1
            c = padic.rational_binomial(Fraction(a, q), k)
            ok &= c.denominator == q ** (k + padic.ord_factorial(q, k))
    report.check(ok, "binom(a/q, k) has denominator q^(k + ord_q(k!))")


def _lemma_vlpord(report, rng):
    ok = True
    for _ in range(500):
        p = rng.choice([2, 3, 5])
        a = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        b = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        oa, ob = padic.ord_p(p, a), padic.ord_p(p, b)
        ok &= padic.ord_p(p, a * b) == oa + ob
        s = padic.ord_p(p, a + b)
        ok &= s >= min(oa, ob) and (oa == ob or s == min(oa, ob))
    report.check(ok, "ord_p additive on products, min rule on sums")


def _lemma_pordfac(report, rng):
    ok = all(padic.ord_factorial(q, m) * (q - 1) <= m for q in (2, 3, 5, 7, 11) for m in range(10**4 + 1))
    report.check(ok, "ord_q(m!) <= m/(q-1)")


def _lemma_simp(report, rng):
    ok = True
    for q in (3, 5, 7, 11, 13):
        for x in range(1, 5000, q):
            if pow(x, q - 1, q * q) == 1:
                ok &= mihailescu.lemma_simp_lift(q, x)
    report.check(ok, "x = 1 mod q and x^(q-1) = 1 mod q^2 give x = 1 mod q^2")


def _lemma_incrdecr(report, rng):
    ok = True
    for u in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7)):
        ok &= cassels.monotonicity_probe(u, "plus", [Fraction(1, 2), 1, Fraction(3, 2), 2, 3, 5])
        if u > 1:
            ok &= cassels.monotonicity_probe(u, "minus", [Fraction(1, 2), 1, Fraction(3, 2), 2, 3, 5])
    report.check(ok, "(u^x+1)^(1/x) decreases, (u^x-1)^(1/x) increases")


def _lemma_taylis(report, rng):
    ok = True
    for m in range(1, 12):
        for n in (1, 3, 5, 7):
            l = min(8, m - 1)
            ok &= cassels.fmn_coefficients(m, n, l).coefficients == formal_root(_poly_1px_m_minus_xm(m), n, l)
    report.check(ok, "F_(m,n) Taylor coefficients equal binom(m/n, j)")


def _lemma_sqrt3(report, rng):
    bad = [n for n in range(51) if not pell.sqrt3_identity_check(n).passed]
    report.check(not bad, "x^2-3y^2=1 doubling and parity identities", failing=bad)


def _lemma_klazar(report, rng):
    for x, y in [(1, 0), (-1, 0), (0, -1), (3, 2), (-3, 2)]:
        t = elementary.klazar_classify(x, y)
        report.add(x=x, y=y, gcd_branch=t.gcd_branch, pell=t.pell, n=t.n, m=t.m, sub_branch=t.sub_branch)
    report.check(True, "case analysis replays on all five solutions")


def _lemma_conrad(report, rng):
    report.check(elementary.conrad_base_case() == [1], "v = 1 forces u = 1")
    pairs = elementary.conrad_square_pairs(500).solutions
    report.check(pairs == [(1, 1)], "square pairs u, v <= 500", found=pairs)


def _lemma_euler(report, rng):
    ok = all(elementary.euler_square_condition(Fraction(y)) for y in (0, 2, -1))
    report.check(ok, "b(a^3+b^3) is a square for y in {0, 2, -1}")


def _lemma_cyclotomic(report, rng):
    ok = True
    for p in (3, 5):
        for _ in range(300):
            z = CyclotomicInt(p, [rng.randint(-500, 500) for _ in range(p - 1)])
            w = CyclotomicInt(p, [rng.randint(-20, 20) for _ in range(p - 1)])
            if not w:
                continue
            q, r = cyc_divrem(z, w)
            ok &= z == w * q + r and abs(cyc_norm(r)) < abs(cyc_norm(w))
    report.check(ok, "norm-Euclidean division in Z[zeta_3], Z[zeta_5]")


def _lemma_dz(report, rng):
    ok = True
    for p, q in [(5, 3), (7, 3), (7, 5), (11, 3), (11, 7), (13, 5)]:
        for a in (2, -2, 4, -7, 10):
            if a % q == 0:
                continue
            r = cassels.cassels_dz_pipeline(p, q, a, y=rng.randint(-100, 100))
            ok &= r.integral and r.pattern_ok and r.dz % q != 0
    report.check(ok, "D z integral, nonzero mod q")


def _lemma_lebesgue_coprime(report, rng):
    ok = True
    for _ in range(300):
        b = 2 * rng.randint(1, 10**5)
        ok &= gaussian.gaussian_gcd(gaussian.GaussianInt(1, b), gaussian.GaussianInt(1, -b)) == gaussian.ONE
    report.check(ok, "1+bi and 1-bi coprime for even b")


LEMMAS = {
    "pp1": _lemma_pp1,
    "pp2": _lemma_pp2,
    "bachet": _lemma_bachet,
    "ogcd": _lemma_ogcd,
    "genelege": _lemma_genelege,
    "denonbin": _lemma_denonbin,
    "vlpord": _lemma_vlpord,
    "pordfac": _lemma_pordfac,
    "simplema": _lemma_simp,
    "incrdecr": _lemma_incrdecr,
    "taylis": _lemma_taylis,
    "sqrt3": _lemma_sqrt3,
    "klazar": _lemma_klazar,
    "conrad": _lemma_conrad,
    "euler": _lemma_euler,
    "cyclotomic": _lemma_cyclotomic,
    "cassels-dz": _lemma_dz,
    "lebesgue-coprime": _lemma_lebesgue_coprime,
}


def cmd_verify_lemma(args, threads):
    names = sorted(LEMMAS) if args.name == "all" else [args.name]
    report = Report("verify-lemma", {"name": args.name, "seed": args.seed})
    for name in names:
        LEMMAS[name](report, random.Random(f"{args.seed}:{name}"))
    return report


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catalan", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", metavar="FILE", help="write the report here as well as stdout")
    parser.add_argument("--threads", type=_nat, default=None, help="search workers (default $CATALAN_THREADS or 1)")
    parser.add_argument("--timing", action="store_true", help="append wall-clock seconds to the status record")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("pell", help="solutions of x^2 - d y^2 = 1")
    p.add_argument("--d", type=_nat, default=3)
    p.add_argument("--bound", type=_nat, default=10**7)
    p.add_argument("--identities", type=_nat, default=50, help="check the d=3 identities up to this n")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("mordell", help="x^2 - y^3 = 1")
    p.add_argument("--bound", type=_nat, default=10**6)
    p.set_defaults(func=cmd_mordell)

    p = sub.add_parser("quartic", help="x^4 - c y^2 = 1 for c in {2, 3}")
    p.add_argument("--c", type=int, choices=(2, 3), default=3)
    p.add_argument("--bound", type=_nat, default=10**4)
    p.set_defaults(func=cmd_quartic)

    p = sub.add_parser("wakulicz", help="x^3 + y^3 = 2 z^3 and x^3 - 2 y^3 = +-1")
    p.add_argument("--bound", type=_nat, default=200)
    p.add_argument("--thue-bound", type=_nat, default=1000)
    p.set_defaults(func=cmd_wakulicz)

    p = sub.add_parser("chao-ko", help="x^2 - y^q = 1")
    p.add_argument("--q", type=_odd_prime, default=5)
    p.add_argument("--bound", type=_nat, default=10**6)
    p.set_defaults(func=cmd_chao_ko)

    p = sub.add_parser("lebesgue", help="x^m - y^2 = 1 for odd m")
    p.add_argument("--m", type=_nat, default=3)
    p.add_argument("--bound", type=_nat, default=10**4)
    p.set_defaults(func=cmd_lebesgue)

    p = sub.add_parser("catalan-pq", help="x^p - y^q = 1 for odd primes p > q")
    p.add_argument("--p", type=_odd_prime, required=True)
    p.add_argument("--q", type=_odd_prime, required=True)
    p.add_argument("--bound", type=_nat, default=500)
    p.set_defaults(func=cmd_catalan_pq)

    p = sub.add_parser("consecutive-powers", help="consecutive perfect powers up to --max")
    p.add_argument("--max", type=_nat, default=10**8)
    p.set_defaults(func=cmd_consecutive)

    p = sub.add_parser("wieferich", help="double Wieferich prime pairs")
    p.add_argument("--limit", type=_nat, default=5000)
    p.set_defaults(func=cmd_wieferich)

    p = sub.add_parser("deduction", help="replay the closing deduction from M1-M4")
    p.add_argument("--q-limit", type=_nat, default=10**5)
    p.set_defaults(func=cmd_deduction)

    p = sub.add_parser("fmn", help="Taylor coefficients of ((1+X)^m - X^m)^(1/n)")
    p.add_argument("--m", type=_nat, required=True)
    p.add_argument("--n", type=_nat, required=True)
    p.add_argument("--l", type=_nat, required=True)
    p.set_defaults(func=cmd_fmn)

    p = sub.add_parser("factor-gaussian", help="factor re + im*i in Z[i]")
    p.add_argument("re", type=int)
    p.add_argument("im", type=int)
    p.set_defaults(func=cmd_factor_gaussian)

    p = sub.add_parser("verify-lemma", help="randomized or exhaustive check of one lemma")
    p.add_argument("name", choices=sorted(LEMMAS) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_lemma)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    threads = args.threads if args.threads else default_threads()
    start = time.perf_counter()
    try:
        report = args.func(args, threads)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"catalan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timing:
        report.timing = time.perf_counter() - start
    text = report.render(args.format)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_PASS if report.passed else EXIT_FAIL


def run(argv=None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
