"""Search reports and deterministic range splitting for exhaustive scans."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

THREADS_ENV = "CATALAN_THREADS"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Cut [lo, hi] into at most ``parts`` contiguous closed ranges."""
    if hi < lo:
        return []
    parts = max(1, min(parts, hi - lo + 1))
    step, extra = divmod(hi - lo + 1, parts)
    out, start = [], lo
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0) - 1
        out.append((start, stop))
        start = stop + 1
    return out


def balanced_quadratic_split(n: int, parts: int) -> list[tuple[int, int]]:
    """Split indices 0..n-1 so that work proportional to the index is even."""
    parts = max(1, min(parts, n))
    cuts = sorted({round(n * (i / parts) ** 0.5) for i in range(parts + 1)} | {0, n})
    return [(a, b - 1) for a, b in zip(cuts, cuts[1:]) if b > a]


def scan(
    worker: Callable[..., list],
    lo: int,
    hi: int,
    *args,
    threads: int = 1,
    chunks: list[tuple[int, int]] | None = None,
) -> list:
    """Run ``worker(a, b, *args)`` over a split of [lo, hi] and merge sorted.

    ``worker`` must be a module-level function so worker processes can
    import it. The merged list is sorted, so the result does not depend on
    the thread count. An explicit ``chunks`` list overrides the even split.
    """
    if chunks is None:
        chunks = split_range(lo, hi, threads)
    if threads <= 1 or len(chunks) <= 1:
        results = [worker(a, b, *args) for a, b in chunks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(worker, a, b, *args) for a, b in chunks]
            results = [f.result() for f in futures]
    merged = [item for chunk in results for item in chunk]
    return sorted(set(merged))


_CHECKERS: dict[str, Callable[..., bool]] = {}


def equation(tag: str):
    """Register the exact check for solution tuples reported under ``tag``."""

    def register(fn):
        _CHECKERS[tag] = fn
        return fn

    return register


def satisfies(tag: str, solution: tuple) -> bool:
    return _CHECKERS[tag](*solution)


@dataclass
class SolutionReport:
    equation: str
    solutions: list[tuple[int, ...]]
    bounds: dict = field(default_factory=dict)
    trace: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.solutions = sorted(set(tuple(s) for s in self.solutions))
        if self.equation in _CHECKERS:
            bad = [s for s in self.solutions if not satisfies(self.equation, s)]
            if bad:
                raise AssertionError(f"{self.equation}: reported non-solutions {bad}")

    def solution_set(self) -> set[tuple[int, ...]]:
        return set(self.solutions)

    def to_dict(self) -> dict:
        return {
            "equation": self.equation,
            "solutions": [list(s) for s in self.solutions],
            "bounds": dict(self.bounds),
            "trace": list(self.trace),
        }


def signed(values: Iterable[int]) -> list[int]:
    """Each value with both signs, zero once."""
    out = set()
    for v in values:
        out.update((v, -v))
    return sorted(out)
