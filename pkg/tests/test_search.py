import pytest
from hypothesis import given, strategies as st

from catalan.search import SolutionReport, balanced_quadratic_split, default_threads, signed, split_range


@given(st.integers(-100, 100), st.integers(-100, 300), st.integers(1, 20))
def test_split_range_partitions(lo, hi, parts):
    chunks = split_range(lo, hi, parts)
    covered = [i for a, b in chunks for i in range(a, b + 1)]
    assert covered == list(range(lo, hi + 1))
    assert len(chunks) <= parts


@given(st.integers(1, 5000), st.integers(1, 16))
def test_balanced_split_partitions(n, parts):
    chunks = balanced_quadratic_split(n, parts)
    assert [i for a, b in chunks for i in range(a, b + 1)] == list(range(n))


def test_report_rejects_non_solutions():
    with pytest.raises(AssertionError):
        SolutionReport("x^2-y^3=1", [(2, 1)])
    rep = SolutionReport("x^2-y^3=1", [(3, 2), (1, 0), (3, 2)])
    assert rep.solutions == [(1, 0), (3, 2)]
    assert rep.to_dict()["solutions"] == [[1, 0], [3, 2]]


def test_signed():
    assert signed([0, 2]) == [-2, 0, 2]


def test_default_threads(monkeypatch):
    monkeypatch.setenv("CATALAN_THREADS", "4")
    assert default_threads() == 4
    monkeypatch.setenv("CATALAN_THREADS", "junk")
    assert default_threads() == 1
