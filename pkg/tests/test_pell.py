import pytest

from catalan.pell import (
    PellSolution,
    compose,
    continued_fraction_sqrt,
    enumerate_bruteforce,
    enumerate_solutions,
    minimal_solution,
    minimal_solution_bruteforce,
    nth_solution,
    power_binomial,
    sqrt3_identity_check,
)


def test_minimal_examples():
    assert minimal_solution(2).pair() == (3, 2)
    assert minimal_solution(3).pair() == (2, 1)
    assert minimal_solution(61).pair() == (1766319049, 226153980)
    assert continued_fraction_sqrt(7) == (2, [1, 1, 1, 4])


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7, 8, 10, 11, 13, 14, 15])
def test_minimal_against_bruteforce(d):
    assert minimal_solution(d) == minimal_solution_bruteforce(d)


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7, 8, 10])
def test_enumeration_complete(d):
    mine = [s.pair() for s in enumerate_solutions(d, 10**6)]
    assert mine == enumerate_bruteforce(d, 10**6)


@pytest.mark.parametrize("d", [0, 1, 4, 9, -3])
def test_bad_d(d):
    with pytest.raises(ValueError):
        minimal_solution(d)


def test_solution_validation():
    with pytest.raises(ValueError):
        PellSolution(3, 1, 1, 3)
    with pytest.raises(ValueError):
        PellSolution(1, 0, 1, 3)


def test_composition_is_index_addition():
    for i in range(6):
        for j in range(6):
            assert compose(nth_solution(3, i), nth_solution(3, j)) == nth_solution(3, i + j)


def test_binomial_expansion_matches_recurrence():
    x, y = 1, 0
    for n in range(30):
        assert power_binomial(2, 1, 3, n) == (x, y)
        x, y = 2 * x + 3 * y, x + 2 * y


def test_sqrt3_identities():
    for n in range(51):
        r = sqrt3_identity_check(n)
        assert r.passed, r.failure
