import pytest
from hypothesis import given, settings, strategies as st

from pell_lucas import pell_core
from pell_lucas.cf_engine import is_square
from pell_lucas.oracle import SearchBound, brute_solve, first_solution
from pell_lucas.records import Reason


def test_examples():
    assert brute_solve(3, 1, SearchBound(20)) == [(2, 1), (7, 4), (26, 15)]
    assert brute_solve(8, -4, 10) == [(2, 1), (14, 5)]
    assert 14**2 - 8 * 5**2 == -4


def test_no_solutions_for_d3_minus_one():
    assert brute_solve(3, -1, 10**4) == []


def test_first_solution():
    v = first_solution(5, -4, 100)
    assert v.solvable and v.fundamental == (1, 1)
    assert first_solution(2, -1, 10).fundamental == (1, 1)
    v = first_solution(15, -4, 10**4)
    assert not v.solvable
    assert v.reason is Reason.SEARCH_EXHAUSTED and v.bound == 10**4


def test_bound_validation():
    with pytest.raises(ValueError):
        SearchBound(0)


def test_parallel_matches_serial():
    assert brute_solve(3, 1, 5000, workers=3) == brute_solve(3, 1, 5000)
    assert brute_solve(5, -4, 5000, workers=2) == brute_solve(5, -4, 5000)


@given(st.integers(2, 300).filter(lambda d: not is_square(d)), st.sampled_from([1, -1, 4, -4]))
@settings(deadline=None, max_examples=60)
def test_sound_and_complete_within_bound(d, N):
    y_max = 2000
    found = brute_solve(d, N, y_max)
    assert all(pell_core.verify(d, N, x, y) and x >= 1 for x, y in found)
    assert [y for _, y in found] == sorted({y for _, y in found})
    v = pell_core.verdict(d, N)
    if not v.solvable:
        assert found == []
        return
    n, expected = 1, []
    while (sol := pell_core.iterate_solutions(d, N, n)).y <= y_max:
        expected.append(sol)
        n += 1
    assert found == expected
