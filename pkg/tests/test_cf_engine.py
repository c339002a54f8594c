import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import fold_cf, nonsquares
from pell_lucas.cf_engine import (
    CFExpansion,
    ConvergentPair,
    SEEDS,
    cf_expand_sqrt,
    convergents,
    evaluate_cf,
    is_square,
    isqrt,
)
from pell_lucas.errors import OutOfDomain, PerfectSquare
from sympy_oracle import sympy_cf

nonsquare_ints = st.integers(2, 10**9).filter(lambda d: not is_square(d))
# periods stay short enough for full convergent tables
moderate_nonsquares = st.integers(2, 10**5).filter(lambda d: not is_square(d))


@pytest.mark.parametrize("n, root", [(0, 0), (1, 1), (15, 3), (16, 4), (10**100, 10**50)])
def test_isqrt_examples(n, root):
    assert isqrt(n) == root


@given(st.integers(0, 2**400))
def test_isqrt_matches_stdlib(n):
    r = isqrt(n)
    assert r == math.isqrt(n)
    assert r * r <= n < (r + 1) ** 2


def test_isqrt_rejects_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


@pytest.mark.parametrize(
    "d, a0, period",
    [(3, 1, (1, 2)), (8, 2, (1, 4)), (2, 1, (2,)), (7, 2, (1, 1, 1, 4)), (13, 3, (1, 1, 1, 1, 6))],
)
def test_cf_expand_examples(d, a0, period):
    cf = cf_expand_sqrt(d)
    assert (cf.a0, cf.period, cf.m) == (a0, period, len(period))


def test_cf_errors():
    with pytest.raises(PerfectSquare):
        cf_expand_sqrt(4)
    for d in (1, 0, -5):
        with pytest.raises(OutOfDomain):
            cf_expand_sqrt(d)


def test_expansion_str():
    assert str(cf_expand_sqrt(8)) == "[2; (1,4)]"


def test_expansion_rejects_bad_fields():
    with pytest.raises(ValueError):
        CFExpansion(3, 1, (1, 3))
    with pytest.raises(ValueError):
        CFExpansion(3, 2, (1, 4))


def test_cf_matches_sympy():
    for d in nonsquares(300):
        cf = cf_expand_sqrt(d)
        assert (cf.a0, cf.period) == sympy_cf(d)


def test_convergents_d3():
    # right-fold of [1; 1, 2, 1] etc, not the recurrence
    terms = [1, 1, 2, 1]
    expected = [fold_cf(terms[: k + 1]) for k in range(4)]
    assert [Fraction(p, q) for p, q, _ in convergents(cf_expand_sqrt(3), 4)] == expected
    assert [(p, q) for p, q, _ in convergents(cf_expand_sqrt(3), 4)] == [(1, 1), (2, 1), (5, 3), (7, 4)]
    assert 7**2 - 3 * 4**2 == 1


def test_convergent_indices_and_seeds():
    conv = convergents(cf_expand_sqrt(3), 3)
    assert [c.index for c in conv] == [0, 1, 2]
    assert SEEDS == (ConvergentPair(0, 1, -2), ConvergentPair(1, 0, -1))


@pytest.mark.parametrize("a", [1, 2, 5, 40])
def test_family_second_convergent(a):
    assert convergents(cf_expand_sqrt(a * a + 2 * a), 2)[1][:2] == (a + 1, 1)


def test_convergents_count_must_be_positive():
    with pytest.raises(ValueError):
        convergents(cf_expand_sqrt(3), 0)


@pytest.mark.parametrize(
    "terms, value",
    [([5, 1], Fraction(6)), ([1, 1, 2, 1], Fraction(7, 4)), ([7], Fraction(7)), ([0, 2], Fraction(1, 2))],
)
def test_evaluate_cf_examples(terms, value):
    assert evaluate_cf(terms) == value == fold_cf(terms)


@pytest.mark.parametrize("terms", [[], [-1, 2], [1, 0], [3, 2, -1]])
def test_evaluate_cf_rejects(terms):
    with pytest.raises(ValueError):
        evaluate_cf(terms)


@given(st.lists(st.integers(1, 50), min_size=1, max_size=30), st.integers(0, 50))
def test_evaluate_cf_matches_fold(tail, head):
    terms = [head, *tail]
    value = evaluate_cf(terms)
    assert value == fold_cf(terms)
    assert math.gcd(value.numerator, value.denominator) == 1


@given(nonsquare_ints)
@settings(deadline=None)
def test_expansion_invariants(d):
    cf = cf_expand_sqrt(d)
    assert cf.a0 ** 2 < d < (cf.a0 + 1) ** 2
    assert cf.period[-1] == 2 * cf.a0
    assert all(t >= 1 for t in cf.period)
    # minimal: no proper divisor of m is also a period of the block
    for k in range(1, cf.m):
        if cf.m % k == 0:
            assert cf.period != cf.period[:k] * (cf.m // k)


@given(moderate_nonsquares)
@settings(deadline=None)
def test_convergent_identities(d):
    cf = cf_expand_sqrt(d)
    conv = convergents(cf, 2 * cf.m + 1)
    prev = SEEDS[1]
    for c in conv:
        assert c.p * prev.q - prev.p * c.q == (-1) ** (c.index - 1)
        assert math.gcd(c.p, c.q) == 1
        prev = c
    p, q, _ = conv[cf.m - 1]
    assert abs(p * p - d * q * q) == 1


@given(st.integers(2, 5000).filter(lambda d: not is_square(d)), st.integers(1, 40))
def test_evaluate_prefix_equals_convergent(d, k):
    cf = cf_expand_sqrt(d)
    terms = [cf.term(i) for i in range(k)]
    p, q, _ = convergents(cf, k)[-1]
    assert evaluate_cf(terms) == Fraction(p, q)
