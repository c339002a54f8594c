"""Closed forms for x^2 - (a^2 + 2a)*y^2 = N.

For d = a^2 + 2a = (a+1)^2 - 1:

* sqrt(d) = [a; 1, 2a, 1, 2a, ...], period 2,
* the fundamental unit is (a+1, 1), and the n-th unit is
  (V_n(2a+2, -1)/2, U_n(2a+2, -1)),
* the -1 equation never has solutions (even period),
* the +4 equation has fundamental (2a+2, 2) and n-th solution
  (V_n(2a+2, -1), 2*U_n(2a+2, -1)),
* the -4 equation has no solutions once a > 2.

Outputs are re-checked against the equation with ``assert``, so running
under ``python -O`` trusts the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import pell_core
from .cf_engine import CFExpansion, evaluate_cf, isqrt
from .errors import OutOfDomain
from .lucas_seq import SequenceParams, lucas_pair
from .pell_core import verify
from .records import PellSolution, Reason, Verdict

# labels attached to answers that come from the closed forms
THM_CF = "Theorem 6"
THM_UNIT = "Theorem 7"
THM_NEG_ONE = "Theorem 8"
THM_FOUR = "Theorem 9"
THM_FOUR_NTH = "Theorem 10"
THM_NEG_FOUR = "Theorem 11"
OUTSIDE_NEG_FOUR = "outside Theorem 11"


@dataclass(frozen=True)
class FamilyParam:
    a: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise OutOfDomain(f"a must be a positive integer, got {self.a}")

    @property
    def d(self) -> int:
        return self.a * self.a + 2 * self.a


def family_a(d: int) -> Optional[int]:
    """The a with d = a^2 + 2a, or None if d is not in the family."""
    if d < 3:
        return None
    a = isqrt(d + 1) - 1
    return a if a * a + 2 * a == d else None


def _d(a: int) -> int:
    return FamilyParam(a).d


def _lucas(a: int, n: int) -> tuple[int, int]:
    return lucas_pair(SequenceParams(2 * a + 2, -1), n)


def _check_n(n: int) -> None:
    if n < 1:
        raise OutOfDomain(f"n must be a positive integer, got {n}")


def family_cf(a: int) -> CFExpansion:
    return CFExpansion(_d(a), a, (1, 2 * a))


def family_fundamental(a: int) -> PellSolution:
    sol = PellSolution(a + 1, 1)
    assert verify(_d(a), 1, *sol)
    return sol


def family_nth_unit(a: int, n: int) -> PellSolution:
    """n-th unit via x' = (a+1)x + d*y, y' = x + (a+1)y."""
    d = _d(a)
    _check_n(n)
    x, y = a + 1, 1
    for _ in range(n - 1):
        x, y = (a + 1) * x + d * y, x + (a + 1) * y
    assert verify(d, 1, x, y)
    return PellSolution(x, y)


def family_nth_unit_cf(a: int, n: int) -> PellSolution:
    """n-th unit read off [a; (1, 2a) repeated n-1 times, 1]."""
    d = _d(a)
    _check_n(n)
    value = evaluate_cf([a, *(1, 2 * a) * (n - 1), 1])
    sol = PellSolution(value.numerator, value.denominator)
    assert verify(d, 1, *sol)
    return sol


def family_nth_unit_lucas(a: int, n: int) -> PellSolution:
    d = _d(a)
    _check_n(n)
    u, v = _lucas(a, n)
    if v % 2:
        raise ArithmeticError(f"V_{n}({2 * a + 2}, -1) = {v} is odd")
    sol = PellSolution(v // 2, u)
    assert verify(d, 1, *sol)
    return sol


def family_neg_one(a: int) -> Verdict:
    _d(a)
    return Verdict.none(Reason.EVEN_PERIOD, source=THM_NEG_ONE)


def family_four_fundamental(a: int) -> PellSolution:
    sol = PellSolution(2 * a + 2, 2)
    assert verify(_d(a), 4, *sol)
    return sol


def family_nth_four(a: int, n: int) -> PellSolution:
    d = _d(a)
    _check_n(n)
    u, v = _lucas(a, n)
    sol = PellSolution(v, 2 * u)
    assert verify(d, 4, *sol)
    return sol


def family_neg_four(a: int) -> Verdict:
    """-4 equation: no solutions for a > 2; a in {1, 2} goes to the general solver.

    Odd a gives d = 3 (mod 4), where -4 reduces to -1. Even a = 2k gives
    (x/2)^2 - (k^2 + k)*y^2 = -1, and sqrt(k^2 + k) has period 2 for k > 1.
    """
    d = _d(a)
    if a > 2:
        return Verdict.none(Reason.REDUCTION, source=THM_NEG_FOUR)
    v = pell_core.solve_neg_four(d)
    return Verdict(v.status, v.fundamental, v.reason, source=OUTSIDE_NEG_FOUR)


def cf_k_squared_plus_k(k: int) -> CFExpansion:
    if k < 1:
        raise OutOfDomain(f"k must be a positive integer, got {k}")
    d = k * k + k
    if k == 1:
        return CFExpansion(d, 1, (2,))
    return CFExpansion(d, k, (2, 2 * k))


@dataclass(frozen=True)
class SolveReport:
    d: int
    N: int
    verdict: Verdict
    solutions: list[PellSolution] = field(default_factory=list)
    # a when the closed forms were used, else None
    a: Optional[int] = None


def solve(d: int, N: int, count: int = 1, general: bool = False) -> SolveReport:
    """Verdict plus the first ``count`` solutions of x^2 - d*y^2 = N.

    d of the form a^2 + 2a takes the closed forms unless ``general`` is set.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    a = None if general else family_a(d)
    if a is None:
        v = pell_core.verdict(d, N)
        sols = pell_core.solutions(d, N, count) if v.solvable else []
        return SolveReport(d, N, v, sols)
    return solve_family(a, N, count)


def solve_family(a: int, N: int, count: int = 1) -> SolveReport:
    d = _d(a)
    if N == 1:
        v = Verdict.found(*family_fundamental(a), source=THM_CF)
        sols = [family_nth_unit_lucas(a, n) for n in range(1, count + 1)]
    elif N == 4:
        v = Verdict.found(*family_four_fundamental(a), source=THM_FOUR)
        sols = [family_nth_four(a, n) for n in range(1, count + 1)]
    elif N == -1:
        v, sols = family_neg_one(a), []
    elif N == -4:
        v = family_neg_four(a)
        sols = pell_core.solutions(d, N, count) if v.solvable else []
    else:
        raise ValueError(f"N must be one of {pell_core.SUPPORTED_N}, got {N}")
    return SolveReport(d, N, v, sols, a)
