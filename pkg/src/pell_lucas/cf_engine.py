"""Periodic continued fractions of square roots, convergents, evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, cycle, islice
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import OutOfDomain, PerfectSquare

# Finite continued fractions evaluate to a lowest-terms Fraction.
Rational = Fraction


def isqrt(n: int) -> int:
    """Largest r with r*r <= n, by integer Newton iteration from above."""
    if n < 0:
        raise ValueError("isqrt() argument must be nonnegative")
    if n < 2:
        return n
    # 2**ceil(bits/2) >= sqrt(n), so the iterates decrease monotonically
    x = 1 << ((n.bit_length() + 1) >> 1)
    while True:
        y = (x + n // x) >> 1
        if y >= x:
            return x
        x = y


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class CFExpansion:
    """sqrt(d) = [a0; period, period, ...] with a minimal period."""

    d: int
    a0: int
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(t < 1 for t in self.period):
            raise ValueError("period terms must be positive")
        if not self.a0 * self.a0 < self.d < (self.a0 + 1) ** 2:
            raise ValueError(f"a0={self.a0} is not floor(sqrt({self.d}))")
        if self.period[-1] != 2 * self.a0:
            raise ValueError("period must end with 2*a0")

    @property
    def m(self) -> int:
        return len(self.period)

    def terms(self) -> Iterator[int]:
        """Partial quotients a0, a1, a2, ... without end."""
        return chain((self.a0,), cycle(self.period))

    def term(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        return self.a0 if k == 0 else self.period[(k - 1) % self.m]

    def __str__(self) -> str:
        return f"[{self.a0}; ({','.join(map(str, self.period))})]"


class ConvergentPair(NamedTuple):
    p: int
    q: int
    index: int


SEEDS = (ConvergentPair(0, 1, -2), ConvergentPair(1, 0, -1))


def cf_expand_sqrt(d: int) -> CFExpansion:
    """Expand sqrt(d) with the integer (P, Q) recurrence.

    Starting from P0 = 0, Q0 = 1 each step takes a = (a0 + P) // Q,
    P' = a*Q - P, Q' = (d - P'^2) // Q. The period closes at the first
    state that was already visited.
    """
    if d <= 1:
        raise OutOfDomain(f"d must be at least 2, got {d}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise PerfectSquare(f"{d} is a perfect square")

    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    P, Q = 0, 1
    while (P, Q) not in seen:
        seen[P, Q] = len(quotients)
        a = (a0 + P) // Q
        quotients.append(a)
        P = a * Q - P
        Q = (d - P * P) // Q
    start = seen[P, Q]
    # sqrt(d) is purely periodic after its first term
    assert start == 1, (d, start)
    return CFExpansion(d, a0, tuple(quotients[start:]))


def iter_convergents(terms: Iterable[int]) -> Iterator[ConvergentPair]:
    p_prev, p = SEEDS[0].p, SEEDS[1].p
    q_prev, q = SEEDS[0].q, SEEDS[1].q
    for k, a in enumerate(terms):
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield ConvergentPair(p, q, k)


def convergents(cf: CFExpansion, count: int) -> list[ConvergentPair]:
    """The first ``count`` convergents p_k/q_k, k = 0 .. count-1."""
    if count < 1:
        raise ValueError("count must be positive")
    return list(islice(iter_convergents(cf.terms()), count))


def evaluate_cf(terms: Sequence[int]) -> Rational:
    """Exact value of the finite continued fraction [t0; t1, ..., tn]."""
    if not terms:
        raise ValueError("need at least one term")
    if terms[0] < 0:
        raise ValueError("leading term must be nonnegative")
    if any(t < 1 for t in terms[1:]):
        raise ValueError("terms after the first must be positive")
    *_, last = iter_convergents(terms)
    return Fraction(last.p, last.q)
