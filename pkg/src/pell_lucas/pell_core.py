"""Fundamental and n-th solutions of x^2 - d*y^2 = N for N in {1, -1, 4, -4}.

Elements x + y*sqrt(d) are handled as integer pairs (x, y). Nothing is
cached; every call recomputes from the continued fraction of sqrt(d).
"""

from __future__ import annotations

from typing import Literal, Union

from .cf_engine import cf_expand_sqrt, convergents, is_square, isqrt
from .errors import BadUnit, NotSolvable
from .records import PellSolution, Reason, Verdict

SUPPORTED_N = (1, -1, 4, -4)

Pair = tuple[int, int]


def verify(d: int, N: int, x: int, y: int) -> bool:
    return x * x - d * y * y == N


def qmul(u: Pair, v: Pair, d: int) -> Pair:
    """(x1 + y1*sqrt(d)) * (x2 + y2*sqrt(d))."""
    return u[0] * v[0] + d * u[1] * v[1], u[0] * v[1] + v[0] * u[1]


def qpow(base: Pair, n: int, d: int) -> Pair:
    if n < 0:
        raise ValueError("negative exponent")
    result: Pair = (1, 0)
    while n:
        if n & 1:
            result = qmul(result, base, d)
        n >>= 1
        if n:
            base = qmul(base, base, d)
    return result


def fundamental_unit(d: int) -> PellSolution:
    """Minimal positive solution of x^2 - d*y^2 = 1.

    It is the convergent (p_{m-1}, q_{m-1}) when the period length m is
    even and (p_{2m-1}, q_{2m-1}) when m is odd.
    """
    cf = cf_expand_sqrt(d)
    k = cf.m - 1 if cf.m % 2 == 0 else 2 * cf.m - 1
    p, q, _ = convergents(cf, k + 1)[k]
    return PellSolution(p, q)


def fundamental_neg_one(d: int) -> Verdict:
    cf = cf_expand_sqrt(d)
    if cf.m % 2 == 0:
        return Verdict.none(Reason.EVEN_PERIOD)
    p, q, _ = convergents(cf, cf.m)[-1]
    return Verdict.found(p, q)


def _icbrt(n: int) -> int:
    """Largest r with r**3 <= n, for n >= 0."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def _odd_four_solution(d: int, x1: int) -> PellSolution | None:
    """Odd solution (u, v) of u^2 - d*v^2 = 4 with ((u + v*sqrt(d))/2)^3 = x1 + y1*sqrt(d).

    For d = 1 (mod 4) the minimal solution of the +4 equation is either
    (2*x1, 2*y1) or such a cube root. A cube root (u + v*sqrt(d))/2 of
    norm 1 has trace u with u^3 - 3u = 2*x1, which pins u down exactly.
    """
    c = _icbrt(2 * x1)
    for u in (c, c + 1, c + 2):
        if u * u * u - 3 * u != 2 * x1 or u % 2 == 0:
            continue
        v2, rem = divmod(u * u - 4, d)
        if rem == 0 and is_square(v2):
            return PellSolution(u, isqrt(v2))
    return None


def solve_four(d: int) -> PellSolution:
    """Minimal positive solution of x^2 - d*y^2 = 4."""
    cf_expand_sqrt(d)
    if d % 4 == 0:
        x1, y1 = fundamental_unit(d // 4)
        return PellSolution(2 * x1, y1)
    x1, y1 = fundamental_unit(d)
    if d % 4 == 1:
        odd = _odd_four_solution(d, x1)
        if odd is not None:
            assert odd.x <= 2 * x1
            return odd
    return PellSolution(2 * x1, 2 * y1)


def solve_neg_four(d: int) -> Verdict:
    """Decide x^2 - d*y^2 = -4 and return its minimal positive solution.

    For d = 0, 2, 3 (mod 4) every solution has x even and the equation
    reduces to a -1 equation. For d = 1 (mod 4) a solution exists iff the
    minimal +4 solution (u, v) is a square in the half-integer ring,
    i.e. u - 2 = s^2 and u + 2 = d*t^2; then (s, t) is minimal.
    """
    cf_expand_sqrt(d)
    r = d % 4
    if r in (2, 3):
        v = fundamental_neg_one(d)
        if not v.solvable:
            # d = 3 (mod 4) has a prime factor p = 3 (mod 4), so x^2 = -4 (mod p) fails
            reason = Reason.MODULAR_OBSTRUCTION if r == 3 else Reason.REDUCTION
            return Verdict.none(reason)
        x, y = v.fundamental
        return Verdict.found(2 * x, 2 * y, reason=Reason.REDUCTION)
    if r == 0:
        v = fundamental_neg_one(d // 4)
        if not v.solvable:
            return Verdict.none(Reason.REDUCTION)
        x, y = v.fundamental
        return Verdict.found(2 * x, y, reason=Reason.REDUCTION)

    u, _ = solve_four(d)
    if is_square(u - 2):
        t2, rem = divmod(u + 2, d)
        if rem == 0 and is_square(t2):
            return Verdict.found(isqrt(u - 2), isqrt(t2), reason=Reason.REDUCTION)
    return Verdict.none(Reason.REDUCTION)


def verdict(d: int, N: int) -> Verdict:
    if N == 1:
        x, y = fundamental_unit(d)
        return Verdict.found(x, y)
    if N == 4:
        x, y = solve_four(d)
        return Verdict.found(x, y)
    if N == -1:
        return fundamental_neg_one(d)
    if N == -4:
        return solve_neg_four(d)
    raise ValueError(f"N must be one of {SUPPORTED_N}, got {N}")


def fundamental(d: int, N: int) -> PellSolution:
    v = verdict(d, N)
    if not v.solvable:
        raise NotSolvable(f"x^2 - {d}y^2 = {N} has no positive solution ({v.reason.value})")
    return v.fundamental


def _power_and_divisor(N: int, n: int) -> tuple[int, int]:
    # exponent applied to the fundamental, and the power of two it is divided by
    if N == 1:
        return n, 1
    if N == -1:
        return 2 * n - 1, 1
    if N == 4:
        return n, 1 << (n - 1)
    return 2 * n - 1, 1 << (2 * n - 2)


def iterate_solutions(d: int, N: int, n: int) -> PellSolution:
    """The n-th positive solution (n >= 1) in increasing order.

    N = 1 uses (x1 + y1*sqrt(d))**n, N = -1 the odd powers 2n-1,
    N = 4 divides the n-th power by 2**(n-1) and N = -4 divides the
    (2n-1)-th power by 2**(2n-2). Division must be exact.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    base = fundamental(d, N)
    e, div = _power_and_divisor(N, n)
    x, y = qpow(base, e, d)
    if x % div or y % div:
        raise ArithmeticError(f"({x}, {y}) not divisible by {div}")
    return PellSolution(x // div, y // div)


def solutions(d: int, N: int, count: int) -> list[PellSolution]:
    return [iterate_solutions(d, N, n) for n in range(1, count + 1)]


def compose(
    g: int,
    h: int,
    r: int,
    s: int,
    d: int,
    sign: Union[Literal["+", "-"], int] = "+",
) -> PellSolution:
    """Combine a solution (g, h) of x^2 - d*y^2 = N with a unit (r, s).

    Returns (g*r + d*h*s, g*s + h*r) for sign '+' and
    (g*r - d*h*s, g*s - h*r) for '-', with signs dropped from the result.
    """
    if r * r - d * s * s != 1:
        raise BadUnit(f"({r}, {s}) does not satisfy x^2 - {d}y^2 = 1")
    if sign in ("+", 1):
        x, y = g * r + d * h * s, g * s + h * r
    elif sign in ("-", -1):
        x, y = g * r - d * h * s, g * s - h * r
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return PellSolution(abs(x), abs(y))
