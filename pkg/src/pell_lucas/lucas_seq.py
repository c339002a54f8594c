"""Generalized Fibonacci U_n(k, s) and Lucas V_n(k, s) numbers.

U_0 = 0, U_1 = 1, V_0 = 2, V_1 = k and both obey X_{n+1} = k*X_n + s*X_{n-1}.
``lucas_pair`` evaluates the recurrence (with index doubling for large n);
``binet_pair`` powers alpha = (k + sqrt(D))/2 exactly and serves as an
independent check of it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams

# below this index the plain recurrence is cheaper than doubling
_DOUBLING_THRESHOLD = 64


@dataclass(frozen=True)
class SequenceParams:
    k: int
    s: int

    def __post_init__(self) -> None:
        if self.k == 0 or self.s == 0:
            raise InvalidParams(f"k and s must be nonzero, got k={self.k}, s={self.s}")
        if self.discriminant <= 0:
            raise InvalidParams(f"k^2 + 4s must be positive, got {self.discriminant}")

    @property
    def discriminant(self) -> int:
        return self.k * self.k + 4 * self.s

    @property
    def alpha(self) -> "HalfQuad":
        return HalfQuad(self.k, 1, self.discriminant)

    @property
    def beta(self) -> "HalfQuad":
        return HalfQuad(self.k, -1, self.discriminant)


def _params(params: SequenceParams | tuple[int, int]) -> SequenceParams:
    if isinstance(params, SequenceParams):
        return params
    return SequenceParams(*params)


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")


def _recurrence(k: int, s: int, n: int) -> tuple[int, int]:
    u0, u1 = 0, 1
    v0, v1 = 2, k
    for _ in range(n):
        u0, u1 = u1, k * u1 + s * u0
        v0, v1 = v1, k * v1 + s * v0
    return u0, v0


def _doubling(k: int, s: int, n: int) -> tuple[int, int]:
    # U_2n = U_n V_n, V_2n = V_n^2 - 2 q^n with q = -s;
    # U_{n+1} = (k U_n + V_n)/2, V_{n+1} = (D U_n + k V_n)/2
    D = k * k + 4 * s
    q = -s
    u, v, qn = 0, 2, 1
    for bit in bin(n)[2:]:
        u, v, qn = u * v, v * v - 2 * qn, qn * qn
        if bit == "1":
            u, v, qn = (k * u + v) // 2, (D * u + k * v) // 2, qn * q
    return u, v


def lucas_pair(params: SequenceParams | tuple[int, int], n: int) -> tuple[int, int]:
    """(U_n, V_n) for the given (k, s)."""
    p = _params(params)
    _check_index(n)
    if n < _DOUBLING_THRESHOLD:
        return _recurrence(p.k, p.s, n)
    return _doubling(p.k, p.s, n)


@dataclass(frozen=True)
class HalfQuad:
    """The number (u + v*sqrt(D))/2 with u = D*v (mod 2).

    That parity condition is what keeps products of such numbers in the
    same form (D = k^2 (mod 4), so it reads u = k*v). sqrt(D) stays
    symbolic, so this is exact even when D is a square.
    """

    u: int
    v: int
    D: int

    def __post_init__(self) -> None:
        if (self.u - self.D * self.v) % 2:
            raise ValueError("u must have the parity of D*v")

    def __add__(self, other: "HalfQuad") -> "HalfQuad":
        return HalfQuad(self.u + other.u, self.v + other.v, self.D)

    def __sub__(self, other: "HalfQuad") -> "HalfQuad":
        return HalfQuad(self.u - other.u, self.v - other.v, self.D)

    def __mul__(self, other: "HalfQuad") -> "HalfQuad":
        u = self.u * other.u + self.D * self.v * other.v
        v = self.u * other.v + self.v * other.u
        return HalfQuad(u // 2, v // 2, self.D)

    def __pow__(self, n: int) -> "HalfQuad":
        result, base = HalfQuad(2, 0, self.D), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def binet_pair(params: SequenceParams | tuple[int, int], n: int) -> tuple[int, int]:
    """(U_n, V_n) from (alpha^n - beta^n)/(alpha - beta) and alpha^n + beta^n."""
    p = _params(params)
    _check_index(n)
    a_n, b_n = p.alpha ** n, p.beta ** n
    diff, gap = a_n - b_n, p.alpha - p.beta
    total = a_n + b_n
    # diff and gap are pure multiples of sqrt(D); total has no sqrt(D) part
    assert diff.u == 0 and gap.u == 0 and total.v == 0
    return diff.v // gap.v, total.u // 2
