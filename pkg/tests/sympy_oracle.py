"""Minimal positive Pell solutions computed with sympy, for cross-checks only."""

from sympy.ntheory.continued_fraction import continued_fraction_periodic
from sympy.solvers.diophantine.diophantine import diop_DN


def sympy_cf(d):
    a0, period = continued_fraction_periodic(0, 1, d)
    return int(a0), tuple(int(t) for t in period)


def sympy_minimal(d, N):
    """Minimal positive solution of x^2 - d*y^2 = N, or None.

    diop_DN returns one representative per solution class; walking each
    one a couple of unit steps in both directions reaches the smallest
    positive member of its class.
    """
    ux, uy = (int(t) for t in diop_DN(d, 1)[0])
    best = None
    for x, y in diop_DN(d, N):
        x, y = int(x), int(y)
        for sx, sy in ((x, y), (-x, y), (x, -y), (-x, -y)):
            for step in (uy, -uy):
                X, Y = sx, sy
                for _ in range(3):
                    if X > 0 and Y > 0 and (best is None or X < best[0]):
                        best = (X, Y)
                    X, Y = X * ux + d * Y * step, X * step + Y * ux
    return best
