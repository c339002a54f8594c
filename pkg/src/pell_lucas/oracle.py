"""Exhaustive search for solutions of x^2 - d*y^2 = N.

Deliberately naive: every y up to the bound is tried and x is recovered
with an integer square root. Only ``isqrt`` is shared with the solvers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Union

from .cf_engine import isqrt
from .records import PellSolution, Reason, Verdict

DEFAULT_Y_MAX = 10_000


@dataclass(frozen=True)
class SearchBound:
    y_max: int = DEFAULT_Y_MAX

    def __post_init__(self) -> None:
        if self.y_max < 1:
            raise ValueError(f"y_max must be at least 1, got {self.y_max}")


BoundLike = Union[SearchBound, int]


def _bound(bound: BoundLike) -> SearchBound:
    return bound if isinstance(bound, SearchBound) else SearchBound(bound)


def _scan(d: int, N: int, lo: int, hi: int, first_only: bool = False) -> list[PellSolution]:
    found = []
    for y in range(lo, hi + 1):
        t = N + d * y * y
        if t < 1:
            continue
        x = isqrt(t)
        if x * x == t:
            found.append(PellSolution(x, y))
            if first_only:
                break
    return found


def _chunks(y_max: int, parts: int) -> list[tuple[int, int]]:
    step = -(-y_max // parts)
    return [(lo, min(lo + step - 1, y_max)) for lo in range(1, y_max + 1, step)]


def brute_solve(d: int, N: int, bound: BoundLike = DEFAULT_Y_MAX, workers: int = 1) -> list[PellSolution]:
    """All (x, y) with 1 <= y <= y_max, x >= 1 and x^2 - d*y^2 = N, ascending in y."""
    y_max = _bound(bound).y_max
    if workers <= 1 or y_max < 4 * workers:
        return _scan(d, N, 1, y_max)
    ranges = _chunks(y_max, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(partial(_scan, d, N), *zip(*ranges))
        return [sol for part in parts for sol in part]


def first_solution(d: int, N: int, bound: BoundLike = DEFAULT_Y_MAX) -> Verdict:
    y_max = _bound(bound).y_max
    hit = _scan(d, N, 1, y_max, first_only=True)
    if hit:
        return Verdict.found(*hit[0], bound=y_max)
    return Verdict.none(Reason.SEARCH_EXHAUSTED, bound=y_max)
