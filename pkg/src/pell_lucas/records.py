"""Result types shared by the solvers and the brute-force oracle."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional


class PellSolution(NamedTuple):
    x: int
    y: int


class Status(enum.Enum):
    SOLVABLE = "solvable"
    UNSOLVABLE = "unsolvable"


class Reason(enum.Enum):
    EVEN_PERIOD = "even_period"
    MODULAR_OBSTRUCTION = "modular_obstruction"
    SEARCH_EXHAUSTED = "search_exhausted"
    REDUCTION = "reduction"


@dataclass(frozen=True)
class Verdict:
    """Outcome of deciding whether x^2 - d*y^2 = N has a positive solution.

    ``reason`` is mandatory for unsolvable verdicts; on solvable ones it
    optionally records how the fundamental solution was reached.
    ``bound`` is the y limit of an exhausted search, when one was run.
    """

    status: Status
    fundamental: Optional[PellSolution] = None
    reason: Optional[Reason] = None
    source: Optional[str] = None
    bound: Optional[int] = None

    def __post_init__(self) -> None:
        if self.status is Status.SOLVABLE and self.fundamental is None:
            raise ValueError("solvable verdict needs a fundamental solution")
        if self.status is Status.UNSOLVABLE:
            if self.fundamental is not None:
                raise ValueError("unsolvable verdict cannot carry a solution")
            if self.reason is None:
                raise ValueError("unsolvable verdict needs a reason")

    @property
    def solvable(self) -> bool:
        return self.status is Status.SOLVABLE

    @classmethod
    def found(cls, x: int, y: int, **kw) -> "Verdict":
        return cls(Status.SOLVABLE, PellSolution(x, y), **kw)

    @classmethod
    def none(cls, reason: Reason, **kw) -> "Verdict":
        return cls(Status.UNSOLVABLE, None, reason, **kw)
