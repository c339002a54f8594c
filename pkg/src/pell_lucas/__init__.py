"""Exact continued fractions, Pell equations and Lucas sequences.

The package solves x^2 - d*y^2 = N for N in {1, -1, 4, -4} with plain
Python integers, and carries a closed-form path for d = a^2 + 2a.
"""

from .cf_engine import (
    CFExpansion,
    ConvergentPair,
    cf_expand_sqrt,
    convergents,
    evaluate_cf,
    isqrt,
)
from .errors import (
    BadUnit,
    InvalidParams,
    NotSolvable,
    OutOfDomain,
    PellError,
    PerfectSquare,
)
from .lucas_seq import SequenceParams, binet_pair, lucas_pair
from .pell_core import (
    compose,
    fundamental,
    fundamental_neg_one,
    fundamental_unit,
    iterate_solutions,
    solve_four,
    solve_neg_four,
    verdict,
    verify,
)
from .records import PellSolution, Reason, Status, Verdict

__all__ = [
    "BadUnit",
    "CFExpansion",
    "ConvergentPair",
    "InvalidParams",
    "NotSolvable",
    "OutOfDomain",
    "PellError",
    "PellSolution",
    "PerfectSquare",
    "Reason",
    "SequenceParams",
    "Status",
    "Verdict",
    "binet_pair",
    "cf_expand_sqrt",
    "compose",
    "convergents",
    "evaluate_cf",
    "fundamental",
    "fundamental_neg_one",
    "fundamental_unit",
    "isqrt",
    "iterate_solutions",
    "lucas_pair",
    "solve_four",
    "solve_neg_four",
    "verdict",
    "verify",
]
