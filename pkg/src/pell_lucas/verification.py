"""Per-a checks of the a^2 + 2a closed forms against the general solver and the oracle."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

from . import pell_core, special_family as fam
from .cf_engine import cf_expand_sqrt
from .oracle import brute_solve, first_solution

GROUPS = (
    "Theorem 6(i)",
    "Theorem 6(ii)",
    "Theorem 6(iii)",
    "Theorem 7",
    "Theorem 8",
    "Theorem 9",
    "Theorem 10",
    "Theorem 11",
    "oracle enumeration",
)


@dataclass
class MemberResult:
    a: int
    passed: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, group: str, label: str, fn: Callable[[], bool]) -> None:
        try:
            ok = bool(fn())
            detail = ""
        except Exception as exc:  # a crash counts as a failed check
            ok, detail = False, f": {type(exc).__name__}: {exc}"
        if ok:
            self.passed[group] += 1
        else:
            self.failures.append(f"{group}: a={self.a} {label}{detail}")


def check_family_member(a: int, n_max: int, y_max: int) -> MemberResult:
    d = fam.FamilyParam(a).d
    r = MemberResult(a)
    ns = range(1, n_max + 1)

    def cf_ok():
        cf = cf_expand_sqrt(d)
        return cf == fam.family_cf(a) and cf.m == 2

    r.check("Theorem 6(i)", "cf", cf_ok)

    def fundamental_ok():
        sol = fam.family_fundamental(a)
        brute = first_solution(d, 1, y_max)
        return sol == pell_core.fundamental_unit(d) and brute.fundamental == sol

    r.check("Theorem 6(ii)", "fundamental", fundamental_ok)

    for n in ns:
        r.check(
            "Theorem 6(iii)",
            f"n={n}",
            lambda: fam.family_nth_unit(a, n)
            == fam.family_nth_unit_cf(a, n)
            == pell_core.iterate_solutions(d, 1, n),
        )
        r.check(
            "Theorem 7",
            f"n={n}",
            lambda: fam.family_nth_unit_lucas(a, n) == fam.family_nth_unit(a, n)
            and pell_core.verify(d, 1, *fam.family_nth_unit_lucas(a, n)),
        )
        r.check(
            "Theorem 10",
            f"n={n}",
            lambda: fam.family_nth_four(a, n) == pell_core.iterate_solutions(d, 4, n)
            and pell_core.verify(d, 4, *fam.family_nth_four(a, n)),
        )

    r.check(
        "Theorem 8",
        "N=-1",
        lambda: not fam.family_neg_one(a).solvable
        and not pell_core.fundamental_neg_one(d).solvable
        and not brute_solve(d, -1, y_max),
    )

    r.check(
        "Theorem 9",
        "N=4 fundamental",
        lambda: fam.family_four_fundamental(a)
        == pell_core.solve_four(d)
        == first_solution(d, 4, y_max).fundamental,
    )

    if a > 2:
        r.check(
            "Theorem 11",
            "N=-4",
            lambda: not fam.family_neg_four(a).solvable
            and not pell_core.solve_neg_four(d).solvable
            and not brute_solve(d, -4, y_max),
        )
    else:
        general = pell_core.solve_neg_four(d)
        brute = first_solution(d, -4, y_max)
        status = "solvable" if general.solvable else "unsolvable"
        r.notes.append(f"a={a}: Thm 11 hypothesis excluded; general solver: {status}")
        r.check(
            "Theorem 11",
            "N=-4 general path",
            lambda: fam.family_neg_four(a).status == general.status
            and general.fundamental == brute.fundamental,
        )

    for N in (1, 4):
        def enum_ok(N=N):
            found = brute_solve(d, N, y_max)
            expected = []
            n = 1
            while True:
                sol = pell_core.iterate_solutions(d, N, n)
                if sol.y > y_max:
                    break
                expected.append(sol)
                n += 1
            return found == expected

        r.check("oracle enumeration", f"N={N}", enum_ok)
    return r


@dataclass
class SweepReport:
    passed: Counter
    failures: list[str]
    notes: list[str]

    @classmethod
    def merge(cls, members: list[MemberResult]) -> "SweepReport":
        members = sorted(members, key=lambda m: m.a)
        passed: Counter = Counter()
        failures: list[str] = []
        notes: list[str] = []
        for m in members:
            passed.update(m.passed)
            failures.extend(m.failures)
            notes.extend(m.notes)
        return cls(passed, failures, notes)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_by_group(self) -> Counter:
        return Counter(f.split(":", 1)[0] for f in self.failures)

    def as_dict(self) -> dict[str, Any]:
        failed = self.failed_by_group()
        return {
            "ok": self.ok,
            "checks": [
                {"group": g, "passed": self.passed[g], "failed": failed[g]}
                for g in GROUPS
                if self.passed[g] or failed[g]
            ],
            "failures": list(self.failures),
            "notes": list(self.notes),
        }

    def lines(self) -> list[str]:
        failed = self.failed_by_group()
        out = []
        for g in GROUPS:
            total = self.passed[g] + failed[g]
            if total:
                out.append(f"{g:<20} {self.passed[g]}/{total} pass")
        out += [f"note: {n}" for n in self.notes]
        out += [f"FAIL {f}" for f in self.failures]
        out.append("all checks passed" if self.ok else f"{len(self.failures)} check(s) failed")
        return out
