"""Command line interface: ``pell-lucas {cf,solve,family,verify-theorems}``.

Exit codes: 0 ok, 2 perfect square, 3 out of domain, 4 unsolvable,
5 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Optional, Sequence

from . import special_family as fam
from .cf_engine import cf_expand_sqrt
from .errors import OutOfDomain, PerfectSquare
from .oracle import DEFAULT_Y_MAX
from .records import PellSolution
from .verification import SweepReport, check_family_member

EXIT_OK = 0
EXIT_PERFECT_SQUARE = 2
EXIT_OUT_OF_DOMAIN = 3
EXIT_UNSOLVABLE = 4
EXIT_CHECK_FAILED = 5


def dumps(record: dict[str, Any]) -> str:
    # insertion order is the stable order; big integers are already strings
    return json.dumps(record, separators=(",", ":"), ensure_ascii=True)


def _solution(sol: PellSolution) -> dict[str, str]:
    return {"x": str(sol.x), "y": str(sol.y)}


def _fmt(sol: PellSolution) -> str:
    return f"({sol.x},{sol.y})"


def _equation(d: int, N: int) -> str:
    return f"x^2 - {d}y^2 = {N}"


class CommandError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _guard(fn, *args):
    try:
        return fn(*args)
    except PerfectSquare as exc:
        raise CommandError(EXIT_PERFECT_SQUARE, "perfect_square", f"perfect square: {exc}") from exc
    except OutOfDomain as exc:
        raise CommandError(EXIT_OUT_OF_DOMAIN, "out_of_domain", f"out of domain: {exc}") from exc


# each cmd_* returns (exit code, record, text lines)


def cmd_cf(d: int):
    cf = _guard(cf_expand_sqrt, d)
    result = {"a0": cf.a0, "period": list(cf.period), "m": cf.m}
    return EXIT_OK, {"command": "cf", "inputs": {"d": str(d)}, "result": result}, [f"{cf} period={cf.m}"]


def _report_payload(report: fam.SolveReport) -> dict[str, Any]:
    v = report.verdict
    return {
        "status": v.status.value,
        "fundamental": _solution(v.fundamental) if v.fundamental else None,
        "reason": v.reason.value if v.reason else None,
        "source": v.source,
        "family_a": None if report.a is None else str(report.a),
        "solutions": [_solution(s) for s in report.solutions],
    }


def _report_lines(report: fam.SolveReport) -> list[str]:
    v = report.verdict
    head = f"{_equation(report.d, report.N)}: {v.status.value}"
    notes = [x for x in (v.source, v.reason.value if v.reason else None) if x]
    if report.a is not None:
        notes.insert(0, f"a={report.a}")
    if notes:
        head += f" ({'; '.join(notes)})"
    return [head, *map(_fmt, report.solutions)]


def _finish(command: str, inputs: dict[str, str], report: fam.SolveReport):
    code = EXIT_OK if report.verdict.solvable else EXIT_UNSOLVABLE
    record = {"command": command, "inputs": inputs, "result": _report_payload(report)}
    return code, record, _report_lines(report)


def cmd_solve(d: int, N: int, count: int = 1, general: bool = False):
    report = _guard(fam.solve, d, N, count, general)
    inputs = {"d": str(d), "N": str(N), "count": str(count)}
    return _finish("solve", inputs, report)


def cmd_family(a: int, N: int, count: int = 1):
    report = _guard(fam.solve_family, a, N, count)
    inputs = {"a": str(a), "N": str(N), "count": str(count)}
    return _finish("family", inputs, report)


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if start < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return range(start, stop + 1)


def cmd_verify_theorems(a_range: range, n_max: int, y_max: int = DEFAULT_Y_MAX, jobs: int = 1):
    args = [(a, n_max, y_max) for a in a_range]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            members = list(pool.map(check_family_member, *zip(*args)))
    else:
        members = [check_family_member(*x) for x in args]
    report = SweepReport.merge(members)
    inputs = {"a": f"{a_range.start}..{a_range.stop - 1}", "n": str(n_max), "y_max": str(y_max)}
    record = {"command": "verify-theorems", "inputs": inputs, "result": report.as_dict()}
    code = EXIT_OK if report.ok else EXIT_CHECK_FAILED
    lines = [f"verify-theorems a={inputs['a']} n={n_max} y_max={y_max}", *report.lines()]
    return code, record, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pell-lucas", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", parents=[common], help="continued fraction of sqrt(d)")
    p.add_argument("d", type=int)

    p = sub.add_parser("solve", parents=[common], help="solve x^2 - d*y^2 = N")
    p.add_argument("d", type=int)
    p.add_argument("N", type=int, choices=(1, -1, 4, -4))
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--general", action="store_true", help="skip the a^2 + 2a closed forms")

    p = sub.add_parser("family", parents=[common], help="closed forms for d = a^2 + 2a")
    p.add_argument("a", type=int)
    p.add_argument("N", type=int, choices=(1, -1, 4, -4))
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("verify-theorems", parents=[common], help="sweep closed forms against solver and oracle")
    p.add_argument("--a", dest="a_range", type=parse_range, default=parse_range("1..50"))
    p.add_argument("--n", dest="n_max", type=int, default=10)
    p.add_argument("--y-max", type=int, default=DEFAULT_Y_MAX)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str]:
    """Run the CLI and return (exit code, stdout, stderr) without printing."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        if args.command == "cf":
            code, record, lines = cmd_cf(args.d)
        elif args.command == "solve":
            code, record, lines = cmd_solve(args.d, args.N, args.count, args.general)
        elif args.command == "family":
            code, record, lines = cmd_family(args.a, args.N, args.count)
        else:
            code, record, lines = cmd_verify_theorems(args.a_range, args.n_max, args.y_max, args.jobs)
    except CommandError as exc:
        inputs = {k: str(v) for k, v in vars(args).items() if k not in ("command", "format")}
        if args.format == "json":
            record = {"command": args.command, "inputs": inputs, "error": {"code": exc.kind, "message": str(exc)}}
            return exc.code, dumps(record) + "\n", ""
        return exc.code, "", f"error: {exc}\n"
    if args.format == "json":
        return code, dumps(record) + "\n", ""
    return code, "\n".join(lines) + "\n", ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
