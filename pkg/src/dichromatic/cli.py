"""Command-line front end.

Reads a digraph from a small header+arc-list text format, computes the
coflow and chromatic polynomials by one or all methods, optionally
evaluates and cross-checks against the brute-force oracle, and prints
text or JSON.

Exit codes: 0 success / all checks agree, 1 parse error, 2 enumeration
budget exceeded, 3 disagreement (between methods or against the oracle).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from ._accel import KERNEL_BACKEND
from .coflow import METHOD_IDS, timed_polynomials
from .digraph import Digraph, weak_components
from .oracles import DEFAULT_STATE_BUDGET, BudgetExceededError, count_acyclic_colorings
from .polynomial import IntPolynomial

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_BUDGET_EXCEEDED = 2
EXIT_DISAGREEMENT = 3

# oracle cross-checks fall back to these when no --eval points are given
_DEFAULT_ORACLE_POINTS = (1, 2, 3)


class DigraphParseError(ValueError):
    def __init__(self, message: str, line_no: int) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class RunConfig:
    input_path: str
    method: str = "tc"  # a method id or "all"
    eval_points: list[int] = field(default_factory=list)
    json_output: bool = False
    oracle: bool = False
    budget: int = DEFAULT_STATE_BUDGET
    dichromatic_number: bool = False


def parse_digraph_text(text: str) -> Digraph:
    """Parse the input format: first significant line ``n <count>``,
    then one ``<tail> <head>`` arc per line, ``#`` comments, blank lines
    ignored. Arc ids follow file order."""
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise DigraphParseError(
                    f"expected header 'n <vertexCount>', got {line!r}", line_no
                )
            try:
                n = int(fields[1])
            except ValueError:
                raise DigraphParseError(f"bad vertex count {fields[1]!r}", line_no)
            if n < 0:
                raise DigraphParseError(f"negative vertex count {n}", line_no)
            continue
        if len(fields) != 2:
            raise DigraphParseError(f"expected '<tail> <head>', got {line!r}", line_no)
        try:
            tail, head = int(fields[0]), int(fields[1])
        except ValueError:
            raise DigraphParseError(f"non-integer arc endpoints {line!r}", line_no)
        if not (0 <= tail < n and 0 <= head < n):
            raise DigraphParseError(
                f"arc ({tail}, {head}) outside vertex range 0..{n - 1}", line_no
            )
        arcs.append((tail, head))
    if n is None:
        raise DigraphParseError("missing 'n <vertexCount>' header", 1)
    return Digraph(n, arcs)


def load_digraph(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_digraph_text(fh.read())


def _dichromatic_number(d: Digraph, chi: IntPolynomial) -> int | None:
    """Smallest k >= 1 with chi(k) > 0; None when chi is identically
    zero (a loop makes every coloring invalid)."""
    if chi.is_zero():
        return None
    k = 1
    while chi.evaluate(k) <= 0:
        k += 1
    return k


def run(config: RunConfig) -> tuple[dict, int]:
    """Execute one CLI run; returns (report, exit code).

    Parse and budget failures propagate as exceptions; disagreements are
    reported in-band with exit code 3.
    """
    d = load_digraph(config.input_path)
    methods = list(METHOD_IDS) if config.method == "all" else [config.method]

    report: dict = {
        "n": d.n,
        "m": d.m,
        "c": weak_components(d),
        "kernel_backend": KERNEL_BACKEND,
        "methods": {},
    }
    exit_code = EXIT_OK

    polys: dict[str, tuple[IntPolynomial, IntPolynomial]] = {}
    for method in methods:
        psi, chi, elapsed_ms = timed_polynomials(d, method)
        polys[method] = (psi, chi)
        report["methods"][method] = {
            "psi": psi.to_strings(),
            "chi": chi.to_strings(),
            "evals": {str(k): str(chi.evaluate(k)) for k in config.eval_points},
            "time_ms": round(elapsed_ms, 3),
        }

    if config.method == "all":
        baseline = polys[methods[0]][0]
        disagreeing = [m for m in methods[1:] if polys[m][0] != baseline]
        report["agreement"] = not disagreeing
        if disagreeing:
            exit_code = EXIT_DISAGREEMENT
            lines = [f"method disagreement on digraph n={d.n} arcs={list(d.arcs)}:"]
            for m in methods:
                lines.append(f"  psi[{m}] = {polys[m][0]}")
            report["disagreement_detail"] = "\n".join(lines)

    if config.oracle:
        chi = polys[methods[0]][1]
        points = sorted(set(config.eval_points)) or list(_DEFAULT_ORACLE_POINTS)
        checked: dict[str, str] = {}
        agrees = True
        for k in points:
            if k < 0:
                continue
            expected = count_acyclic_colorings(d, k, budget=config.budget)
            checked[str(k)] = str(expected)
            if chi.evaluate(k) != expected:
                agrees = False
        report["oracle"] = {"counts": checked, "agrees": agrees}
        if not agrees:
            exit_code = EXIT_DISAGREEMENT

    if config.dichromatic_number:
        report["dichromatic_number"] = _dichromatic_number(d, polys[methods[0]][1])

    return report, exit_code


def _render_text(report: dict) -> str:
    lines = [
        f"n={report['n']} m={report['m']} components={report['c']} "
        f"(kernels: {report['kernel_backend']})"
    ]
    for method, block in report["methods"].items():
        psi = IntPolynomial.from_strings(block["psi"])
        chi = IntPolynomial.from_strings(block["chi"])
        lines.append(f"[{method}] psi = {psi}")
        lines.append(f"[{method}] chi = {chi}   ({block['time_ms']} ms)")
        for k, value in block["evals"].items():
            lines.append(f"[{method}] chi({k}) = {value}")
    if "agreement" in report:
        lines.append(f"agreement: {'yes' if report['agreement'] else 'NO'}")
    if "oracle" in report:
        oracle = report["oracle"]
        lines.append(f"oracle agreement: {'yes' if oracle['agrees'] else 'NO'}")
        for k, value in oracle["counts"].items():
            lines.append(f"oracle acyclic colorings with {k} colors: {value}")
    if "dichromatic_number" in report:
        value = report["dichromatic_number"]
        lines.append(
            "dichromatic number: "
            + ("undefined (chi is zero; the digraph has a loop)" if value is None else str(value))
        )
    return "\n".join(lines)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dichromatic",
        description="Exact chromatic polynomial of a digraph "
        "(counts Neumann-Lara acyclic colorings).",
    )
    parser.add_argument("input", help="digraph file: 'n <count>' header, one "
                        "'<tail> <head>' arc per line, '#' comments")
    parser.add_argument("--method", choices=(*METHOD_IDS, "all"), default="tc",
                        help="formula to use; 'all' computes every method and "
                        "cross-compares (default: tc)")
    parser.add_argument("--eval", dest="eval_points", type=int, action="append",
                        default=[], metavar="K",
                        help="evaluate chi at K (repeatable)")
    parser.add_argument("--oracle", action="store_true",
                        help="cross-check evaluations against brute-force "
                        "coloring counts")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET,
                        metavar="STATES",
                        help="state budget for oracle enumeration "
                        f"(default: {DEFAULT_STATE_BUDGET})")
    parser.add_argument("--dichromatic-number", action="store_true",
                        help="report the smallest k with chi(k) > 0")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    config = RunConfig(
        input_path=args.input,
        method=args.method,
        eval_points=args.eval_points,
        json_output=args.json,
        oracle=args.oracle,
        budget=args.budget,
        dichromatic_number=args.dichromatic_number,
    )
    try:
        report, exit_code = run(config)
    except (DigraphParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXCEEDED

    if config.json_output:
        print(json.dumps(report, indent=2))
    else:
        print(_render_text(report))
    if exit_code == EXIT_DISAGREEMENT and "disagreement_detail" in report:
        print(report["disagreement_detail"], file=sys.stderr)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
