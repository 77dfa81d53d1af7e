"""Command-line front door: every library capability behind one binary.

Exit status is 0 on success, 1 when a verification report contains failed
checks (or a benchmark's methods disagree), and 2 on usage errors. Note that
``mksum audit`` exits 1 in a healthy installation: its job is to flag the
known misprints in the published example formulas, and those flags are
failed checks by definition.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import run_bench
from .closed_forms import (
    InternalInconsistencyError,
    mk_sum_parks_wills,
    mk_sum_stirling,
    sum_formula,
)
from .kbonacci import kbonacci_sequence, kbonacci_term, prefix_sum_oracle
from .pyramid import RENDER_FORMATS, build_pyramid, render_pyramid
from .stirling import stirling_row, stirling_signed, stirling_unsigned
from .verify import (
    audit_published_formulas,
    bound_equivalence_check,
    cross_check,
    lemma_sweep,
    printed_lemma_probe,
)

__all__ = ["main", "build_parser"]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _any_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")


_SUM_METHODS = {
    "oracle": lambda k, m: prefix_sum_oracle(k, m * k),
    "parks-wills": lambda k, m: mk_sum_parks_wills(k, m),
    "stirling": mk_sum_stirling,
}


def _cmd_term(args: argparse.Namespace) -> int:
    value = kbonacci_term(args.k, args.n)
    if args.format == "json":
        print(json.dumps({"k": args.k, "n": args.n, "value": value}))
    else:
        print(value)
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    seq = kbonacci_sequence(args.k, args.count)
    if args.format == "json":
        print(json.dumps({"k": args.k, "count": args.count, "terms": list(seq.terms)}))
    elif args.format == "csv":
        lines = ["n,term"] + [f"{n},{t}" for n, t in enumerate(seq.terms)]
        print("\n".join(lines))
    else:
        print(" ".join(str(t) for t in seq.terms))
    return 0


def _cmd_sum(args: argparse.Namespace) -> int:
    value = _SUM_METHODS[args.method](args.k, args.m)
    if args.format == "json":
        print(
            json.dumps(
                {"k": args.k, "m": args.m, "method": args.method, "value": value}
            )
        )
    else:
        print(value)
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    formula = sum_formula(args.m)
    if args.format == "json":
        blocks = [
            {
                "i": i,
                "k_multiplier": formula.m - i + 1,
                "coefficients_descending": [
                    str(poly.coefficient(p)) for p in range(poly.degree, -1, -1)
                ],
            }
            for i, poly in formula.blocks
        ]
        print(json.dumps({"m": formula.m, "blocks": blocks}))
    elif args.format == "latex":
        parts = []
        for i, poly in formula.blocks:
            base = 1 << (formula.m - i + 1)
            parts.append(f"({poly.format_latex()}){base}^{{k}}")
        print(" + ".join(parts))
    else:
        lines = []
        for i, poly in formula.blocks:
            exp = formula.m - i + 1
            exp_str = "k" if exp == 1 else f"{exp}k"
            lines.append(f"({poly.format_text()}) * 2^({exp_str})")
        print("\n".join(lines))
    return 0


def _cmd_stirling(args: argparse.Namespace) -> int:
    kind = "signed" if args.signed else "unsigned"
    if args.j is None:
        if args.n == 0:
            values = [1]
        elif args.signed:
            values = [stirling_signed(args.n, j) for j in range(1, args.n + 1)]
        else:
            values = stirling_row(args.n)
        if args.format == "json":
            print(json.dumps({"n": args.n, "kind": kind, "row": values}))
        elif args.format == "csv":
            start = 0 if args.n == 0 else 1
            lines = ["n,j,value"] + [
                f"{args.n},{j},{v}" for j, v in enumerate(values, start=start)
            ]
            print("\n".join(lines))
        else:
            print(" ".join(str(v) for v in values))
    else:
        value = (
            stirling_signed(args.n, args.j)
            if args.signed
            else stirling_unsigned(args.n, args.j)
        )
        if args.format == "json":
            print(json.dumps({"n": args.n, "j": args.j, "kind": kind, "value": value}))
        elif args.format == "csv":
            print("n,j,value\n" + f"{args.n},{args.j},{value}")
        else:
            print(value)
    return 0


def _cmd_pyramid(args: argparse.Namespace) -> int:
    print(render_pyramid(build_pyramid(args.m), args.format))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = cross_check(args.k_max, args.m_max).merged(
        lemma_sweep(args.k_max, args.m_max),
        bound_equivalence_check(args.k_max, args.m_max),
    )
    print(report.to_json() if args.format == "json" else report.to_table())
    return 0 if report.all_passed() else 1


def _cmd_audit(args: argparse.Namespace) -> int:
    report = audit_published_formulas().merged(printed_lemma_probe())
    print(report.to_json() if args.format == "json" else report.to_table())
    return 0 if report.all_passed() else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    report = run_bench(args.k, args.m, args.reps)
    print(report.to_json() if args.format == "json" else report.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mksum",
        description=(
            "Exact k-bonacci block sums, Stirling numbers of the first kind, "
            "and the mk-sum pyramid."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, choices: tuple[str, ...]) -> None:
        p.add_argument(
            "--format", choices=choices, default="plain", help="output format"
        )

    p = sub.add_parser("term", help="single k-bonacci term f(n)")
    p.add_argument("--k", type=_positive_int, required=True, help="recurrence width")
    p.add_argument("--n", type=_any_int, required=True, help="term index (negative gives 0)")
    add_format(p, ("plain", "json"))
    p.set_defaults(handler=_cmd_term)

    p = sub.add_parser("sequence", help="first terms of a k-bonacci sequence")
    p.add_argument("--k", type=_positive_int, required=True, help="recurrence width")
    p.add_argument("--count", type=_nonnegative_int, required=True, help="how many terms")
    add_format(p, ("plain", "json", "csv"))
    p.set_defaults(handler=_cmd_sequence)

    p = sub.add_parser("sum", help="sum of the first m*k k-bonacci terms")
    p.add_argument("--k", type=_positive_int, required=True, help="recurrence width")
    p.add_argument("--m", type=_positive_int, required=True, help="block-count multiplier")
    p.add_argument(
        "--method",
        choices=sorted(_SUM_METHODS),
        default="stirling",
        help="evaluation strategy (all agree; default stirling)",
    )
    add_format(p, ("plain", "json"))
    p.set_defaults(handler=_cmd_sum)

    p = sub.add_parser("formula", help="symbolic closed form for a given m")
    p.add_argument("--m", type=_positive_int, required=True, help="block-count multiplier")
    add_format(p, ("plain", "json", "latex"))
    p.set_defaults(handler=_cmd_formula)

    p = sub.add_parser("stirling", help="Stirling numbers of the first kind")
    p.add_argument("--n", type=_nonnegative_int, required=True, help="row index")
    p.add_argument("--j", type=_nonnegative_int, help="column; omit for the whole row")
    p.add_argument("--signed", action="store_true", help="signed instead of unsigned")
    add_format(p, ("plain", "json", "csv"))
    p.set_defaults(handler=_cmd_stirling)

    p = sub.add_parser("pyramid", help="the mk-sum pyramid of coefficients")
    p.add_argument("--m", type=_positive_int, required=True, help="number of rows")
    add_format(p, RENDER_FORMATS)
    p.set_defaults(handler=_cmd_pyramid)

    p = sub.add_parser(
        "verify",
        help="cross-check the closed forms and identities against the oracle",
    )
    p.add_argument("--k-max", type=_positive_int, default=12, help="sweep bound for k")
    p.add_argument("--m-max", type=_positive_int, default=12, help="sweep bound for m")
    add_format(p, ("plain", "json"))
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "audit",
        help=(
            "audit the published example formulas and lemma; exits 1 because "
            "the known misprints are flagged as failed checks"
        ),
    )
    add_format(p, ("plain", "json"))
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("bench", help="time the three evaluation strategies")
    p.add_argument("--k", type=_positive_int, required=True, help="recurrence width")
    p.add_argument("--m", type=_positive_int, required=True, help="block-count multiplier")
    p.add_argument("--reps", type=_positive_int, default=3, help="repetitions per method")
    add_format(p, ("plain", "json"))
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except InternalInconsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
