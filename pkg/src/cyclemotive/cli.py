"""Command-line surface.

Four subcommands: evaluate a class expression under a measure, tabulate
cycle-space invariants, work with fans, and run the verification suites.
Values print as plain text by default; --json switches every subcommand to
a canonical machine format (sorted keys, no whitespace) that round-trips
byte for byte.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 unsupported measure or uncountable class, 4 cross-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import toric
from .chow import (
    ChowIndex,
    chow_congruence_targets,
    chow_htilde,
    chow_invariant_closed,
    chow_invariant_recursive,
    chow_series,
)
from .errors import (
    BudgetError,
    DomainError,
    FanError,
    NotCountableError,
    ParseError,
    UnsupportedError,
)
from .ffcount import toric_count
from .motive import (
    eval_measure,
    expr_from_json,
    measure_from_string,
)
from .ring import (
    LPoly,
    Laurent1,
    MultiSeries,
    Poly2,
    format_laurent1,
    format_lpoly,
    format_poly2,
)
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_UNSUPPORTED = 3
EXIT_MISMATCH = 4


def canonical_json(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def render_value(value) -> str:
    if isinstance(value, Poly2):
        return format_poly2(value)
    if isinstance(value, Laurent1):
        return format_laurent1(value)
    if isinstance(value, LPoly):
        return format_lpoly(value)
    return str(value)


def json_value(value):
    # integers stay numbers; polynomials use their canonical text form
    if isinstance(value, int):
        return value
    return render_value(value)


def series_coefficients(series: MultiSeries) -> list[int]:
    assert series.arity == 1
    return [series.coefficient((d,)) for d in range(series.order + 1)]


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _parse_q_m(text: str, flag: str) -> tuple[int, int]:
    parts = text.split(",")
    try:
        q = int(parts[0])
        m = int(parts[1]) if len(parts) > 1 else 1
    except (ValueError, IndexError):
        raise ParseError(f"{flag} expects q[,m], got {text!r}") from None
    if len(parts) > 2:
        raise ParseError(f"{flag} expects q[,m], got {text!r}")
    return q, m


def cmd_motive(args) -> int:
    measure = measure_from_string(args.measure)
    expr = expr_from_json(_read_text(args.file))
    value = eval_measure(expr, measure)
    if args.json:
        print(canonical_json({"measure": args.measure, "value": json_value(value)}))
    else:
        print(render_value(value))
    return EXIT_OK


def cmd_chow(args) -> int:
    output: dict = {"p": args.p, "n": args.n}
    lines: list[str] = []
    exit_code = EXIT_OK

    if args.d is not None:
        idx = ChowIndex(args.p, args.d, args.n)
        output["d"] = args.d
        if args.method == "closed":
            value = chow_invariant_closed(idx)
        elif args.method == "recursive":
            value = chow_invariant_recursive(idx)
        else:
            closed = chow_invariant_closed(idx)
            recursive = chow_invariant_recursive(idx)
            if closed != recursive:
                output["closed"] = closed
                output["recursive"] = recursive
                print(
                    f"cross-check mismatch: closed {closed} != recursive {recursive}",
                    file=sys.stderr,
                )
                return EXIT_MISMATCH
            value = closed
        output["value"] = value
        lines.append(str(value))

        if args.htilde:
            img = chow_htilde(idx)
            output["htilde"] = format_laurent1(img)
            lines.append(f"htilde {format_laurent1(img)}")

        if args.congruence:
            q, m = _parse_q_m(args.congruence, "--congruence")
            report = chow_congruence_targets(idx, q, m)
            output["congruence"] = report.to_json()
            if report.testable:
                mark_q = "ok" if report.mod_q_ok else "FAIL"
                mark_qm1 = "ok" if report.mod_q_minus_1_ok else "FAIL"
                lines.append(
                    f"{report.actual} = {report.expected_mod_q} mod {q} {mark_q}; "
                    f"{report.actual} = {report.expected_mod_q_minus_1} "
                    f"mod {q - 1} {mark_qm1}"
                )
                if not report.ok:
                    exit_code = EXIT_VERIFY_FAILED
            else:
                lines.append(
                    f"expected {report.expected_mod_q} mod {q} and "
                    f"{report.expected_mod_q_minus_1} mod {q - 1}; {report.note}"
                )
    elif args.htilde or args.congruence:
        raise DomainError("--htilde and --congruence need a degree (-d)")

    if args.series is not None:
        if args.series < 0:
            raise DomainError("series order must be >= 0")
        coeffs = series_coefficients(chow_series(args.p, args.n, args.series))
        output["series"] = coeffs
        lines.append(",".join(str(c) for c in coeffs))

    if args.d is None and args.series is None:
        raise DomainError("nothing to do: pass -d and/or --series")

    if args.json:
        print(canonical_json(output))
    else:
        print("\n".join(lines))
    return exit_code


def _load_grading(path: str):
    """Grading file: JSON array of [cone_ray_indices, exponent_vector]
    pairs covering every p-dimensional orbit closure."""
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"grading file is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ParseError("grading file must be a JSON array of pairs")
    table = {}
    for entry in data:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"grading entry must be a pair, got {entry!r}")
        cone, exponent = entry
        table[tuple(int(i) for i in cone)] = tuple(int(x) for x in exponent)

    def grade(descriptor):
        key = tuple(descriptor.ray_indices)
        if key not in table:
            raise ParseError(f"grading file misses orbit closure {list(key)}")
        return table[key]

    return grade


def cmd_toric(args) -> int:
    fan = toric.fan_from_json(_read_text(args.file))
    output: dict = {}
    lines: list[str] = []
    requested = False

    if args.census:
        requested = True
        census = toric.fan_validate(fan)
        output["census"] = list(census)
        lines.append(",".join(str(d) for d in census))
    if args.lam:
        requested = True
        value = toric.toric_lambda(fan)
        output["lambda"] = value
        lines.append(str(value))
    if args.e_poly:
        requested = True
        text = format_poly2(toric.toric_E_poly(fan))
        output["e_poly"] = text
        lines.append(text)
    if args.count:
        requested = True
        q, m = _parse_q_m(args.count, "--count")
        value = toric_count(fan, q, m)
        output["count"] = value
        lines.append(str(value))
    if args.euler_series:
        requested = True
        parts = args.euler_series.split(",")
        if len(parts) not in (2, 3):
            raise ParseError("--euler-series expects p,order[,grading-file]")
        try:
            p = int(parts[0])
            order = int(parts[1])
        except ValueError:
            raise ParseError("--euler-series expects integer p and order") from None
        if len(parts) == 3:
            grading = _load_grading(parts[2])
        else:
            # degree grading: every class to the same single variable
            grading = lambda descriptor: (1,)
        series = toric.euler_series(fan, p, order, grading)
        terms = sorted(series.terms.items())
        output["euler_series"] = {
            "arity": series.arity,
            "order": series.order,
            "terms": [[list(e), c] for e, c in terms],
        }
        if series.arity == 1:
            lines.append(",".join(str(c) for c in series_coefficients(series)))
        else:
            lines.extend(f"{list(e)} {c}" for e, c in terms)

    if not requested:
        raise DomainError(
            "nothing to do: pass --census, --lambda, --e-poly, --count, "
            "or --euler-series"
        )
    if args.json:
        print(canonical_json(output))
    else:
        print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = None if args.suite in (None, "all") else [args.suite]
    report = run_suites(names)
    if args.json:
        print(canonical_json(report))
    else:
        for suite in report["suites"]:
            for check in suite["checks"]:
                mark = "pass" if check["ok"] else "FAIL"
                print(f"{mark}  {suite['suite']}: {check['name']} ({check['cases']} cases)")
                for failure in check["failures"]:
                    print(f"      {failure}")
        print("all suites pass" if report["ok"] else "FAILURES above")
    return EXIT_OK if report["ok"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclemotive",
        description="Exact additive invariants of algebraic-variety classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_motive = sub.add_parser("motive", help="evaluate a class expression")
    p_motive.add_argument("file", help="expression JSON file")
    p_motive.add_argument(
        "--measure",
        default="e-poly",
        help="e-poly | euler | h-tilde | h-bar | count-poly | count:q[,m]",
    )
    p_motive.add_argument("--json", action="store_true")
    p_motive.set_defaults(func=cmd_motive)

    p_chow = sub.add_parser("chow", help="cycle-space invariants")
    p_chow.add_argument("-p", type=int, required=True, help="cycle dimension")
    p_chow.add_argument("-n", type=int, required=True, help="ambient dimension")
    p_chow.add_argument("-d", type=int, default=None, help="degree")
    p_chow.add_argument(
        "--method",
        choices=("closed", "recursive", "both"),
        default="closed",
    )
    p_chow.add_argument("--series", type=int, default=None, metavar="ORDER")
    p_chow.add_argument("--htilde", action="store_true")
    p_chow.add_argument("--congruence", metavar="Q[,M]")
    p_chow.add_argument("--json", action="store_true")
    p_chow.set_defaults(func=cmd_chow)

    p_toric = sub.add_parser("toric", help="fan invariants")
    p_toric.add_argument("file", help="fan JSON file")
    p_toric.add_argument("--census", action="store_true")
    p_toric.add_argument("--lambda", dest="lam", action="store_true")
    p_toric.add_argument("--e-poly", dest="e_poly", action="store_true")
    p_toric.add_argument("--count", metavar="Q[,M]")
    p_toric.add_argument("--euler-series", metavar="P,ORDER[,GRADING]")
    p_toric.add_argument("--json", action="store_true")
    p_toric.set_defaults(func=cmd_toric)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=sorted(SUITES) + ["all"],
    )
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotCountableError, UnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ParseError, FanError, DomainError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
