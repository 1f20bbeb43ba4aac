"""Command-line front end.

Exit codes: 0 clean run, 1 usage error, 2 domain error (invalid values,
factorization bound exceeded), 3 a finding that contradicts an
established result (emitted only after exact re-verification).

Every report goes to standard output; diagnostics and logs go to
standard error.  JSON is the contract surface: reports carry a
``schema_version`` and the toolkit version and are serialized with
sorted keys, so identical inputs give byte-identical output.  The one
exception is ``denes``, which emits one bare JSON object per report
(exactly the report's field names, no envelope) so scans stream as
JSON Lines.  CSV and human formats are provided for convenience; the
human layout carries no compatibility promise.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import re
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .arith import DEFAULT_FACTOR_BOUND, is_prime
from .denes import denes_criterion, denes_scan
from .frey import (
    build_frey,
    cartan_type,
    invariants,
    is_trivial_level,
    normalize,
    reduce_alpha,
)
from .search import (
    SearchSpec,
    classify_ap_outcome,
    classify_search_outcome,
    search_ap_powers,
    search_star,
    verify_theorem_claims,
)
from .tate import all_local_data
from .traces import mod_p_congruent, trace_table
from .weierstrass import WeierstrassModel

__all__ = ["entry", "main"]

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_COUNTEREXAMPLE = 3

FACTOR_BOUND_ENV = "FREYCHECK_FACTOR_BOUND"

log = logging.getLogger("freycheck")

# Options taking comma-separated integer lists.  A value such as
# "-1,1,-1" looks like an option string to argparse, so `--triple
# -1,1,-1` is pre-merged into `--triple=-1,1,-1` before parsing.
_COMMA_OPTIONS = {"--triple", "--model", "--model1", "--model2", "--p-list", "--alpha-list"}
_NEGATIVE_LIST = re.compile(r"-\d+(?:,-?\d+)*")


class _Parser(argparse.ArgumentParser):
    """argparse parser using exit code 1 for usage errors instead of 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(EXIT_USAGE)


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)


def _positive_int(text: str) -> int:
    value = _int_arg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    return value


def _nonnegative_int(text: str) -> int:
    value = _int_arg(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer, got %r" % text)
    return value


def _comma_ints(count: Optional[int] = None):
    def parse(text: str) -> List[int]:
        parts = [part.strip() for part in text.split(",")]
        if any(part == "" for part in parts):
            raise argparse.ArgumentTypeError(
                "expected comma-separated integers, got %r" % text
            )
        try:
            values = [int(part) for part in parts]
        except ValueError:
            raise argparse.ArgumentTypeError(
                "expected comma-separated integers, got %r" % text
            )
        if count is not None and len(values) != count:
            raise argparse.ArgumentTypeError(
                "expected %d comma-separated integers, got %d" % (count, len(values))
            )
        return values

    return parse


def _merge_negative_list_values(argv: Sequence[str]) -> List[str]:
    merged: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if (
            token in _COMMA_OPTIONS
            and index + 1 < len(argv)
            and _NEGATIVE_LIST.fullmatch(argv[index + 1])
        ):
            merged.append(token + "=" + argv[index + 1])
            index += 2
        else:
            merged.append(token)
            index += 1
    return merged


def _default_factor_bound() -> int:
    raw = os.environ.get(FACTOR_BOUND_ENV)
    if raw is None:
        return DEFAULT_FACTOR_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise ValueError(
            "%s must be an integer, got %r" % (FACTOR_BOUND_ENV, raw)
        )
    if bound < 2:
        raise ValueError("%s must be >= 2, got %d" % (FACTOR_BOUND_ENV, bound))
    return bound


def build_parser() -> _Parser:
    parser = _Parser(
        prog="freycheck",
        description="Conductor tables, regularity criteria, trace congruences, "
        "and exhaustive bounded-height searches for a^p + 2^alpha*b^p + c^p = 0.",
    )
    parser.add_argument("--version", action="version", version="freycheck " + __version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "csv", "human"),
        default=None,
        help="output format (default: csv for traces, json elsewhere)",
    )
    common.add_argument(
        "--workers",
        type=_positive_int,
        default=1,
        help="worker processes for search and scan subcommands (default: 1)",
    )
    common.add_argument(
        "--factor-bound",
        type=_positive_int,
        default=None,
        help="trial-division bound for conductor factorizations "
        "(default: $%s or %d)" % (FACTOR_BOUND_ENV, DEFAULT_FACTOR_BOUND),
    )

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    analyze = sub.add_parser(
        "analyze",
        parents=[common],
        help="normalize a solution, build its Frey curve, cross-check invariants",
    )
    analyze.add_argument("--p", type=_positive_int, required=True)
    analyze.add_argument("--alpha", type=_nonnegative_int, required=True)
    analyze.add_argument(
        "--triple", type=_comma_ints(3), required=True, metavar="a,b,c"
    )

    denes = sub.add_parser(
        "denes",
        parents=[common],
        help="evaluate the regularity/order-of-2/Wieferich criterion",
    )
    group = denes.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=_positive_int)
    group.add_argument("--scan", type=_positive_int, metavar="MAX")

    search = sub.add_parser(
        "search",
        parents=[common],
        help="exhaustive bounded-height search for a^p + L^alpha*b^p + c^p = 0",
    )
    search.add_argument("--p", type=_positive_int, required=True)
    search.add_argument("--alpha", type=_nonnegative_int, required=True)
    search.add_argument("--L", type=_positive_int, default=2)
    search.add_argument("--height", type=_positive_int, default=25)
    search.add_argument(
        "--allow-imprimitive",
        action="store_true",
        help="also report solutions with gcd(a, b, c) > 1, tagged with their content",
    )

    ap_search = sub.add_parser(
        "ap-search",
        parents=[common],
        help="arithmetic progressions of perfect n-th powers with positive bases",
    )
    ap_search.add_argument("--n", type=_positive_int, required=True)
    ap_search.add_argument("--k", type=_positive_int, required=True, choices=(3, 4))
    ap_search.add_argument("--height", type=_positive_int, default=25)
    ap_search.add_argument(
        "--allow-constant",
        action="store_true",
        help="include constant progressions (equal bases)",
    )

    verify = sub.add_parser(
        "verify",
        parents=[common],
        help="batch search over (p, alpha) grids and classify against known results",
    )
    verify.add_argument("--p-list", type=_comma_ints(), required=True, metavar="p1,p2,...")
    verify.add_argument(
        "--alpha-list", type=_comma_ints(), required=True, metavar="a1,a2,..."
    )
    verify.add_argument("--height", type=_positive_int, default=25)

    traces = sub.add_parser(
        "traces",
        parents=[common],
        help="trace-of-Frobenius table for a Weierstrass model",
    )
    traces.add_argument(
        "--model", type=_comma_ints(5), required=True, metavar="a1,a2,a3,a4,a6"
    )
    traces.add_argument("--lmax", type=_positive_int, default=100)

    congruence = sub.add_parser(
        "congruence",
        parents=[common],
        help="compare traces of two curves mod p over good primes",
    )
    congruence.add_argument(
        "--model1", type=_comma_ints(5), required=True, metavar="a1,a2,a3,a4,a6"
    )
    congruence.add_argument(
        "--model2", type=_comma_ints(5), required=True, metavar="a1,a2,a3,a4,a6"
    )
    congruence.add_argument("--p", type=_positive_int, required=True)
    congruence.add_argument("--lmax", type=_positive_int, default=100)

    conductor = sub.add_parser(
        "conductor",
        parents=[common],
        help="global conductor and per-prime local data via minimal-model reduction",
    )
    conductor.add_argument(
        "--model", type=_comma_ints(5), required=True, metavar="a1,a2,a3,a4,a6"
    )

    return parser


# ---------------------------------------------------------------------------
# rendering


def _envelope(command: str, payload: Dict[str, object]) -> str:
    doc: Dict[str, object] = {
        "schema_version": SCHEMA_VERSION,
        "toolkit_version": __version__,
        "command": command,
    }
    doc.update(payload)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _key_value_rows(payload: Dict[str, object], prefix: str = "") -> List[Tuple[str, object]]:
    rows: List[Tuple[str, object]] = []
    for key in sorted(payload):
        value = payload[key]
        name = prefix + key
        if isinstance(value, dict):
            rows.extend(_key_value_rows(value, name + "."))
        elif isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value):
            rows.append((name, " ".join(str(v) for v in value)))
        elif isinstance(value, list):
            rows.append((name, json.dumps(value, sort_keys=True)))
        else:
            rows.append((name, value))
    return rows


def _render_scalars(payload: Dict[str, object], fmt: str, command: str) -> str:
    if fmt == "json":
        return _envelope(command, payload)
    rows = _key_value_rows(payload)
    if fmt == "csv":
        return _csv_text(("key", "value"), rows)
    width = max(len(name) for name, _ in rows)
    lines = ["%-*s  %s" % (width, name, value) for name, value in rows]
    return "\n".join(lines) + "\n"


def _model_from_values(values: Sequence[int]) -> WeierstrassModel:
    model = WeierstrassModel(*values)
    model.require_nonsingular()
    return model


# ---------------------------------------------------------------------------
# handlers (each returns rendered report text plus an exit code)


def _cmd_analyze(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "json"
    bound = args.factor_bound or _default_factor_bound()
    a, b, c = args.triple
    alpha_red, b_red = reduce_alpha(args.alpha, b, args.p)
    if alpha_red == 0:
        raise ValueError(
            "not a solution (Fermat case: alpha reduces to 0 mod p, and "
            "a^p + b^p + c^p = 0 has no solutions in non-zero integers)"
        )
    params = normalize(args.p, alpha_red, a, b_red, c)
    triple, model = build_frey(params)
    inv = invariants(triple, args.p, bound)
    local = all_local_data(model, bound)
    conductor_oracle = 1
    for item in local:
        conductor_oracle *= item.prime**item.conductor_exponent
    t_oracle = next(
        (item.conductor_exponent for item in local if item.prime == 2), 0
    )
    agree = conductor_oracle == inv.conductor and t_oracle == inv.t
    payload: Dict[str, object] = {
        "alpha_input": args.alpha,
        "params": params.to_dict(),
        "triple": triple.to_dict(),
        "model": model.to_list(),
        "invariants": inv.to_dict(),
        "trivial_level": is_trivial_level(inv),
        "cartan_type": cartan_type(args.p),
        "cross_check": {
            "conductor_table": inv.conductor,
            "conductor_oracle": conductor_oracle,
            "t_table": inv.t,
            "t_oracle": t_oracle,
            "agree": agree,
        },
    }
    code = EXIT_OK if agree else EXIT_COUNTEREXAMPLE
    if not agree:
        log.error("closed-form table disagrees with the minimal-model oracle")
    return _render_scalars(payload, fmt, "analyze"), code


def _cmd_denes(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "json"
    if args.p is not None:
        reports = [denes_criterion(args.p)]
    else:
        reports = denes_scan(args.scan, workers=args.workers)
    if fmt == "json":
        lines = [json.dumps(r.to_dict(), sort_keys=True) for r in reports]
        return "".join(line + "\n" for line in lines), EXIT_OK
    header = (
        "p",
        "is_regular",
        "irregular_indices",
        "ord2",
        "order_condition",
        "wieferich_violation",
        "criterion_holds",
    )
    rows = [
        (
            r.p,
            r.is_regular,
            ";".join(str(k) for k in r.irregular_indices),
            r.ord2,
            r.order_condition,
            r.wieferich_violation,
            r.criterion_holds,
        )
        for r in reports
    ]
    if fmt == "csv":
        return _csv_text(header, rows), EXIT_OK
    lines = ["  ".join(str(cell) for cell in header)]
    lines.extend("  ".join(str(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_search(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "json"
    spec = SearchSpec(
        p=args.p,
        alpha=args.alpha,
        height=args.height,
        L=args.L,
        require_primitive=not args.allow_imprimitive,
    )
    records = search_star(spec, workers=args.workers)
    outcome = classify_search_outcome(spec, records)
    code = EXIT_OK if outcome.conforms else EXIT_COUNTEREXAMPLE
    if not outcome.conforms:
        log.error(
            "%d record(s) contradict the expected verdict %r",
            len(outcome.counterexamples),
            outcome.expected,
        )
    if fmt == "csv":
        rows = [
            (rec.a, rec.b, rec.c, rec.content, rec.trivial) for rec in records
        ]
        return _csv_text(("a", "b", "c", "content", "trivial"), rows), code
    payload: Dict[str, object] = {
        "spec": spec.to_dict(),
        "records": [rec.to_dict() for rec in records],
        "claim": outcome.claim,
        "expected": outcome.expected,
        "counterexamples": [rec.to_dict() for rec in outcome.counterexamples],
        "conforms": outcome.conforms,
    }
    if fmt == "json":
        return _envelope("search", payload), code
    return _render_scalars(payload, "human", "search"), code


def _cmd_ap_search(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "json"
    distinct_only = not args.allow_constant
    tuples = search_ap_powers(args.n, args.k, args.height, distinct_only=distinct_only)
    outcome = classify_ap_outcome(args.n, args.k, distinct_only, tuples)
    code = EXIT_OK if outcome.conforms else EXIT_COUNTEREXAMPLE
    if not outcome.conforms:
        log.error(
            "%d progression(s) contradict an established non-existence result",
            len(outcome.counterexamples),
        )
    if fmt == "csv":
        header = tuple("x%d" % (i + 1) for i in range(args.k))
        return _csv_text(header, tuples), code
    payload: Dict[str, object] = {
        "n": args.n,
        "k": args.k,
        "height": args.height,
        "distinct_only": distinct_only,
        "progressions": [list(t) for t in tuples],
        "claim": outcome.claim,
        "expected": outcome.expected,
        "conforms": outcome.conforms,
    }
    if fmt == "json":
        return _envelope("ap-search", payload), code
    return _render_scalars(payload, "human", "ap-search"), code


def _cmd_verify(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "json"
    cases = verify_theorem_claims(
        args.p_list, args.alpha_list, args.height, workers=args.workers
    )
    all_conform = all(case.conforms for case in cases)
    code = EXIT_OK if all_conform else EXIT_COUNTEREXAMPLE
    if not all_conform:
        log.error("at least one (p, alpha) case contradicts the expected verdict")
    if fmt == "csv":
        rows = [
            (
                case.spec.p,
                case.spec.alpha,
                case.spec.height,
                case.outcome.claim,
                case.outcome.expected,
                len(case.records),
                case.conforms,
            )
            for case in cases
        ]
        header = ("p", "alpha", "height", "claim", "expected", "records", "conforms")
        return _csv_text(header, rows), code
    payload: Dict[str, object] = {
        "p_list": list(args.p_list),
        "alpha_list": list(args.alpha_list),
        "height": args.height,
        "cases": [case.to_dict() for case in cases],
        "all_conform": all_conform,
    }
    if fmt == "json":
        return _envelope("verify", payload), code
    return _render_scalars(payload, "human", "verify"), code


def _cmd_traces(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "csv"
    model = _model_from_values(args.model)
    records = trace_table(model, args.lmax)
    if fmt == "json":
        payload: Dict[str, object] = {
            "model": model.to_list(),
            "lmax": args.lmax,
            "records": [rec.to_dict() for rec in records],
        }
        return _envelope("traces", payload), EXIT_OK
    rows = [
        (rec.ell, "" if rec.a_ell is None else rec.a_ell, rec.reduction)
        for rec in records
    ]
    if fmt == "csv":
        return _csv_text(("ell", "a_ell", "reduction"), rows), EXIT_OK
    lines = ["ell  a_ell  reduction"]
    lines.extend("%-4s %-6s %s" % row for row in rows)
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_congruence(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "json"
    if not is_prime(args.p):
        raise ValueError("p must be prime")
    model1 = _model_from_values(args.model1)
    model2 = _model_from_values(args.model2)
    report = mod_p_congruent(model1, model2, args.p, args.lmax)
    payload: Dict[str, object] = {
        "model1": model1.to_list(),
        "model2": model2.to_list(),
        "report": report.to_dict(),
    }
    return _render_scalars(payload, fmt, "congruence"), EXIT_OK


def _cmd_conductor(args: argparse.Namespace) -> Tuple[str, int]:
    fmt = args.format or "json"
    bound = args.factor_bound or _default_factor_bound()
    model = _model_from_values(args.model)
    local = all_local_data(model, bound)
    conductor = 1
    for item in local:
        conductor *= item.prime**item.conductor_exponent
    if fmt == "csv":
        rows = [
            (
                item.prime,
                item.conductor_exponent,
                item.min_disc_valuation,
                item.kodaira_type,
                item.reduction,
            )
            for item in local
        ]
        header = (
            "prime",
            "conductor_exponent",
            "min_disc_valuation",
            "kodaira_type",
            "reduction",
        )
        return _csv_text(header, rows), EXIT_OK
    payload: Dict[str, object] = {
        "model": model.to_list(),
        "discriminant": model.discriminant(),
        "conductor": conductor,
        "local_data": [item.to_dict() for item in local],
    }
    if fmt == "json":
        return _envelope("conductor", payload), EXIT_OK
    return _render_scalars(payload, "human", "conductor"), EXIT_OK


_HANDLERS = {
    "analyze": _cmd_analyze,
    "denes": _cmd_denes,
    "search": _cmd_search,
    "ap-search": _cmd_ap_search,
    "verify": _cmd_verify,
    "traces": _cmd_traces,
    "congruence": _cmd_congruence,
    "conductor": _cmd_conductor,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    tokens = _merge_negative_list_values(list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(tokens)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = _HANDLERS[args.command]
    try:
        report, code = handler(args)
    except ValueError as exc:
        sys.stderr.write("freycheck %s: error: %s\n" % (args.command, exc))
        return EXIT_DOMAIN
    sys.stdout.write(report)
    return code


def entry() -> None:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(main())
