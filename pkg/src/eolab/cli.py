"""Command-line frontend with stable text/JSON output.

Exit codes: 0 success or witness found, 1 oracle suite failure, 2 usage
or parse error, 3 space exhausted / antichain unavailable, 4 enumeration
insufficient or arithmetic overflow, 5 node budget exceeded.  Output
goes to stdout, diagnostics to stderr; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .expressions import EvaluationError, ExpressionError
from .oracle import (
    OracleReport,
    check_hasse,
    check_inversion_equiv,
    check_preorder_laws,
    check_theorem3_finite,
    check_theorem10,
)
from .patterns import (
    PREFIX_SCOPE_NOTE,
    ListingPrefix,
    OrderPattern,
    ascents,
    eo_leq,
    inversions,
    pattern_of,
)
from .poset import (
    POSET_SCOPE_NOTE,
    NoAntichainError,
    build_poset,
    export,
    max_chain,
    sample_antichain,
)
from .search import (
    InsufficientEnumerationError,
    SearchBudget,
    WitnessReport,
    search_eo_witness,
    search_uniform_witness,
)
from .vm import InsufficientPrefixError, Scheduler, dovetail, parse_program, schedule

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNAVAILABLE = 3
EXIT_ENUMERATION = 4
EXIT_BUDGET = 5

_SEARCH_EXITS = {
    "witness_found": EXIT_OK,
    "space_exhausted": EXIT_UNAVAILABLE,
    "budget_exceeded": EXIT_BUDGET,
}


class UsageError(ValueError):
    pass


def _parse_naturals(text: str, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    values = []
    for part in parts:
        if not part.isdigit():
            raise UsageError(f"{what}: expected comma-separated naturals, got {part!r}")
        values.append(int(part))
    return tuple(values)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _fmt_seq(values) -> str:
    return ",".join(str(v) for v in values)


def _fmt_pairs(pairs) -> str:
    if not pairs:
        return "none"
    return " ".join(f"({i},{j})" for i, j in sorted(pairs))


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}")


# --- subcommand handlers ----------------------------------------------------


def _cmd_pattern(args) -> tuple[int, str]:
    prefix = ListingPrefix(_parse_naturals(args.sequence, "sequence"))
    pattern = pattern_of(prefix)
    up, down = ascents(pattern), inversions(pattern)
    if args.format == "json":
        doc = {
            "pattern": pattern.to_json(),
            "ascents": up.to_json(),
            "inversions": down.to_json(),
        }
        return EXIT_OK, _dump_json(doc)
    lines = [
        f"pattern: {_fmt_seq(pattern.ranks)}",
        f"ascents: {_fmt_pairs(up.pairs)}",
        f"inversions: {_fmt_pairs(down.pairs)}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def _verdict(left_right: bool, right_left: bool) -> str:
    if left_right and right_left:
        return "equivalent (uniform)"
    if left_right:
        return "left ≤eo right only"
    if right_left:
        return "right ≤eo left only"
    return "incomparable"


def _least_violation(p: OrderPattern, q: OrderPattern):
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p.ranks[i] < p.ranks[j] and not (q.ranks[i] < q.ranks[j]):
                return (i, j)
    return None


def _cmd_cmp(args) -> tuple[int, str]:
    left = pattern_of(ListingPrefix(_parse_naturals(args.left, "--left")))
    right = pattern_of(ListingPrefix(_parse_naturals(args.right, "--right")))
    lr, rl = eo_leq(left, right), eo_leq(right, left)
    vio_lr = None if lr else _least_violation(left, right)
    vio_rl = None if rl else _least_violation(right, left)
    if args.format == "json":
        doc = {
            "patternLeft": left.to_json(),
            "patternRight": right.to_json(),
            "leftLeqRight": lr,
            "rightLeqLeft": rl,
            "violationLeftRight": list(vio_lr) if vio_lr else None,
            "violationRightLeft": list(vio_rl) if vio_rl else None,
            "verdict": _verdict(lr, rl),
            "scope": PREFIX_SCOPE_NOTE,
        }
        return EXIT_OK, _dump_json(doc)
    lines = [
        f"left pattern: {_fmt_seq(left.ranks)}",
        f"right pattern: {_fmt_seq(right.ranks)}",
        f"left ≤eo right: {str(lr).lower()}"
        + (f" (least violation ({vio_lr[0]},{vio_lr[1]}))" if vio_lr else ""),
        f"right ≤eo left: {str(rl).lower()}"
        + (f" (least violation ({vio_rl[0]},{vio_rl[1]}))" if vio_rl else ""),
        f"verdict: {_verdict(lr, rl)}",
        f"scope: {PREFIX_SCOPE_NOTE}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def _pattern_label(p: OrderPattern) -> str:
    return "".join(str(v) for v in p.ranks)


def _chain_output(patterns, n: int, key: str, fmt: str) -> str:
    if fmt == "json":
        doc = {"n": n, key: [p.to_json() for p in patterns], "scope": POSET_SCOPE_NOTE}
        return _dump_json(doc)
    if fmt == "dot":
        lines = [f"digraph pattern_{key} {{", f'  label="{POSET_SCOPE_NOTE}";']
        lines.extend(f'  "{_pattern_label(p)}";' for p in patterns)
        if key == "chain":
            lines.extend(
                f'  "{_pattern_label(a)}" -> "{_pattern_label(b)}";'
                for a, b in zip(patterns, patterns[1:])
            )
        lines.append("}")
        return "\n".join(lines) + "\n"
    return "".join(f"{_fmt_seq(p.ranks)}\n" for p in patterns)


def _cmd_poset(args) -> tuple[int, str]:
    if args.chain:
        chain = max_chain(args.n, cap=args.cap)
        return EXIT_OK, _chain_output(chain.patterns, args.n, "chain", args.format)
    if args.antichain is not None:
        if args.antichain < 2:
            raise UsageError("--antichain size must be >= 2")
        antichain = sample_antichain(args.n, args.antichain, cap=args.cap)
        return EXIT_OK, _chain_output(
            antichain.sorted_patterns(), args.n, "antichain", args.format
        )
    poset = build_poset(args.n, cap=args.cap)
    if args.format in ("json", "dot"):
        return EXIT_OK, export(poset, args.format)
    lines = [
        f"n: {poset.n}",
        f"nodes ({len(poset.nodes)}): "
        + ", ".join(_pattern_label(p) for p in poset.nodes),
        f"cover edges ({len(poset.hasse)}):",
    ]
    lines.extend(
        f"  {_pattern_label(poset.nodes[a])} -> {_pattern_label(poset.nodes[b])}"
        for a, b in poset.hasse
    )
    lines.append(f"scope: {POSET_SCOPE_NOTE}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_run(args) -> tuple[int, str]:
    prog = parse_program(_read_file(args.program))
    trace = dovetail(prog, args.k, args.round_cap)
    emitted = trace.emitted
    if args.schedule is not None:
        choices = _parse_naturals(args.choices, "--choices") if args.choices else ()
        sched = Scheduler(args.schedule, window=args.window, choices=choices)
        emitted = schedule(trace, sched, args.k).elements
    pattern = pattern_of(emitted) if emitted else None
    if args.format == "json":
        doc = {
            "emitted": list(emitted),
            "pattern": pattern.to_json() if pattern else None,
            "rounds": trace.rounds,
            "truncated": trace.truncated,
        }
        return EXIT_OK, _dump_json(doc)
    lines = [
        f"emitted: {_fmt_seq(emitted) if emitted else 'none'}",
        f"pattern: {_fmt_seq(pattern.ranks) if pattern else 'none'}",
        f"rounds: {trace.rounds}",
        f"truncated: {str(trace.truncated).lower()}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def _witness_text(report: WitnessReport) -> str:
    doc = report.to_json()
    lines = []
    for key in (
        "status",
        "relation",
        "k",
        "w",
        "choicesA",
        "choicesB",
        "prefixA",
        "prefixB",
        "patternA",
        "patternB",
        "nodesExplored",
        "restriction",
    ):
        value = doc[key]
        if isinstance(value, list):
            value = _fmt_seq(value)
        elif value is None:
            value = "none"
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _cmd_search(args) -> tuple[int, str]:
    prog_a = parse_program(_read_file(args.a))
    prog_b = parse_program(_read_file(args.b))
    budget = SearchBudget(
        k=args.k,
        window=args.window,
        max_nodes=args.max_nodes,
        round_cap=args.round_cap,
    )
    search = search_eo_witness if args.relation == "eo" else search_uniform_witness
    report = search(prog_a, prog_b, budget)
    text = _dump_json(report.to_json()) if args.format == "json" else _witness_text(report)
    return _SEARCH_EXITS[report.status], text


def _suite_report(args) -> OracleReport:
    if args.suite == "theorem3":
        if args.support is None:
            raise UsageError("--suite theorem3 requires --support")
        return check_theorem3_finite(args.n, _parse_naturals(args.support, "--support"))
    if args.support is not None:
        raise UsageError(f"--support is only valid with --suite theorem3, not {args.suite}")
    runners = {
        "preorder": check_preorder_laws,
        "inversion": check_inversion_equiv,
        "theorem10": check_theorem10,
        "hasse": check_hasse,
    }
    return runners[args.suite](args.n)


def _cmd_check(args) -> tuple[int, str]:
    report = _suite_report(args)
    code = EXIT_OK if report.passed else EXIT_SUITE_FAILURE
    if args.format == "json":
        return code, _dump_json(report.to_json())
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    lines = [
        f"suite: {report.suite}",
        f"params: {params}",
        f"checked: {report.checked}",
        f"failures: {len(report.failures)}",
    ]
    for failure in report.failures[:20]:
        lines.append(f"  {json.dumps(failure, sort_keys=True)}")
    if len(report.failures) > 20:
        lines.append(f"  (+{len(report.failures) - 20} more)")
    return code, "\n".join(lines) + "\n"


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eolab",
        description="Workbench for enumeration-order relations on finite listing prefixes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text")

    p_pattern = sub.add_parser(
        "pattern", parents=[fmt], help="pattern, ascents and inversions of a sequence"
    )
    p_pattern.add_argument("sequence", help="comma-separated distinct naturals")
    p_pattern.set_defaults(handler=_cmd_pattern)

    p_cmp = sub.add_parser(
        "cmp", parents=[fmt], help="compare two equal-length sequences"
    )
    p_cmp.add_argument("--left", required=True)
    p_cmp.add_argument("--right", required=True)
    p_cmp.set_defaults(handler=_cmd_cmp)

    p_poset = sub.add_parser("poset", help="pattern poset, chains and antichains")
    p_poset.add_argument("--n", type=int, required=True)
    p_poset.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p_poset.add_argument("--cap", type=int, default=6, help="raise the length cap (max 8)")
    group = p_poset.add_mutually_exclusive_group()
    group.add_argument("--chain", action="store_true", help="emit a maximum chain")
    group.add_argument("--antichain", type=int, metavar="SIZE")
    p_poset.set_defaults(handler=_cmd_poset)

    p_run = sub.add_parser(
        "run", parents=[fmt], help="dovetail a program, optionally rescheduled"
    )
    p_run.add_argument("--program", required=True, help="program JSON file")
    p_run.add_argument("--k", type=int, required=True)
    p_run.add_argument("--round-cap", type=int, default=1000, dest="round_cap")
    p_run.add_argument(
        "--schedule", choices=["native", "min_first", "max_first", "explicit"]
    )
    p_run.add_argument("--window", type=int, default=1)
    p_run.add_argument("--choices", help="comma-separated buffer choices (explicit)")
    p_run.set_defaults(handler=_cmd_run)

    p_search = sub.add_parser(
        "search", parents=[fmt], help="bounded witness search between two programs"
    )
    p_search.add_argument("--a", required=True, help="program JSON file")
    p_search.add_argument("--b", required=True, help="program JSON file")
    p_search.add_argument("--k", type=int, required=True)
    p_search.add_argument("--window", type=int, required=True)
    p_search.add_argument("--relation", choices=["eo", "uniform"], default="eo")
    p_search.add_argument("--max-nodes", type=int, default=100_000, dest="max_nodes")
    p_search.add_argument("--round-cap", type=int, default=1000, dest="round_cap")
    p_search.set_defaults(handler=_cmd_search)

    p_check = sub.add_parser(
        "check", parents=[fmt], help="run an exhaustive oracle suite"
    )
    p_check.add_argument(
        "--suite",
        required=True,
        choices=["preorder", "inversion", "theorem10", "theorem3", "hasse"],
    )
    p_check.add_argument("--n", type=int, required=True)
    p_check.add_argument("--support", help="comma-separated naturals (theorem3 only)")
    p_check.set_defaults(handler=_cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, output = args.handler(args)
    except NoAntichainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
    except (InsufficientEnumerationError, InsufficientPrefixError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENUMERATION
    except (UsageError, ExpressionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(output)
    return code


def run() -> None:
    raise SystemExit(main())
