"""grassmann-fcs command line.

Exit codes: 0 success, 1 verification failure, 2 DSL parse error, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich_argparse import RichHelpFormatter

from .config import Config
from .core.errors import (
    CorpusFilterError,
    DocumentError,
    ParseError,
    UsageError,
    error_response,
)
from .logging.run_history import DisabledRunHistory, RunHistory
from .observability.logging import configure_logging
from .polars_utils import report_frame, status_counts
from .service_layer.analysis_service import AnalysisService, parse_kquad
from .service_layer.corpus_service import CorpusService

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_USAGE = 3

console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="grassmann-fcs",
        description="Berezin integration of fermionic coherent states into entangled qubit states.",
        formatter_class=RichHelpFormatter,
    )
    parser.add_argument("--log-level", help="logging level (default: FCS_LOG_LEVEL or WARNING)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    corpus = sub.add_parser(
        "verify-corpus", help="run the built-in integration identities", formatter_class=RichHelpFormatter
    )
    corpus.add_argument("--case", metavar="PATTERN", help="shell-style case-name filter, e.g. 'ghz*'")
    corpus.add_argument("--list", action="store_true", help="list case names and anchors only")
    corpus.add_argument("--json", action="store_true", help="print the JSON report")

    for name, help_text in (
        ("integrate", "integrate a document's weight against its state"),
        ("solve-weight", "find a weight that integrates the state to the target"),
        ("concurrence", "concurrence of the integrated two-qubit state"),
        ("render", "print the canonical form of a document"),
    ):
        cmd = sub.add_parser(name, help=help_text, formatter_class=RichHelpFormatter)
        cmd.add_argument("--input", required=True, metavar="FILE", help="DSL document ('-' for stdin)")
        if name in ("integrate", "solve-weight", "concurrence"):
            cmd.add_argument("--json", action="store_true", help="print JSON")

    boson = sub.add_parser(
        "boson-check",
        help="compare bosonic and fermionic maximality of a k-quad",
        formatter_class=RichHelpFormatter,
    )
    boson.add_argument("--k", required=True, metavar="K1,K2,K3,K4", help="four scalars, e.g. 'i,i,1,1'; write --k=-1,... when the first is negative")
    boson.add_argument("--sign", choices=("plus", "minus"), default="minus")
    boson.add_argument("--alpha", default="1", metavar="RE[,IM]", help="coherent amplitude (default 1)")
    boson.add_argument("--json", action="store_true", help="print JSON")

    sweep = sub.add_parser(
        "boson-sweep",
        help="search |k>|l> + |l>|k> for a maximal bosonic counterpart",
        formatter_class=RichHelpFormatter,
    )
    sweep.add_argument("--values", required=True, metavar="V1,V2,...", help="scalars to pair up")
    sweep.add_argument("--alpha", default="1", metavar="RE[,IM]")
    sweep.add_argument("--json", action="store_true", help="print JSON")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _split(raw: str) -> list[str]:
    parts = [p.strip() for p in raw.split(",")]
    if any(not p for p in parts):
        raise UsageError(f"empty value in {raw!r}")
    return parts


def _alpha(raw: str) -> complex | str:
    parts = _split(raw)
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        try:
            return complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise UsageError(f"--alpha expects RE[,IM] numbers, got {raw!r}") from None
    raise UsageError(f"--alpha expects RE[,IM], got {raw!r}")


def _cx(pair: Sequence[float] | None) -> str:
    if pair is None:
        return "-"
    re, im = pair
    if abs(im) < 1e-12:
        return f"{re:.9g}"
    return f"{re:.9g}{im:+.9g}i"


def _emit_json(payload: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


# -- commands ---------------------------------------------------------------


def _verify_corpus(args: argparse.Namespace, config: Config) -> tuple[int, dict[str, Any]]:
    service = CorpusService(config)
    if args.list:
        cases = service.list_cases(args.case)
        if args.json:
            _emit_json({"cases": [{"name": c.name, "anchor": c.anchor} for c in cases]})
        else:
            for c in cases:
                console.print(f"{c.name}  [dim]{escape(c.anchor)}[/dim]")
        return EXIT_OK, {"listed": len(cases)}

    report = service.run(args.case)
    if args.json:
        _emit_json(report.to_payload())
    else:
        for case in report.cases:
            tag = "[green]PASS[/green]" if case.passed else "[red]FAIL[/red]"
            residual = "-" if case.residual is None else f"{case.residual:.3e}"
            console.print(
                f"{tag} {case.name} fidelity={case.fidelity:.12f} phase={case.phase:+.6f} "
                f"residual={residual} [dim]{escape(case.anchor)}[/dim]"
            )
            for note in case.notes:
                console.print(f"     [dim]{escape(note)}[/dim]")
        counts = status_counts(report_frame(report))
        console.print(f"\n{counts['pass']} passed, {counts['fail']} failed")
    code = EXIT_OK if report.all_passed else EXIT_FAIL
    return code, {"passed": report.passed, "failed": report.failed}


def _integrate(args: argparse.Namespace, config: Config, text: str) -> tuple[int, dict[str, Any]]:
    payload = AnalysisService(config).integrate(text)
    if args.json:
        _emit_json(payload)
        return EXIT_OK, {}
    console.print(escape(payload["rendered"]))
    if payload.get("zero"):
        console.print("[yellow]the integral vanishes[/yellow]")
        return EXIT_OK, {}
    classification = payload.get("classification")
    if classification:
        console.print(f"category: {classification['category']}")
        if classification["separating"]:
            cuts = ", ".join("{" + ",".join(map(str, p)) + "}" for p in classification["separating"])
            console.print(f"separating cuts: {cuts}")
        named = classification.get("named_match")
        if named:
            console.print(f"matches {named['name']} (phase {named['phase']:+.6f})")
        table = Table("partition", "rank", "schmidt values")
        for b in classification["bipartitions"]:
            table.add_row(
                ",".join(map(str, b["partition"])),
                str(b["schmidt_rank"]),
                ", ".join(f"{v:.9f}" for v in b["schmidt_values"]),
            )
        console.print(table)
    if "concurrence" in payload:
        console.print(f"concurrence: {payload['concurrence']:.12f}")
    return EXIT_OK, {"qubits": payload["state"]["qubits"]}


def _solve_weight(args: argparse.Namespace, config: Config, text: str) -> tuple[int, dict[str, Any]]:
    payload = AnalysisService(config).solve(text)
    if args.json:
        _emit_json(payload)
    else:
        console.print(f"weight: {escape(payload['particular'])}")
        console.print(f"residual: {payload['residual']:.3e}  rank: {payload['rank']}")
        console.print(f"null space dimension: {payload['null_dimension']}")
        for vec in payload["null_space"]:
            console.print(f"  {escape(vec)}")
        if not payload["reachable"]:
            console.print("[red]target is not reachable from this state[/red]")
    code = EXIT_OK if payload["reachable"] else EXIT_FAIL
    return code, {"residual": payload["residual"], "null_dimension": payload["null_dimension"]}


def _concurrence(args: argparse.Namespace, config: Config, text: str) -> tuple[int, dict[str, Any]]:
    payload = AnalysisService(config).concurrence(text)
    if args.json:
        _emit_json(payload)
    else:
        console.print(f"{payload['concurrence']:.12f}")
    return EXIT_OK, payload


def _render(args: argparse.Namespace, config: Config, text: str) -> tuple[int, dict[str, Any]]:
    sys.stdout.write(AnalysisService(config).render(text))
    return EXIT_OK, {}


def _boson_check(args: argparse.Namespace, config: Config) -> tuple[int, dict[str, Any]]:
    quad = parse_kquad(_split(args.k), args.sign, _alpha(args.alpha))
    payload = AnalysisService(config).boson_check(quad)
    if args.json:
        _emit_json(payload)
    else:
        table = Table("quantity", "value", title=f"k = {escape(args.k)}, sign {args.sign}")
        table.add_row("boson concurrence", f"{payload['concurrence']:.12f}")
        table.add_row("f13", _cx(payload["f13"]))
        table.add_row("f24", _cx(payload["f24"]))
        table.add_row("modulus condition", str(payload["boson_modulus_condition"]))
        table.add_row("phase condition", str(payload["boson_phase_condition"]))
        table.add_row("boson maximal", str(payload["boson_maximal"]))
        table.add_row("fermion maximal", str(payload["fermion_maximal"]))
        table.add_row("fermion m", _cx(payload["fermion_m"]))
        table.add_row("fermion weight", payload["fermion_weight"] or "-")
        integrated = payload["fermion_output_concurrence"]
        table.add_row("fermion output", payload["fermion_output"])
        table.add_row("fermion output concurrence", "-" if integrated is None else f"{integrated:.12f}")
        table.add_row("fermion solver residual", f"{payload['fermion_solver_residual']:.3e}")
        table.add_row("fermion paths agree", str(payload["fermion_paths_agree"]))
        console.print(table)
    code = EXIT_OK if payload["fermion_paths_agree"] else EXIT_FAIL
    return code, {
        "boson_maximal": payload["boson_maximal"],
        "fermion_maximal": payload["fermion_maximal"],
        "fermion_paths_agree": payload["fermion_paths_agree"],
    }


def _boson_sweep(args: argparse.Namespace, config: Config) -> tuple[int, dict[str, Any]]:
    payload = AnalysisService(config).symmetric_sweep(_split(args.values), _alpha(args.alpha))
    if args.json:
        _emit_json(payload)
    else:
        console.print(
            f"{payload['checked']} pairs checked, {len(payload['counterexamples'])} bosonic maxima, "
            f"{payload['fermion_maximal']} fermionic maxima"
        )
        for k, l in payload["counterexamples"]:
            console.print(f"  k={_cx(k)} l={_cx(l)}")
    code = EXIT_OK if not payload["counterexamples"] else EXIT_FAIL
    return code, {"checked": payload["checked"]}


_DOCUMENT_COMMANDS: dict[str, Callable[[argparse.Namespace, Config, str], tuple[int, dict[str, Any]]]] = {
    "integrate": _integrate,
    "solve-weight": _solve_weight,
    "concurrence": _concurrence,
    "render": _render,
}

_PLAIN_COMMANDS: dict[str, Callable[[argparse.Namespace, Config], tuple[int, dict[str, Any]]]] = {
    "verify-corpus": _verify_corpus,
    "boson-check": _boson_check,
    "boson-sweep": _boson_sweep,
}


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, CorpusFilterError | DocumentError | UsageError):
        return EXIT_USAGE
    return EXIT_FAIL


def _report_error(exc: Exception, as_json: bool, command: str | None) -> None:
    if as_json:
        _emit_json(error_response(exc, context={"command": command}))
    else:
        err_console.print(f"[red]error:[/red] {escape(str(exc))}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _report_error(exc, False, None)
        err_console.print(escape(parser.format_usage().rstrip()))
        return EXIT_USAGE

    try:
        config = Config.from_env()
    except ValueError as exc:
        _report_error(UsageError(str(exc)), getattr(args, "json", False), args.command)
        return EXIT_USAGE
    configure_logging(args.log_level or config.log_level)
    history: RunHistory | DisabledRunHistory = RunHistory.from_config(config.logging)

    as_json = getattr(args, "json", False)
    t0 = time.perf_counter()
    sha = None
    try:
        if args.command in _DOCUMENT_COMMANDS:
            text = _read_input(args.input)
            sha = history.compute_document_sha256(text)
            history.write_document_artifact(text, sha)
            code, summary = _DOCUMENT_COMMANDS[args.command](args, config, text)
        else:
            code, summary = _PLAIN_COMMANDS[args.command](args, config)
    except Exception as exc:
        history.record(
            action=args.command,
            status="error",
            duration_ms=int((time.perf_counter() - t0) * 1000),
            document_sha256=sha,
            error=str(exc),
        )
        _report_error(exc, as_json, args.command)
        return _exit_code(exc)

    history.record(
        action=args.command,
        status="success" if code == EXIT_OK else "fail",
        duration_ms=int((time.perf_counter() - t0) * 1000),
        document_sha256=sha,
        **summary,
    )
    return code


if __name__ == "__main__":
    sys.exit(main())
