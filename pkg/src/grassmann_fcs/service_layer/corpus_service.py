from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor

from ..config import Config, ToleranceConfig
from ..core.errors import FcsError
from ..core.models import CaseResult, CorpusReport, QubitState
from ..corpus.cases import CorpusCase, select_cases
from ..dsl.evaluate import build_measure, build_state, build_target, build_weight
from ..dsl.parser import parse_document
from ..quantum.boson import fermion_counterpart_max, maximality_report
from ..quantum.entanglement import (
    classify,
    concurrence2,
    fidelity_up_to_phase,
    matches_exactly,
    matches_up_to_phase,
)
from ..quantum.named import named_keys, named_state
from ..quantum.weights import integrate_with_weight, solve_weight

logger = logging.getLogger(__name__)


def _claimed_target(text: str, qubits: int) -> QubitState | None:
    if text in named_keys():
        state = named_state(text).state
    else:
        state = build_target(parse_document(f"target: {text}\n"))
    return state if state.qubits == qubits else None


def evaluate_case(case: CorpusCase, tolerances: ToleranceConfig) -> CaseResult:
    """Run one case end to end; any failure is recorded, never raised."""
    notes: list[str] = []
    passed = True
    fidelity = 0.0
    phase = 0.0
    residual: float | None = None
    try:
        doc = parse_document(case.source)
        state = build_state(doc)
        weight = build_weight(doc)
        measure = build_measure(doc)
        expected = build_target(doc)
        output = integrate_with_weight(weight, state, measure)

        fidelity, phase = fidelity_up_to_phase(output, expected)
        if case.comparison == "exact":
            ok = matches_exactly(output, expected, tolerances.exact)
        else:
            ok = matches_up_to_phase(output, expected, tolerances.fidelity)
        if not ok:
            passed = False
            notes.append(f"{case.comparison} comparison failed (fidelity {fidelity:.12f})")
        if abs(phase) > tolerances.fidelity:
            notes.append(f"global phase {phase:+.6f} rad relative to the target")

        solution = solve_weight(state, expected, measure, rcond=tolerances.solver_rcond)
        residual = solution.residual
        replay = integrate_with_weight(solution.particular, state, measure)
        if not solution.reachable(tolerances.fidelity) or not matches_up_to_phase(
            replay, expected, tolerances.fidelity
        ):
            passed = False
            notes.append(f"solver round trip failed (residual {residual:.3e})")
        notes.append(f"solver rank {solution.rank}, null space dimension {solution.null_dimension}")

        if 2 <= output.qubits <= 8:
            report = classify(output, cutoff=tolerances.schmidt_cutoff)
            if case.category is not None and report.category != case.category:
                passed = False
                notes.append(f"category {report.category}, expected {case.category}")
            if case.separating is not None and report.separating != case.separating:
                passed = False
                notes.append(f"separating cuts {list(report.separating)}, expected {list(case.separating)}")
            if report.named_match is not None:
                notes.append(f"matches {report.named_match.name}")

        if case.concurrence is not None:
            value = concurrence2(output)
            if abs(value - case.concurrence) > tolerances.fidelity:
                passed = False
            notes.append(f"concurrence {value:.9f}")

        if case.kquad is not None:
            maximality = maximality_report(case.kquad, tolerances.fidelity)
            flags = (maximality.boson_modulus_condition, maximality.boson_phase_condition)
            if case.boson is not None and flags != case.boson:
                passed = False
                notes.append(f"boson conditions {flags}, expected {case.boson}")
            counterpart = fermion_counterpart_max(case.kquad, tolerances.fidelity)
            if case.fermion_maximal is not None and counterpart.maximal != case.fermion_maximal:
                passed = False
                notes.append(f"fermion maximal {counterpart.maximal}, expected {case.fermion_maximal}")
            notes.append(
                f"boson concurrence {maximality.concurrence:.9f}, "
                f"boson maximal {maximality.boson_maximal}, fermion maximal {counterpart.maximal}"
            )

        if case.published_target is not None:
            claimed = _claimed_target(case.published_target, output.qubits)
            if claimed is not None:
                claimed_fidelity, claimed_phase = fidelity_up_to_phase(output, claimed)
                claimed_fit = solve_weight(state, claimed, measure, rcond=tolerances.solver_rcond)
                notes.append(
                    f"published target {case.published_target}: fidelity {claimed_fidelity:.9f}, "
                    f"phase {claimed_phase:+.6f}, solver residual {claimed_fit.residual:.3e}"
                )
    except FcsError as exc:
        passed = False
        notes.append(f"{type(exc).__name__}: {exc}")

    logger.info(
        "corpus_case_evaluated",
        extra={"case": case.name, "passed": passed, "fidelity": fidelity, "residual": residual},
    )
    return CaseResult(
        name=case.name,
        passed=passed,
        fidelity=fidelity,
        phase=phase,
        residual=residual,
        anchor=case.anchor,
        notes=notes,
    )


class CorpusService:
    """Runs the built-in corpus and assembles an order-stable report."""

    def __init__(self, config: Config | None = None):
        self.config = config or Config.from_env()

    def list_cases(self, pattern: str | None = None) -> list[CorpusCase]:
        return list(select_cases(pattern))

    def run(self, pattern: str | None = None) -> CorpusReport:
        cases = select_cases(pattern)
        tolerances = self.config.tolerances
        started = time.perf_counter()
        workers = self.config.corpus_workers
        if workers > 1 and len(cases) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda c: evaluate_case(c, tolerances), cases))
        else:
            results = [evaluate_case(c, tolerances) for c in cases]
        results.sort(key=lambda r: r.name)
        report = CorpusReport(results)
        logger.info(
            "corpus_run_complete",
            extra={
                "pattern": pattern,
                "passed": report.passed,
                "failed": report.failed,
                "duration_ms": int((time.perf_counter() - started) * 1000),
            },
        )
        return report
