from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from ..algebra.grassmann import GrassmannElement
from ..config import Config
from ..core.errors import BosonError, UsageError
from ..core.models import KQuad, QuadSign
from ..dsl.evaluate import (
    build_measure,
    build_state,
    build_target,
    build_weight,
    evaluate_scalar,
)
from ..dsl.parser import parse_document, parse_expr
from ..dsl.render import render_document, render_element, render_qubit_state
from ..quantum.boson import (
    fermion_counterpart_max,
    fermion_quad_check,
    maximality_report,
    symmetric_pair_sweep,
)
from ..quantum.entanglement import ZERO_NORM, classify, concurrence2
from ..quantum.weights import integrate_with_weight, solve_weight

Scalar = str | int | float | complex

_SIGNS: dict[str, QuadSign] = {"plus": "+", "minus": "-", "+": "+", "-": "-"}


def parse_scalar(value: Scalar) -> complex:
    """Numbers pass through; strings go through the DSL expression grammar ("1/sqrt(2)", "-i")."""
    if isinstance(value, str):
        return evaluate_scalar(parse_expr(value))
    if isinstance(value, bool):
        raise UsageError("expected a number, got a boolean")
    return complex(value)


def parse_kquad(ks: Sequence[Scalar], sign: str = "minus", alpha: Scalar = 1) -> KQuad:
    if len(ks) != 4:
        raise UsageError(f"expected four k values, got {len(ks)}")
    if sign not in _SIGNS:
        raise UsageError(f"sign must be plus or minus, got {sign!r}")
    a = parse_scalar(alpha)
    if a == 0:
        raise BosonError("alpha must be nonzero")
    k1, k2, k3, k4 = (parse_scalar(k) for k in ks)
    return KQuad(k1, k2, k3, k4, _SIGNS[sign], a)


class AnalysisService:
    """Service layer behind the integrate, solve-weight, concurrence, boson-check and render commands."""

    def __init__(self, config: Config | None = None):
        self.config = config or Config.from_env()

    def integrate(self, text: str) -> dict[str, Any]:
        """Integrate a document's weight against its state and describe the output."""
        doc = parse_document(text)
        output = integrate_with_weight(build_weight(doc), build_state(doc), build_measure(doc))

        payload: dict[str, Any] = {
            "modes": doc.modes,
            "state": output.to_payload(),
            "rendered": render_qubit_state(output),
        }
        if output.norm < ZERO_NORM:
            payload["zero"] = True
            return payload
        if 2 <= output.qubits <= 8:
            report = classify(output, cutoff=self.config.tolerances.schmidt_cutoff)
            payload["classification"] = report.to_payload()
        if output.qubits == 2:
            payload["concurrence"] = concurrence2(output)
        return payload

    def solve(self, text: str) -> dict[str, Any]:
        """Recover a weight for the document's state, measure and target."""
        doc = parse_document(text)
        state = build_state(doc)
        measure = build_measure(doc)
        target = build_target(doc)
        tolerances = self.config.tolerances
        solution = solve_weight(state, target, measure, rcond=tolerances.solver_rcond)
        return {
            "particular": render_element(solution.particular),
            "null_dimension": solution.null_dimension,
            "null_space": [render_element(v) for v in solution.null_space],
            "residual": solution.residual,
            "rank": solution.rank,
            "reachable": solution.reachable(tolerances.fidelity),
        }

    def concurrence(self, text: str) -> dict[str, Any]:
        doc = parse_document(text)
        output = integrate_with_weight(build_weight(doc), build_state(doc), build_measure(doc))
        return {"concurrence": concurrence2(output)}

    def boson_check(self, quad: KQuad) -> dict[str, Any]:
        tol = self.config.tolerances.fidelity
        payload = maximality_report(quad, tol).to_payload()
        counterpart = fermion_counterpart_max(quad, tol)
        payload["k"] = [[k.real, k.imag] for k in quad.ks]
        payload["fermion_d1"] = [counterpart.d1.real, counterpart.d1.imag]
        payload["fermion_d2"] = [counterpart.d2.real, counterpart.d2.imag]
        coefficient = counterpart.weight_coefficient
        payload["fermion_weight"] = (
            None if coefficient is None else f"({render_element(GrassmannElement.scalar(coefficient))}) * t1'"
        )
        integrated = fermion_quad_check(quad, tol)
        payload["fermion_output"] = render_qubit_state(integrated.output)
        payload["fermion_output_concurrence"] = integrated.concurrence
        payload["fermion_solver_residual"] = integrated.solver_residual
        payload["fermion_paths_agree"] = integrated.agrees
        return payload

    def render(self, text: str) -> str:
        return render_document(parse_document(text))

    def symmetric_sweep(self, values: Sequence[Scalar], alpha: Scalar = 1) -> dict[str, Any]:
        """Search |kθ⟩|lθ⟩ + |lθ⟩|kθ⟩ over all pairs for a maximal bosonic counterpart."""
        result = symmetric_pair_sweep([parse_scalar(v) for v in values], parse_scalar(alpha))
        return {
            "checked": result.checked,
            "fermion_maximal": result.fermion_maximal,
            "counterexamples": [
                [[k.real, k.imag], [l.real, l.imag]] for k, l in result.counterexamples
            ],
        }
