from __future__ import annotations

from typing import Any

from ...config import Config
from ...logging.run_history import DisabledRunHistory, RunHistory
from ...service_layer.analysis_service import AnalysisService, Scalar, parse_kquad
from .base import MCPTool

_SCALAR = {"type": ["number", "string"], "description": "number or DSL scalar such as '1/sqrt(2)' or '-i'"}


class BosonCheckTool(MCPTool):
    """Compares bosonic and fermionic maximality for |k₁α⟩|k₂α⟩ ± |k₃α⟩|k₄α⟩."""

    def __init__(
        self,
        config: Config,
        analysis_service: AnalysisService,
        run_history: RunHistory | DisabledRunHistory | None = None,
    ):
        super().__init__(run_history)
        self.config = config
        self.analysis_service = analysis_service

    @property
    def name(self) -> str:
        return "fcs_boson_check"

    @property
    def description(self) -> str:
        return (
            "Evaluate the bosonic concurrence and maximality conditions of a k-quad "
            "and whether its fermionic counterpart can be weighted into a maximally "
            "entangled state."
        )

    def get_parameter_schema(self) -> dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "k": {"type": "array", "items": _SCALAR, "minItems": 4, "maxItems": 4},
                "sign": {"type": "string", "enum": ["plus", "minus"], "default": "minus"},
                "alpha": {**_SCALAR, "default": 1},
            },
            "required": ["k"],
            "additionalProperties": False,
        }

    @property
    def usage_examples(self) -> list[dict[str, Any]]:
        return [
            {"k": ["i", "i", 1, 1], "sign": "minus", "alpha": 1},
            {"k": [3, -1, 1, -3], "sign": "minus"},
        ]

    def execute(
        self,
        *,
        k: list[Scalar],
        sign: str = "minus",
        alpha: Scalar = 1,
        **_: Any,
    ) -> dict[str, Any]:
        return self._run(
            "boson-check",
            lambda: self.analysis_service.boson_check(parse_kquad(k, sign, alpha)),
            context={"k": [str(v) for v in k], "sign": sign},
        )
