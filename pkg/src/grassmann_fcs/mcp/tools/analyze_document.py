from __future__ import annotations

from typing import Any

from ...config import Config
from ...core.errors import UsageError
from ...logging.run_history import DisabledRunHistory, RunHistory
from ...service_layer.analysis_service import AnalysisService
from .base import MCPTool

ACTIONS = ("integrate", "solve", "concurrence", "render")


class AnalyzeDocumentTool(MCPTool):
    """Runs one analysis action over a DSL document."""

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
        return "fcs_analyze"

    @property
    def description(self) -> str:
        return (
            "Integrate a Grassmann weight against a fermionic coherent state, "
            "solve for a weight that reaches a target, compute concurrence, "
            "or print the canonical form of a document."
        )

    def get_parameter_schema(self) -> dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "document": {
                    "type": "string",
                    "description": "DSL text with modes:, state:, weight:, measure: and target: sections",
                },
                "action": {"type": "string", "enum": list(ACTIONS), "default": "integrate"},
            },
            "required": ["document"],
            "additionalProperties": False,
        }

    @property
    def usage_examples(self) -> list[dict[str, Any]]:
        return [
            {
                "document": (
                    "state: |1:t1> (x) |1:t1> - |-1:t1> (x) |-1:t1>\n"
                    "weight: (1/(2*sqrt(2))) * t1'\n"
                    "measure: d t1', d t1\n"
                ),
                "action": "integrate",
            }
        ]

    def execute(self, *, document: str, action: str = "integrate", **_: Any) -> dict[str, Any]:
        service = self.analysis_service

        def call() -> dict[str, Any]:
            if action == "integrate":
                return service.integrate(document)
            if action == "solve":
                return service.solve(document)
            if action == "concurrence":
                return service.concurrence(document)
            if action == "render":
                return {"document": service.render(document)}
            raise UsageError(f"unknown action {action!r}; expected one of {', '.join(ACTIONS)}")

        return self._run(action, call, document=document)
