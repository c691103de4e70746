from __future__ import annotations

from typing import Any

from ...config import Config
from ...logging.run_history import DisabledRunHistory, RunHistory
from ...service_layer.corpus_service import CorpusService
from .base import MCPTool


class VerifyCorpusTool(MCPTool):
    """Runs the built-in verification corpus, optionally filtered by name."""

    def __init__(
        self,
        config: Config,
        corpus_service: CorpusService,
        run_history: RunHistory | DisabledRunHistory | None = None,
    ):
        super().__init__(run_history)
        self.config = config
        self.corpus_service = corpus_service

    @property
    def name(self) -> str:
        return "fcs_verify_corpus"

    @property
    def description(self) -> str:
        return "Evaluate the built-in integration identities and report fidelity, phase and solver residual per case."

    @property
    def category(self) -> str:
        return "verification"

    def get_parameter_schema(self) -> dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "pattern": {
                    "type": ["string", "null"],
                    "description": "shell-style case-name pattern, e.g. 'ghz*'",
                },
                "list_only": {"type": "boolean", "default": False},
            },
            "additionalProperties": False,
        }

    def execute(self, *, pattern: str | None = None, list_only: bool = False, **_: Any) -> dict[str, Any]:
        if list_only:
            return self._run(
                "list-corpus",
                lambda: {
                    "cases": [
                        {"name": c.name, "anchor": c.anchor, "comparison": c.comparison}
                        for c in self.corpus_service.list_cases(pattern)
                    ]
                },
                context={"pattern": pattern},
            )
        return self._run(
            "verify-corpus",
            lambda: self.corpus_service.run(pattern).to_payload(),
            context={"pattern": pattern},
            status_of=lambda payload: "fail" if payload["summary"]["failed"] else "success",
        )
