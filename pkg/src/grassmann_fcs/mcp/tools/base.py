from __future__ import annotations

import time
from abc import ABC, abstractmethod
from collections.abc import Callable
from typing import Any

from ...core.errors import error_response
from ...logging.run_history import DisabledRunHistory, RunHistory


class MCPTool(ABC):
    """Base class for the tools the MCP server exposes."""

    def __init__(self, run_history: RunHistory | DisabledRunHistory | None = None):
        self.run_history = run_history or DisabledRunHistory()

    @property
    @abstractmethod
    def name(self) -> str:
        """Tool name for MCP registration."""

    @property
    @abstractmethod
    def description(self) -> str:
        """Human-readable tool description."""

    @abstractmethod
    def execute(self, **kwargs) -> dict[str, Any]:
        """Run the tool; failures come back as an error envelope, never raised."""

    @abstractmethod
    def get_parameter_schema(self) -> dict[str, Any]:
        """JSON schema for the tool's keyword arguments."""

    @property
    def category(self) -> str:
        return "analysis"

    @property
    def usage_examples(self) -> list[dict[str, Any]]:
        return []

    def _run(
        self,
        action: str,
        call: Callable[[], dict[str, Any]],
        *,
        document: str | None = None,
        context: dict[str, Any] | None = None,
        status_of: Callable[[dict[str, Any]], str] | None = None,
    ) -> dict[str, Any]:
        """Time call(), record it in the run history and wrap errors in the envelope."""
        t0 = time.perf_counter()
        sha = None
        if document is not None:
            sha = self.run_history.compute_document_sha256(document)
            self.run_history.write_document_artifact(document, sha)
        try:
            payload = call()
        except Exception as exc:
            self.run_history.record(
                action=action,
                status="error",
                duration_ms=int((time.perf_counter() - t0) * 1000),
                document_sha256=sha,
                error=str(exc),
            )
            return error_response(exc, context={"tool": self.name, "action": action, **(context or {})})
        self.run_history.record(
            action=action,
            status=status_of(payload) if status_of else "success",
            duration_ms=int((time.perf_counter() - t0) * 1000),
            document_sha256=sha,
        )
        return {"ok": True, **payload}
