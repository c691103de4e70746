from __future__ import annotations

import hashlib
import json
import logging
from datetime import datetime
from pathlib import Path

from ..config import LoggingConfig

logger = logging.getLogger(__name__)


class DisabledRunHistory:
    """No-op implementation when run history is disabled."""

    def record(self, *args, **kwargs):
        pass

    def write_document_artifact(self, *args, **kwargs):
        return None

    def compute_document_sha256(self, text: str) -> str:
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


class RunHistory:
    """JSONL history of CLI and MCP runs with deduplicated document artifacts."""

    def __init__(self, history_path: Path, artifact_root: Path):
        self.history_path = history_path
        self.artifact_root = artifact_root

        self.history_path.parent.mkdir(parents=True, exist_ok=True)
        self.artifact_root.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_config(cls, config: LoggingConfig) -> RunHistory | DisabledRunHistory:
        """Enabled only when run_history_path names a file."""
        target = config.run_history_path
        if not config.enabled or not target or target.lower() == "disabled":
            return DisabledRunHistory()
        history_path = Path(target)

        if config.artifact_root:
            artifact_root = Path(config.artifact_root)
        else:
            artifact_root = history_path.parent / "artifacts"

        return cls(history_path, artifact_root)

    def record(
        self,
        action: str,  # "integrate", "solve-weight", "verify-corpus", ...
        status: str,  # "success", "error", "fail"
        duration_ms: int,
        document_sha256: str | None = None,
        error: str | None = None,
        **extra_fields,
    ) -> None:
        """Append one run to the JSONL file."""
        record = {
            "action": action,
            "ts": int(datetime.now().timestamp()),
            "timestamp": datetime.now().isoformat(),
            "status": status,
            "duration_ms": duration_ms,
            "document_sha256": document_sha256,
            "error": error,
            **extra_fields,
        }

        if document_sha256:
            record["artifacts"] = {
                "document_path": str(self._artifact_path(document_sha256)),
            }

        try:
            with self.history_path.open("a", encoding="utf-8") as f:
                f.write(json.dumps(record) + "\n")
        except OSError as e:
            logger.warning("Failed to write run history: %s", e)

    def compute_document_sha256(self, text: str) -> str:
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def _artifact_path(self, document_sha256: str) -> Path:
        return self.artifact_root / "documents" / "by_sha" / f"{document_sha256}.fcs"

    def write_document_artifact(self, text: str, document_sha256: str) -> Path:
        """Store the DSL source once per SHA-256."""
        path = self._artifact_path(document_sha256)
        path.parent.mkdir(parents=True, exist_ok=True)
        if not path.exists():
            try:
                path.write_text(text, encoding="utf-8")
            except OSError as e:
                logger.warning("Failed to write document artifact: %s", e)
        return path
