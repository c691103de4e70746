from __future__ import annotations

import json
import logging
import os
from collections import deque
from typing import Any, Literal

os.environ.setdefault("FASTMCP_NO_BANNER", "1")
os.environ.setdefault("FASTMCP_LOG_LEVEL", "ERROR")
import sys as _sys

# fastmcp may print on import; stdout belongs to the stdio transport
_orig_stdout = _sys.stdout
_sys.stdout = _sys.stderr
from fastmcp import FastMCP
from fastmcp import settings as fastmcp_settings

_sys.stdout = _orig_stdout

try:
    fastmcp_settings.show_cli_banner = False  # type: ignore[attr-defined]
except Exception:
    pass

from ..config import Config
from ..core.errors import error_response
from ..corpus.cases import corpus_case
from ..logging.run_history import DisabledRunHistory, RunHistory
from ..observability.logging import configure_logging
from ..service_layer.analysis_service import AnalysisService
from ..service_layer.corpus_service import CorpusService
from .tools.analyze_document import AnalyzeDocumentTool
from .tools.boson_check import BosonCheckTool
from .tools.verify_corpus import VerifyCorpusTool

logger = logging.getLogger(__name__)


# Global handles initialized on demand
CONFIG: Config | None = None
RUN_HISTORY: RunHistory | DisabledRunHistory | None = None
ANALYSIS_SERVICE: AnalysisService | None = None
CORPUS_SERVICE: CorpusService | None = None

ANALYZE_TOOL: AnalyzeDocumentTool | None = None
BOSON_CHECK_TOOL: BosonCheckTool | None = None
VERIFY_CORPUS_TOOL: VerifyCorpusTool | None = None


app = FastMCP("grassmann-fcs")


def _ensure_initialized() -> None:
    """Build configuration, services and tool instances on first use."""
    global CONFIG, RUN_HISTORY, ANALYSIS_SERVICE, CORPUS_SERVICE
    global ANALYZE_TOOL, BOSON_CHECK_TOOL, VERIFY_CORPUS_TOOL

    if CONFIG is not None and ANALYZE_TOOL is not None:
        return

    CONFIG = Config.from_env()
    configure_logging(CONFIG.log_level)
    logger.info("Initializing grassmann-fcs MCP server...")
    RUN_HISTORY = RunHistory.from_config(CONFIG.logging)
    ANALYSIS_SERVICE = AnalysisService(CONFIG)
    CORPUS_SERVICE = CorpusService(CONFIG)

    ANALYZE_TOOL = AnalyzeDocumentTool(CONFIG, ANALYSIS_SERVICE, RUN_HISTORY)
    BOSON_CHECK_TOOL = BosonCheckTool(CONFIG, ANALYSIS_SERVICE, RUN_HISTORY)
    VERIFY_CORPUS_TOOL = VerifyCorpusTool(CONFIG, CORPUS_SERVICE, RUN_HISTORY)

    logger.info("grassmann-fcs MCP server ready")


def _analyze(document: str, action: str) -> dict[str, Any]:
    _ensure_initialized()
    assert ANALYZE_TOOL is not None
    return ANALYZE_TOOL.execute(document=document, action=action)


@app.tool(
    name="fcs_integrate",
    title="Integrate Weight",
    description=(
        "Berezin-integrate a document's weight against its fermionic coherent state. "
        "Returns the qubit state, its entanglement classification and, for two qubits, "
        "the concurrence."
    ),
    tags={"grassmann", "integrate"},
)
def fcs_integrate(document: str) -> dict[str, Any]:
    return _analyze(document, "integrate")


@app.tool(
    name="fcs_solve_weight",
    title="Solve Weight",
    description=(
        "Find a Grassmann weight that integrates the document's state to its target: "
        "particular solution, null space and residual."
    ),
    tags={"grassmann", "solver"},
)
def fcs_solve_weight(document: str) -> dict[str, Any]:
    return _analyze(document, "solve")


@app.tool(
    name="fcs_concurrence",
    title="Concurrence",
    description="Concurrence of the two-qubit state a document integrates to.",
    tags={"entanglement"},
)
def fcs_concurrence(document: str) -> dict[str, Any]:
    return _analyze(document, "concurrence")


@app.tool(
    name="fcs_render",
    title="Render Document",
    description="Canonical text form of a DSL document.",
    tags={"dsl"},
)
def fcs_render(document: str) -> dict[str, Any]:
    return _analyze(document, "render")


@app.tool(
    name="fcs_boson_check",
    title="Boson/Fermion Maximality",
    description=(
        "For |k1 a>|k2 a> +/- |k3 a>|k4 a>, report the bosonic concurrence and maximality "
        "conditions next to the fermionic counterpart's maximality."
    ),
    tags={"boson", "entanglement"},
)
def fcs_boson_check(
    k: list[float | str],
    sign: Literal["plus", "minus"] = "minus",
    alpha: float | str = 1,
) -> dict[str, Any]:
    _ensure_initialized()
    assert BOSON_CHECK_TOOL is not None
    return BOSON_CHECK_TOOL.execute(k=k, sign=sign, alpha=alpha)


@app.tool(
    name="fcs_verify_corpus",
    title="Verify Corpus",
    description=(
        "Run the built-in integration identities. pattern is a shell-style filter "
        "('ghz*'); list_only returns names and anchors without evaluating."
    ),
    tags={"corpus", "verification"},
)
def fcs_verify_corpus(pattern: str | None = None, list_only: bool = False) -> dict[str, Any]:
    _ensure_initialized()
    assert VERIFY_CORPUS_TOOL is not None
    return VERIFY_CORPUS_TOOL.execute(pattern=pattern, list_only=list_only)


@app.resource(uri="fcs:corpus/{name}", name="Corpus Case", description="DSL source of a corpus case")
def corpus_source(name: str) -> str:
    try:
        return corpus_case(name).source
    except Exception as exc:
        return json.dumps(error_response(exc, context={"resource": "fcs:corpus", "name": name}))


@app.resource(uri="fcs:history/tail/{n}", name="Run History Tail", description="Last N run-history lines")
def history_tail(n: str) -> str:
    try:
        count = int(n)
    except ValueError:
        count = 50
    count = max(1, min(count, 1000))
    if RUN_HISTORY is not None:
        history = RUN_HISTORY
    else:
        try:
            history = RunHistory.from_config(Config.from_env().logging)
        except ValueError:
            return ""
    if isinstance(history, DisabledRunHistory) or not history.history_path.exists():
        return ""
    with history.history_path.open(encoding="utf-8") as f:
        return "".join(deque(f, maxlen=count))


def main() -> None:
    # Initialization waits for the first tool call; a bad env var must not break the handshake.
    app.run(show_banner=False)


if __name__ == "__main__":
    main()
