from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class FcsError(Exception):
    """Base class for every error raised by grassmann-fcs."""


class GrassmannError(FcsError):
    """Invalid generator, mode cap exceeded, or non-nilpotent exponent."""


class StateError(FcsError):
    """Qubit-count mismatch, slot out of range, or Grassmann content where none is allowed."""


class IntegrationError(FcsError):
    """Berezin integration left Grassmann content behind or the measure is malformed."""


class EntanglementError(FcsError):
    """Zero state, wrong qubit count, or an invalid bipartition."""


class BosonError(FcsError):
    """Degenerate coherent superposition or invalid quad parameters."""


class DocumentError(FcsError):
    """A document lacks a section the requested command needs."""


class CorpusFilterError(FcsError):
    """A corpus name pattern matched no case."""


class UsageError(FcsError):
    """Command-line arguments could not be interpreted."""


class ParseError(FcsError):
    """DSL syntax or semantic error with a source position."""

    def __init__(self, message: str, *, line: int, column: int, token: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        where = f"line {line}, column {column}"
        if token:
            where += f" near {token!r}"
        super().__init__(f"{message} ({where})")


@dataclass(slots=True)
class FcsErrorInfo:
    code: str
    message: str
    suggestions: tuple[str, ...] = ()
    context: dict[str, Any] | None = None

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "code": self.code,
            "message": self.message,
            "data": {"suggestions": list(self.suggestions)},
        }
        if self.context:
            payload["context"] = dict(self.context)
        return payload


def categorize_error(error: Exception) -> FcsErrorInfo:
    """Return a structured FcsErrorInfo with actionable suggestions."""
    msg = str(error) if error is not None else ""

    if isinstance(error, ParseError):
        return FcsErrorInfo(
            code="PARSE_ERROR",
            message=msg,
            suggestions=(
                "Generators are written t<mode> and t<mode>' for the conjugate.",
                "Coherent kets are |scale:generator>, Fock kets are |0101>.",
                "Sections are 'modes:', 'state:', 'weight:', 'measure:', 'target:'.",
            ),
            context={"line": error.line, "column": error.column, "token": error.token},
        )

    if isinstance(error, UsageError):
        return FcsErrorInfo(
            code="USAGE_ERROR",
            message=msg or "Invalid arguments.",
            suggestions=("Run with --help to see the accepted arguments.",),
        )

    if isinstance(error, DocumentError):
        return FcsErrorInfo(
            code="DOCUMENT_ERROR",
            message=msg or "Incomplete input.",
            suggestions=(
                "integrate needs state, weight and measure.",
                "solve-weight needs state, measure and target.",
            ),
        )

    if isinstance(error, IntegrationError):
        return FcsErrorInfo(
            code="INTEGRATION_ERROR",
            message=msg or "Berezin integration failed.",
            suggestions=(
                "List every generator of the weight and the state in the measure.",
                "Each measure factor may appear only once.",
            ),
        )

    if isinstance(error, StateError):
        return FcsErrorInfo(
            code="STATE_ERROR",
            message=msg or "Inconsistent state.",
            suggestions=("Check that every summand has the same number of qubits.",),
        )

    if isinstance(error, GrassmannError):
        return FcsErrorInfo(
            code="ALGEBRA_ERROR",
            message=msg or "Invalid Grassmann expression.",
            suggestions=(
                "Mode indices run from 1 to 6.",
                "exp() of a Grassmann element needs a nilpotent argument or a scalar body.",
            ),
        )

    if isinstance(error, EntanglementError):
        return FcsErrorInfo(
            code="ENTANGLEMENT_ERROR",
            message=msg or "Entanglement analysis failed.",
            suggestions=(
                "Concurrence is defined for two-qubit states only.",
                "The integrated state must be nonzero.",
            ),
        )

    if isinstance(error, BosonError):
        return FcsErrorInfo(
            code="BOSON_ERROR",
            message=msg or "Invalid bosonic superposition.",
            suggestions=(
                "alpha must be nonzero.",
                "For the minus sign the two product terms must differ.",
            ),
        )

    if isinstance(error, CorpusFilterError):
        return FcsErrorInfo(
            code="CORPUS_FILTER",
            message=msg or "No corpus case matched.",
            suggestions=("Run verify-corpus --list to see case names.",),
        )

    return FcsErrorInfo(
        code="UNKNOWN_ERROR",
        message=msg or type(error).__name__,
        suggestions=("Inspect error details for additional context.",),
    )


def error_response(error: Exception, *, context: dict[str, Any] | None = None) -> dict[str, Any]:
    """Serialize an error into the standard envelope."""
    info = categorize_error(error)
    if context:
        info.context = {**(info.context or {}), **context}
    return {
        "ok": False,
        "error": info.to_payload(),
    }
