"""
Error envelope checks: every failure carries a stable code, a message,
suggestions and whatever context the caller attached.
"""
from __future__ import annotations

import pytest

from grassmann_fcs.core.errors import (
    BosonError,
    CorpusFilterError,
    DocumentError,
    EntanglementError,
    GrassmannError,
    IntegrationError,
    ParseError,
    StateError,
    UsageError,
    categorize_error,
    error_response,
)


def test_error_response_includes_context():
    result = error_response(ValueError("bad input"), context={"tool": "fcs_analyze", "action": "solve"})

    assert result["ok"] is False
    assert result["error"]["code"] == "UNKNOWN_ERROR"
    assert result["error"]["message"] == "bad input"
    assert result["error"]["context"] == {"tool": "fcs_analyze", "action": "solve"}
    assert result["error"]["data"]["suggestions"]


@pytest.mark.parametrize(
    ("error", "code"),
    [
        (UsageError("x"), "USAGE_ERROR"),
        (DocumentError("x"), "DOCUMENT_ERROR"),
        (IntegrationError("x"), "INTEGRATION_ERROR"),
        (StateError("x"), "STATE_ERROR"),
        (GrassmannError("x"), "ALGEBRA_ERROR"),
        (EntanglementError("x"), "ENTANGLEMENT_ERROR"),
        (BosonError("x"), "BOSON_ERROR"),
        (CorpusFilterError("x"), "CORPUS_FILTER"),
        (RuntimeError("x"), "UNKNOWN_ERROR"),
    ],
)
def test_error_codes_are_consistent(error, code):
    info = categorize_error(error)
    assert info.code == code
    assert info.message == "x"
    assert len(info.suggestions) >= 1


def test_parse_error_context_merges_position_and_caller_context():
    err = ParseError("unexpected input", line=3, column=7, token="|")
    assert str(err) == "unexpected input (line 3, column 7 near '|')"

    result = error_response(err, context={"tool": "fcs_analyze"})
    context = result["error"]["context"]
    assert context == {"line": 3, "column": 7, "token": "|", "tool": "fcs_analyze"}


def test_empty_messages_fall_back_to_defaults():
    assert categorize_error(IntegrationError()).message == "Berezin integration failed."
    assert categorize_error(KeyError()).message == "KeyError"
