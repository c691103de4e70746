from __future__ import annotations

import io
import json

import jsonschema
import pytest

from grassmann_fcs.cli import main
from grassmann_fcs.service_layer import analysis_service
from tests.support.documents import BELL, BROKEN, NO_WEIGHT, UNREACHABLE

REPORT_SCHEMA = {
    "type": "object",
    "required": ["summary", "cases"],
    "properties": {
        "summary": {
            "type": "object",
            "required": ["passed", "failed"],
            "properties": {"passed": {"type": "integer"}, "failed": {"type": "integer"}},
        },
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "fidelity", "phase", "residual", "anchor", "notes"],
                "properties": {
                    "status": {"enum": ["pass", "fail"]},
                    "fidelity": {"type": "number"},
                    "residual": {"type": ["number", "null"]},
                    "notes": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
    },
}


@pytest.fixture
def doc(tmp_path):
    def write(text: str):
        path = tmp_path / "doc.fcs"
        path.write_text(text)
        return str(path)

    return write


def test_verify_corpus_json_report(capsys):
    assert main(["verify-corpus", "--case", "psi_*", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, REPORT_SCHEMA)
    assert payload["summary"]["failed"] == 0
    assert all(c["name"].startswith("psi_") for c in payload["cases"])


def test_verify_corpus_text_and_list(capsys):
    assert main(["verify-corpus", "--case", "ghz3"]) == 0
    out = capsys.readouterr().out
    assert "PASS ghz3" in out
    assert "1 passed, 0 failed" in out

    assert main(["verify-corpus", "--list"]) == 0
    assert "plus_quad_case2" in capsys.readouterr().out


@pytest.mark.slow
def test_full_corpus_passes(capsys):
    assert main(["verify-corpus"]) == 0


def test_unknown_case_is_a_usage_error(capsys):
    assert main(["verify-corpus", "--case", "nothing*"]) == 3
    assert "error:" in capsys.readouterr().err


def test_integrate_text_and_json(doc, capsys):
    path = doc(BELL)
    assert main(["integrate", "--input", path]) == 0
    out = capsys.readouterr().out
    assert "|01>" in out and "|10>" in out
    assert "concurrence: 1.000000000000" in out

    assert main(["integrate", "--input", path, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["state"]["qubits"] == 2


def test_integrate_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(BELL))
    assert main(["concurrence", "--input", "-"]) == 0
    assert capsys.readouterr().out.strip() == "1.000000000000"


def test_solve_weight_exit_codes(doc, capsys):
    assert main(["solve-weight", "--input", doc(BELL)]) == 0
    assert "null space dimension: 3" in capsys.readouterr().out
    assert main(["solve-weight", "--input", doc(UNREACHABLE), "--json"]) == 1
    assert json.loads(capsys.readouterr().out)["reachable"] is False


def test_render_prints_canonical_document(doc, capsys):
    assert main(["render", "--input", doc("weight:  1/2\n")]) == 0
    assert capsys.readouterr().out == "weight: 1/2\n"


def test_parse_error_exits_2(doc, capsys):
    assert main(["integrate", "--input", doc(BROKEN)]) == 2
    assert "line 1" in capsys.readouterr().err

    assert main(["integrate", "--input", doc(BROKEN), "--json"]) == 2
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is False
    assert payload["error"]["code"] == "PARSE_ERROR"
    assert payload["error"]["context"]["command"] == "integrate"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["integrate"],
        ["integrate", "--input", "/nonexistent/doc.fcs"],
        ["boson-check", "--k", "1,2,3"],
        ["boson-check", "--k", "1,,3,4"],
        ["boson-check", "--k", "1,2,3,4", "--alpha", "1,2,3"],
        ["boson-check", "--k", "1,2,3,4", "--sign", "times"],
    ],
)
def test_usage_errors_exit_3(argv, capsys):
    assert main(argv) == 3
    assert capsys.readouterr().err


def test_missing_section_exits_3(doc, capsys):
    assert main(["concurrence", "--input", doc(NO_WEIGHT)]) == 3


def test_bad_environment_exits_3(monkeypatch, capsys):
    monkeypatch.setenv("FCS_FIDELITY_TOL", "zero")
    assert main(["verify-corpus", "--list"]) == 3
    assert "FCS_FIDELITY_TOL" in capsys.readouterr().err


def test_boson_check(capsys):
    assert main(["boson-check", "--k", "i,i,1,1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["boson_maximal"] is False
    assert payload["fermion_maximal"] is True
    assert payload["fermion_paths_agree"] is True
    assert payload["fermion_output_concurrence"] == pytest.approx(1.0, abs=1e-12)

    assert main(["boson-check", "--k=-1,1,1,-1", "--alpha", "0.5,0.5"]) == 0
    assert "boson concurrence" in capsys.readouterr().out

    argv = ["boson-check", "--k", "pi/2 + i,pi + i,pi/2 - i,pi - i", "--sign", "plus", "--json"]
    assert main(argv) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["boson_maximal"] is True
    assert payload["fermion_maximal"] is False
    assert payload["fermion_output_concurrence"] == pytest.approx(0.8, abs=1e-12)
    assert payload["fermion_paths_agree"] is True


def test_boson_check_exits_1_when_the_fermion_paths_disagree(monkeypatch, capsys):
    def split(q, tol=1e-9):
        check = real_check(q, tol)
        check.closed_form_maximal = not check.closed_form_maximal
        return check

    real_check = analysis_service.fermion_quad_check
    monkeypatch.setattr(analysis_service, "fermion_quad_check", split)
    assert main(["boson-check", "--k", "i,i,1,1"]) == 1
    assert "agree" in capsys.readouterr().out


def test_boson_sweep(capsys):
    assert main(["boson-sweep", "--values", "1,-1,2,i", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["counterexamples"] == []
    assert payload["checked"] == 12


def test_runs_are_recorded(monkeypatch, tmp_path, doc, capsys):
    history = tmp_path / "hist" / "runs.jsonl"
    monkeypatch.setenv("FCS_RUN_HISTORY", str(history))
    main(["integrate", "--input", doc(BELL)])
    main(["integrate", "--input", doc(BROKEN)])
    records = [json.loads(line) for line in history.read_text().splitlines()]
    assert [r["status"] for r in records] == ["success", "error"]
    assert records[0]["qubits"] == 2
