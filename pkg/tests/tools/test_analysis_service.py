from __future__ import annotations

import math

import pytest

from grassmann_fcs.config import Config
from grassmann_fcs.core.errors import BosonError, DocumentError, ParseError, UsageError
from grassmann_fcs.service_layer.analysis_service import AnalysisService, parse_kquad, parse_scalar
from tests.support.documents import BELL, NO_WEIGHT, UNREACHABLE

R2 = 1 / math.sqrt(2)


@pytest.fixture
def service() -> AnalysisService:
    return AnalysisService(Config())


def test_integrate_reports_state_classification_and_concurrence(service):
    out = service.integrate(BELL)
    assert out["modes"] == 1
    assert out["state"]["qubits"] == 2
    amps = out["state"]["amplitudes"]
    assert set(amps) == {"01", "10"}
    assert amps["01"][0] == pytest.approx(R2)
    assert amps["10"][0] == pytest.approx(R2)
    assert out["concurrence"] == pytest.approx(1.0)
    assert out["classification"]["category"] == "genuinely_entangled"


def test_solve_reports_null_space(service):
    out = service.solve(BELL)
    assert out["rank"] == 1
    assert out["null_dimension"] == 3
    assert len(out["null_space"]) == 3
    assert out["reachable"] is True
    assert out["residual"] < 1e-9


def test_solve_unreachable_target(service):
    out = service.solve(UNREACHABLE)
    assert out["reachable"] is False
    assert out["residual"] > 0.1


def test_concurrence_and_render(service):
    assert service.concurrence(BELL)["concurrence"] == pytest.approx(1.0)
    rendered = service.render(BELL)
    assert rendered.splitlines()[1] == "weight: (1/(2*sqrt(2))) * t1'"
    with pytest.raises(DocumentError):
        service.concurrence(NO_WEIGHT)
    with pytest.raises(ParseError):
        service.render("weight: (1 +\n")


def test_boson_check_payload(service):
    out = service.boson_check(parse_kquad(["i", "i", 1, 1]))
    assert out["boson_modulus_condition"] is True
    assert out["boson_phase_condition"] is False
    assert out["fermion_maximal"] is True
    assert out["k"][0] == [0.0, 1.0]
    assert out["fermion_weight"].endswith("* t1'")
    assert out["concurrence"] == pytest.approx(0.8186, abs=1e-3)
    assert out["fermion_output_concurrence"] == pytest.approx(1.0, abs=1e-12)
    assert out["fermion_solver_residual"] < 1e-9
    assert out["fermion_paths_agree"] is True


def test_boson_check_integrates_plus_case_two(service):
    out = service.boson_check(parse_kquad(["pi/2 + i", "pi + i", "pi/2 - i", "pi - i"], sign="plus"))
    assert out["boson_maximal"] is True
    assert out["fermion_maximal"] is False
    assert out["fermion_weight"] is None
    assert out["fermion_output_concurrence"] == pytest.approx(0.8, abs=1e-12)
    assert out["fermion_solver_residual"] == pytest.approx(math.sqrt(0.1), abs=1e-9)
    assert out["fermion_paths_agree"] is True
    assert "|01>" in out["fermion_output"] and "|10>" in out["fermion_output"]


def test_symmetric_sweep(service):
    out = service.symmetric_sweep([1, -1, "2", "i", "0.5 - 0.5*i"])
    assert out == {"checked": 20, "fermion_maximal": 18, "counterexamples": []}


def test_scalar_and_quad_parsing():
    assert parse_scalar("1/sqrt(2)") == pytest.approx(R2)
    assert parse_scalar("-i") == -1j
    assert parse_scalar(2) == 2
    with pytest.raises(UsageError):
        parse_scalar(True)
    with pytest.raises(UsageError):
        parse_kquad([1, 2, 3])
    with pytest.raises(UsageError):
        parse_kquad([1, 2, 3, 4], sign="times")
    with pytest.raises(BosonError):
        parse_kquad([1, 2, 3, 4], alpha="0")
    quad = parse_kquad(["pi/2 + i", 1, 1, 1], sign="plus", alpha="1/2")
    assert quad.sign == "+"
    assert quad.alpha == 0.5
    assert quad.k1 == pytest.approx(math.pi / 2 + 1j)
