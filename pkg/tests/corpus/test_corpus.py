from __future__ import annotations

import json

import pytest

from grassmann_fcs.config import Config
from grassmann_fcs.core.errors import CorpusFilterError
from grassmann_fcs.corpus import corpus_case, corpus_cases, select_cases
from grassmann_fcs.quantum.entanglement import classify, concurrence2, matches_exactly
from grassmann_fcs.dsl import build_measure, build_state, build_target, build_weight, parse_document
from grassmann_fcs.quantum.weights import integrate_with_weight
from grassmann_fcs.service_layer.corpus_service import CorpusService, evaluate_case

CASES = corpus_cases()


def test_corpus_size_and_unique_names():
    names = [c.name for c in CASES]
    assert len(CASES) >= 25
    assert len(names) == len(set(names))
    assert names == sorted(names)
    assert all(c.anchor for c in CASES)


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_every_case_passes(case):
    result = evaluate_case(case, Config().tolerances)
    assert result.passed, result.notes
    assert result.fidelity >= 1 - 1e-9
    assert result.residual is not None and result.residual < 1e-9


@pytest.mark.parametrize(
    "name", ["psi_difference_plus", "psi_difference_minus", "phi_conjugate_plus", "psi_conjugate_minus"]
)
def test_single_mode_bell_cases_are_exact(name):
    case = corpus_case(name)
    doc = case.document
    out = integrate_with_weight(build_weight(doc), build_state(doc), build_measure(doc))
    assert case.comparison == "exact"
    assert matches_exactly(out, case.expected, 1e-12)
    assert abs(concurrence2(out) - 1) < 1e-12


def test_biseparable_cases_split_where_expected():
    for name, cuts in (
        ("zero1_w3", ((1,),)),
        ("psi12_phi34", ((1, 2),)),
        ("zero12_phi34_plus", ((1,), (2,), (1, 2))),
        ("psi12_zero3_plus_reached", ((3,),)),
        ("psi12_zero3_minus_reached", ((3,),)),
    ):
        case = corpus_case(name)
        doc = case.document
        out = integrate_with_weight(build_weight(doc), build_state(doc), build_measure(doc))
        report = classify(out)
        assert report.category == "biseparable"
        assert report.separating == cuts


@pytest.mark.parametrize("sign", ["plus", "minus"])
def test_published_psi12_zero3_target_is_reached_by_its_companion(sign):
    literal = corpus_case(f"psi12_zero3_{sign}")
    reached = corpus_case(f"psi12_zero3_{sign}_reached")
    assert literal.category == "product"
    doc = reached.document
    out = integrate_with_weight(build_weight(doc), build_state(doc), build_measure(doc))
    published = parse_document(f"target: {literal.published_target}\n")
    assert matches_exactly(out, build_target(published), 1e-12)


def test_filter_semantics():
    assert [c.name for c in select_cases("ghz*")] == ["ghz3", "ghz4"]
    assert len(select_cases(None)) == len(CASES)
    with pytest.raises(CorpusFilterError):
        select_cases("nonexistent")
    with pytest.raises(CorpusFilterError):
        corpus_case("nonexistent")


def test_published_target_divergence_is_noted():
    result = evaluate_case(corpus_case("plus_quad_case2"), Config().tolerances)
    assert result.passed
    assert any(n.startswith("published target PsiPlus") for n in result.notes)


def test_run_is_deterministic_and_order_stable():
    service = CorpusService(Config())
    first = json.dumps(service.run().to_payload())
    second = json.dumps(service.run().to_payload())
    assert first == second
    threaded = CorpusService(Config(corpus_workers=4)).run()
    assert json.dumps(threaded.to_payload()) == first


def test_report_counts_match_cases():
    report = CorpusService(Config()).run("maximal_*")
    payload = report.to_payload()
    assert payload["summary"]["passed"] + payload["summary"]["failed"] == len(payload["cases"])
    assert {c["status"] for c in payload["cases"]} <= {"pass", "fail"}
