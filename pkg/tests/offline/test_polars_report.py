from __future__ import annotations

import polars as pl

from grassmann_fcs.core.models import CaseResult, CorpusReport
from grassmann_fcs.polars_utils import report_frame, status_counts, worst_cases


def _report() -> CorpusReport:
    return CorpusReport(
        [
            CaseResult("a", True, 1.0, 0.0, 1e-15, "first", ["solver rank 1"]),
            CaseResult("b", False, 0.5, 3.14, None, "second", ["x", "y"]),
            CaseResult("c", True, 0.999999, -0.1, 2e-12, "third"),
        ]
    )


def test_report_frame_schema_and_rows():
    frame = report_frame(_report())
    assert frame.columns == ["name", "status", "fidelity", "phase", "residual", "anchor", "notes"]
    assert frame.height == 3
    assert frame.schema["residual"] == pl.Float64
    assert frame.row(1, named=True)["notes"] == "x; y"
    assert frame.row(1, named=True)["residual"] is None


def test_status_counts_match_report():
    report = _report()
    counts = status_counts(report_frame(report))
    assert counts == {"pass": report.passed, "fail": report.failed}
    assert status_counts(report_frame(CorpusReport([]))) == {"pass": 0, "fail": 0}


def test_worst_cases_sorted_by_fidelity():
    worst = worst_cases(report_frame(_report()), limit=2)
    assert [r["name"] for r in worst] == ["b", "c"]
    assert worst_cases(report_frame(_report()), limit=0) == []
