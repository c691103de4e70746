from __future__ import annotations

import polars as pl

from .core.models import CorpusReport

REPORT_SCHEMA = {
    "name": pl.String,
    "status": pl.String,
    "fidelity": pl.Float64,
    "phase": pl.Float64,
    "residual": pl.Float64,
    "anchor": pl.String,
    "notes": pl.String,
}


def report_frame(report: CorpusReport) -> pl.DataFrame:
    """One row per case, notes joined with '; '."""
    rows = [
        {
            "name": c.name,
            "status": c.status,
            "fidelity": c.fidelity,
            "phase": c.phase,
            "residual": c.residual,
            "anchor": c.anchor,
            "notes": "; ".join(c.notes),
        }
        for c in report.cases
    ]
    return pl.DataFrame(rows, schema=REPORT_SCHEMA)


def status_counts(frame: pl.DataFrame) -> dict[str, int]:
    counts = frame.group_by("status").agg(pl.len().alias("n"))
    out = {"pass": 0, "fail": 0}
    for row in counts.iter_rows(named=True):
        out[row["status"]] = int(row["n"])
    return out


def worst_cases(frame: pl.DataFrame, limit: int = 5) -> list[dict[str, object]]:
    """Lowest-fidelity cases first; ties by name."""
    if limit <= 0:
        return []
    return frame.sort(["fidelity", "name"]).head(limit).to_dicts()
