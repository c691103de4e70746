import pytest


@pytest.fixture(autouse=True)
def _set_test_env(monkeypatch):
    # Keep runs out of the user's history file and pin default tolerances
    monkeypatch.setenv("FCS_RUN_HISTORY", "disabled")
    for name in (
        "FCS_ARTIFACT_ROOT",
        "FCS_FIDELITY_TOL",
        "FCS_EXACT_TOL",
        "FCS_SOLVER_RCOND",
        "FCS_SCHMIDT_CUTOFF",
        "FCS_CORPUS_WORKERS",
        "FCS_LOG_LEVEL",
        "FCS_LOGGING_ENABLED",
    ):
        monkeypatch.delenv(name, raising=False)
    yield
