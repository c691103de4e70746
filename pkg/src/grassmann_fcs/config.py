from __future__ import annotations

import os
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ToleranceConfig:
    """Numeric tolerances used by comparisons and the inverse solver."""

    fidelity: float = 1e-9
    exact: float = 1e-12
    solver_rcond: float = 1e-10
    schmidt_cutoff: float = 1e-9


@dataclass(frozen=True)
class LoggingConfig:
    """Run-history logging configuration."""

    run_history_path: str | None = None
    artifact_root: str | None = None
    enabled: bool = True


@dataclass(frozen=True)
class Config:
    """Main application configuration."""

    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    corpus_workers: int = 1  # >1 evaluates corpus cases on a thread pool
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> Config:
        """Load configuration from environment variables."""
        return cls(
            tolerances=ToleranceConfig(
                fidelity=_env_float("FCS_FIDELITY_TOL", 1e-9),
                exact=_env_float("FCS_EXACT_TOL", 1e-12),
                solver_rcond=_env_float("FCS_SOLVER_RCOND", 1e-10),
                schmidt_cutoff=_env_float("FCS_SCHMIDT_CUTOFF", 1e-9),
            ),
            logging=LoggingConfig(
                run_history_path=os.getenv("FCS_RUN_HISTORY"),
                artifact_root=os.getenv("FCS_ARTIFACT_ROOT"),
                enabled=os.getenv("FCS_LOGGING_ENABLED", "true").lower() == "true",
            ),
            corpus_workers=max(1, _env_int("FCS_CORPUS_WORKERS", 1)),
            log_level=os.getenv("FCS_LOG_LEVEL", "WARNING"),
        )


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"{name} must be a number, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {raw!r}")
    return value


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
