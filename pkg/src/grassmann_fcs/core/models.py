from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np

from .errors import BosonError

Category = Literal["product", "biseparable", "genuinely_entangled"]
Comparison = Literal["exact", "up_to_global_phase"]
QuadSign = Literal["+", "-"]


@dataclass(frozen=True, slots=True, eq=False)
class QubitState:
    """Complex amplitudes over n-qubit basis kets, big-endian bit order."""

    qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        vec = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if self.qubits < 1 or vec.shape != (2**self.qubits,):
            raise ValueError(f"expected {2**self.qubits} amplitudes for {self.qubits} qubits")
        if not np.all(np.isfinite(vec)):
            raise ValueError("amplitudes must be finite")
        vec.setflags(write=False)
        object.__setattr__(self, "amplitudes", vec)

    @classmethod
    def from_kets(cls, kets: Mapping[str, complex]) -> QubitState:
        """Build from {"01": amp, ...}; every key must have the same length."""
        lengths = {len(k) for k in kets}
        if len(lengths) != 1:
            raise ValueError("all kets must have the same number of qubits")
        n = lengths.pop()
        vec = np.zeros(2**n, dtype=complex)
        for bits, amp in kets.items():
            vec[int(bits, 2)] += amp
        return cls(n, vec)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> QubitState:
        return QubitState(self.qubits, self.amplitudes / self.norm)

    def nonzero_kets(self, tol: float = 1e-12) -> list[tuple[str, complex]]:
        return [
            (format(i, f"0{self.qubits}b"), complex(a))
            for i, a in enumerate(self.amplitudes)
            if abs(a) > tol
        ]

    def to_payload(self) -> dict[str, Any]:
        return {
            "qubits": self.qubits,
            "norm": self.norm,
            "amplitudes": {
                bits: [amp.real, amp.imag] for bits, amp in self.nonzero_kets()
            },
        }


@dataclass(slots=True)
class BipartitionReport:
    partition: tuple[int, ...]
    schmidt_rank: int
    schmidt_values: tuple[float, ...]

    def to_payload(self) -> dict[str, Any]:
        return {
            "partition": list(self.partition),
            "schmidt_rank": self.schmidt_rank,
            "schmidt_values": list(self.schmidt_values),
        }


@dataclass(slots=True)
class NamedMatch:
    name: str
    fidelity: float
    phase: float


@dataclass(slots=True)
class ClassificationReport:
    category: Category
    separating: tuple[tuple[int, ...], ...] = ()
    bipartitions: tuple[BipartitionReport, ...] = ()
    named_match: NamedMatch | None = None

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "category": self.category,
            "separating": [list(p) for p in self.separating],
            "bipartitions": [b.to_payload() for b in self.bipartitions],
        }
        if self.named_match is not None:
            payload["named_match"] = {
                "name": self.named_match.name,
                "fidelity": self.named_match.fidelity,
                "phase": self.named_match.phase,
            }
        return payload


@dataclass(frozen=True, slots=True)
class BosonSuperposition:
    """μ|α⟩|β⟩ + ν|γ⟩|δ⟩ over bosonic coherent states."""

    mu: complex
    nu: complex
    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self) -> None:
        if self.mu == 0 and self.nu == 0:
            raise BosonError("mu and nu cannot both be zero")


@dataclass(frozen=True, slots=True)
class KQuad:
    """|k₁α⟩|k₂α⟩ ± |k₃α⟩|k₄α⟩."""

    k1: complex
    k2: complex
    k3: complex
    k4: complex
    sign: QuadSign = "-"
    alpha: complex = 1

    def __post_init__(self) -> None:
        if self.sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")

    @property
    def ks(self) -> tuple[complex, complex, complex, complex]:
        return (complex(self.k1), complex(self.k2), complex(self.k3), complex(self.k4))


@dataclass(slots=True)
class MaximalityReport:
    concurrence: float
    f13: complex
    f24: complex
    boson_modulus_condition: bool
    boson_phase_condition: bool
    fermion_maximal: bool
    fermion_m: complex | None = None
    fermion_phi: float | None = None
    alpha: complex = 1
    sign: QuadSign = "-"

    @property
    def boson_maximal(self) -> bool:
        return self.boson_modulus_condition and self.boson_phase_condition

    def to_payload(self) -> dict[str, Any]:
        def cx(z: complex | None) -> list[float] | None:
            return None if z is None else [z.real, z.imag]

        return {
            "sign": self.sign,
            "alpha": cx(complex(self.alpha)),
            "concurrence": self.concurrence,
            "f13": cx(self.f13),
            "f24": cx(self.f24),
            "boson_modulus_condition": self.boson_modulus_condition,
            "boson_phase_condition": self.boson_phase_condition,
            "boson_maximal": self.boson_maximal,
            "fermion_maximal": self.fermion_maximal,
            "fermion_m": cx(self.fermion_m),
            "fermion_phi": self.fermion_phi,
        }


@dataclass(slots=True)
class CaseResult:
    name: str
    passed: bool
    fidelity: float
    phase: float
    residual: float | None
    anchor: str
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_payload(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "fidelity": self.fidelity,
            "phase": self.phase,
            "residual": self.residual,
            "anchor": self.anchor,
            "notes": list(self.notes),
        }


@dataclass(slots=True)
class CorpusReport:
    cases: list[CaseResult]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.passed)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_payload(self) -> dict[str, Any]:
        return {
            "summary": {"passed": self.passed, "failed": self.failed},
            "cases": [c.to_payload() for c in self.cases],
        }
