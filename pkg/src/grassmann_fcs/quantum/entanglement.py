"""Concurrence, Schmidt profiles and classification of integration outputs."""

from __future__ import annotations

import math
from collections.abc import Iterable
from itertools import combinations

import numpy as np

from ..core.errors import EntanglementError
from ..core.models import (
    BipartitionReport,
    ClassificationReport,
    NamedMatch,
    QubitState,
)
from .named import named_states

SCHMIDT_CUTOFF = 1e-9
MATCH_TOL = 1e-9
ZERO_NORM = 1e-12


def _require_nonzero(s: QubitState) -> float:
    norm = s.norm
    if norm < ZERO_NORM:
        raise EntanglementError("the state is zero")
    return norm


def concurrence2(s: QubitState) -> float:
    """2|ad − bc| of the normalized two-qubit amplitudes."""
    if s.qubits != 2:
        raise EntanglementError(f"concurrence needs 2 qubits, got {s.qubits}")
    norm = _require_nonzero(s)
    a, b, c, d = s.amplitudes / norm
    return min(1.0, float(2 * abs(a * d - b * c)))


def _normalize_partition(partition: Iterable[int], qubits: int) -> tuple[int, ...]:
    part = tuple(sorted(set(partition)))
    if not part or len(part) >= qubits:
        raise EntanglementError("a bipartition needs a nonempty proper subset of the qubits")
    if part[0] < 1 or part[-1] > qubits:
        raise EntanglementError(f"qubit labels run from 1 to {qubits}, got {part}")
    return part


def schmidt_profile(
    s: QubitState, partition: Iterable[int], *, cutoff: float = SCHMIDT_CUTOFF
) -> BipartitionReport:
    """Singular values across the cut partition | rest (1-based qubit labels)."""
    part = _normalize_partition(partition, s.qubits)
    _require_nonzero(s)
    rest = [q for q in range(1, s.qubits + 1) if q not in part]
    tensor = s.amplitudes.reshape((2,) * s.qubits)
    axes = [q - 1 for q in part] + [q - 1 for q in rest]
    matrix = np.transpose(tensor, axes).reshape(2 ** len(part), 2 ** len(rest))
    values = np.linalg.svd(matrix, compute_uv=False)
    threshold = cutoff * float(values[0])
    rank = int(np.sum(values > threshold))
    return BipartitionReport(
        partition=part,
        schmidt_rank=rank,
        schmidt_values=tuple(float(v) for v in values),
    )


def canonical_bipartitions(qubits: int) -> list[tuple[int, ...]]:
    """One representative per cut: the smaller side, ties keep qubit 1."""
    labels = range(1, qubits + 1)
    out: list[tuple[int, ...]] = []
    for size in range(1, qubits // 2 + 1):
        for part in combinations(labels, size):
            if 2 * size == qubits and 1 not in part:
                continue
            out.append(part)
    return out


def canonical_partition(partition: Iterable[int], qubits: int) -> tuple[int, ...]:
    part = _normalize_partition(partition, qubits)
    other = tuple(q for q in range(1, qubits + 1) if q not in part)
    if len(other) < len(part) or (len(other) == len(part) and 1 in other):
        return other
    return part


def fidelity_up_to_phase(u: QubitState, v: QubitState) -> tuple[float, float]:
    """(|⟨u,v⟩|/(‖u‖‖v‖), arg⟨u,v⟩) with the phase in (−π, π]."""
    if u.qubits != v.qubits:
        raise EntanglementError(f"cannot compare {u.qubits}- and {v.qubits}-qubit states")
    nu = _require_nonzero(u)
    nv = _require_nonzero(v)
    overlap = complex(np.vdot(u.amplitudes, v.amplitudes))
    fidelity = min(1.0, abs(overlap) / (nu * nv))
    phase = math.atan2(overlap.imag, overlap.real) if abs(overlap) > ZERO_NORM else 0.0
    if phase <= -math.pi:
        phase = math.pi
    return fidelity, phase


def matches_up_to_phase(u: QubitState, v: QubitState, tol: float = MATCH_TOL) -> bool:
    if u.qubits != v.qubits:
        return False
    if abs(u.norm - v.norm) > tol:
        return False
    if u.norm < ZERO_NORM:
        return v.norm < ZERO_NORM
    fidelity, _ = fidelity_up_to_phase(u, v)
    return fidelity >= 1 - tol


def matches_exactly(u: QubitState, v: QubitState, tol: float = 1e-12) -> bool:
    if u.qubits != v.qubits:
        return False
    return bool(np.max(np.abs(u.amplitudes - v.amplitudes)) <= tol)


def best_named_match(s: QubitState, tol: float = MATCH_TOL) -> NamedMatch | None:
    best: NamedMatch | None = None
    for entry in named_states():
        if entry.state.qubits != s.qubits:
            continue
        fidelity, phase = fidelity_up_to_phase(s, entry.state)
        if best is None or fidelity > best.fidelity + 1e-15:
            best = NamedMatch(entry.label, fidelity, phase)
    if best is None or best.fidelity < 1 - tol:
        return None
    return best


def classify(s: QubitState, *, cutoff: float = SCHMIDT_CUTOFF) -> ClassificationReport:
    if not 2 <= s.qubits <= 8:
        raise EntanglementError(f"classification supports 2 to 8 qubits, got {s.qubits}")
    _require_nonzero(s)
    reports = tuple(
        schmidt_profile(s, part, cutoff=cutoff) for part in canonical_bipartitions(s.qubits)
    )
    singles = [r for r in reports if len(r.partition) == 1]
    separating = tuple(r.partition for r in reports if r.schmidt_rank == 1)
    if all(r.schmidt_rank == 1 for r in singles):
        category = "product"
    elif separating:
        category = "biseparable"
    else:
        category = "genuinely_entangled"
    return ClassificationReport(
        category=category,
        separating=separating,
        bipartitions=reports,
        named_match=best_named_match(s),
    )
