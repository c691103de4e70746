"""Forward weight integration and the inverse weight-recovery problem."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..algebra.fock import GrassmannState
from ..algebra.grassmann import (
    GrassmannElement,
    MeasureList,
    berezin_integrate,
    merge_sign,
    multiply,
)
from ..core.errors import IntegrationError, StateError
from ..core.models import QubitState

logger = logging.getLogger(__name__)

WeightFunction = GrassmannElement

DEFAULT_RCOND = 1e-10


@dataclass(slots=True)
class WeightSolution:
    particular: WeightFunction
    null_space: tuple[WeightFunction, ...]
    residual: float
    rank: int

    @property
    def null_dimension(self) -> int:
        return len(self.null_space)

    def reachable(self, tol: float = 1e-9) -> bool:
        return self.residual < tol


def integrate_with_weight(w: WeightFunction, s: GrassmannState, m: MeasureList) -> QubitState:
    """Berezin-integrate w·A_b for every ket b; leftover generators are an error."""
    vec = np.zeros(2**s.qubits, dtype=complex)
    for ket, amp in s.items():
        value = berezin_integrate(multiply(w, amp), m)
        if not value.is_scalar():
            logger.debug(
                "integration_failed",
                extra={"ket": str(ket), "measure": str(m), "degree": value.degree},
            )
            raise IntegrationError(
                f"Grassmann content survives integration on {ket}; "
                f"the measure {m} does not cover every generator"
            )
        vec[ket.index] = value.body
    return QubitState(s.qubits, vec)


def weight_basis(m: MeasureList) -> list[int]:
    """All monomials over the measure's generators, ordered by bitmask."""
    top = m.mask
    basis = []
    sub = top
    while True:
        basis.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & top
    return sorted(basis)


def weight_map(s: GrassmannState, m: MeasureList) -> np.ndarray:
    """Matrix from weight-monomial coefficients to output amplitudes.

    Only the complement of each amplitude term within the measure survives
    integration, so every term contributes to exactly one column.
    """
    top = m.mask
    basis = weight_basis(m)
    column = {mask: j for j, mask in enumerate(basis)}
    top_value = berezin_integrate(GrassmannElement({top: 1}), m).body
    matrix = np.zeros((2**s.qubits, len(basis)), dtype=complex)
    for ket, amp in s.items():
        for term, coeff in amp.items():
            if term & ~top:
                raise IntegrationError(
                    f"amplitude of {ket} carries generators outside the measure {m}"
                )
            partner = top ^ term
            matrix[ket.index, column[partner]] += merge_sign(partner, term) * coeff * top_value
    return matrix


def element_from_vector(vec: np.ndarray, m: MeasureList) -> WeightFunction:
    basis = weight_basis(m)
    return GrassmannElement({mask: complex(c) for mask, c in zip(basis, vec, strict=True)})


def solve_weight(
    s: GrassmannState,
    target: QubitState,
    m: MeasureList,
    *,
    rcond: float = DEFAULT_RCOND,
) -> WeightSolution:
    """Minimum-norm least-squares weight, null-space basis and residual."""
    if target.qubits != s.qubits:
        raise StateError(
            f"target has {target.qubits} qubits but the state has {s.qubits}"
        )
    matrix = weight_map(s, m)
    rhs = np.asarray(target.amplitudes, dtype=complex)
    solution, _, rank, _ = np.linalg.lstsq(matrix, rhs, rcond=rcond)
    kernel = scipy.linalg.null_space(matrix, rcond=rcond)
    residual = float(np.linalg.norm(matrix @ solution - rhs))
    logger.info(
        "weight_solved",
        extra={"rank": int(rank), "null_dimension": kernel.shape[1], "residual": residual},
    )
    return WeightSolution(
        particular=element_from_vector(solution, m),
        null_space=tuple(element_from_vector(kernel[:, j], m) for j in range(kernel.shape[1])),
        residual=residual,
        rank=int(rank),
    )
