"""Canonical named qubit states used for targets and classification."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cache

import numpy as np

from ..core.models import QubitState

_R2 = 1 / math.sqrt(2)
_BL = cmath.exp(1j * math.pi / 4)


@dataclass(frozen=True, slots=True)
class NamedState:
    key: str  # DSL spelling, e.g. "PsiPlus", "W3"
    label: str  # report spelling, e.g. "Psi+", "W(3)"
    state: QubitState


def w_state(n: int) -> QubitState:
    vec = np.zeros(2**n, dtype=complex)
    for q in range(n):
        vec[1 << q] = 1 / math.sqrt(n)
    return QubitState(n, vec)


def ghz_state(n: int) -> QubitState:
    vec = np.zeros(2**n, dtype=complex)
    vec[0] = vec[-1] = _R2
    return QubitState(n, vec)


@cache
def named_states() -> tuple[NamedState, ...]:
    table = [
        NamedState("PsiPlus", "Psi+", QubitState.from_kets({"01": _R2, "10": _R2})),
        NamedState("PsiMinus", "Psi-", QubitState.from_kets({"01": _R2, "10": -_R2})),
        NamedState("PhiPlus", "Phi+", QubitState.from_kets({"00": _R2, "11": _R2})),
        NamedState("PhiMinus", "Phi-", QubitState.from_kets({"00": _R2, "11": -_R2})),
        NamedState(
            "BellLikePlus",
            "Psi+_BL",
            QubitState.from_kets({"01": _R2 * _BL, "10": _R2 * _BL.conjugate()}),
        ),
        NamedState(
            "BellLikeMinus",
            "Psi-_BL",
            QubitState.from_kets({"01": _R2 * _BL, "10": -_R2 * _BL.conjugate()}),
        ),
    ]
    table += [NamedState(f"W{n}", f"W({n})", w_state(n)) for n in range(3, 9)]
    table += [NamedState(f"GHZ{n}", f"GHZ({n})", ghz_state(n)) for n in range(2, 9)]
    return tuple(table)


def named_state(key: str) -> NamedState:
    for entry in named_states():
        if entry.key == key:
            return entry
    raise KeyError(key)


def named_keys() -> list[str]:
    return [entry.key for entry in named_states()]
