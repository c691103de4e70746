"""Grassmann-valued qubit kets in left-normal form and single-mode operators.

A GrassmannState stores Σ A_b |b⟩ with every Grassmann factor A_b standing to
the left of the Fock ket. Moving an element past a ket with p one-bits applies
the grading automorphism p times (θ|1⟩ = −|1⟩θ, θ|0⟩ = |0⟩θ).
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from ..core.errors import StateError
from ..core.models import QubitState
from .grassmann import (
    MAX_MODES,
    ZERO_DROP,
    GeneratorId,
    GrassmannElement,
    conjugate,
    exp_nilpotent,
    multiply,
)


@dataclass(frozen=True, order=True, slots=True)
class BasisKet:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.bits:
            raise StateError("a basis ket needs at least one qubit")
        if any(b not in (0, 1) for b in self.bits):
            raise StateError(f"basis ket bits must be 0/1, got {self.bits}")

    @classmethod
    def parse(cls, text: str) -> BasisKet:
        return cls(tuple(int(ch) for ch in text))

    @property
    def ones(self) -> int:
        return sum(self.bits)

    @property
    def index(self) -> int:
        """Big-endian integer value of the bit string."""
        out = 0
        for b in self.bits:
            out = (out << 1) | b
        return out

    def __add__(self, other: BasisKet) -> BasisKet:
        return BasisKet(self.bits + other.bits)

    def __str__(self) -> str:
        return "|" + "".join(str(b) for b in self.bits) + ">"


@dataclass(frozen=True, slots=True)
class FermionLabel:
    """Coherent label kθ (or kθ* when the generator is conjugated)."""

    scale: complex
    generator: GeneratorId


class GrassmannState:
    """Multi-qubit ket with GrassmannElement amplitudes in left-normal form."""

    __slots__ = ("qubits", "_amplitudes")

    def __init__(self, qubits: int, amplitudes: Mapping[BasisKet, GrassmannElement] | None = None):
        if qubits < 1:
            raise StateError("a state needs at least one qubit")
        clean: dict[BasisKet, GrassmannElement] = {}
        for ket, amp in (amplitudes or {}).items():
            if len(ket.bits) != qubits:
                raise StateError(f"ket {ket} does not have {qubits} qubits")
            if not amp.is_zero():
                clean[ket] = amp
        self.qubits = qubits
        self._amplitudes = MappingProxyType(dict(sorted(clean.items())))

    @classmethod
    def fock(cls, bits: Sequence[int] | str, coefficient: complex = 1) -> GrassmannState:
        ket = BasisKet.parse(bits) if isinstance(bits, str) else BasisKet(tuple(bits))
        return cls(len(ket.bits), {ket: GrassmannElement.scalar(coefficient)})

    @classmethod
    def vacuum(cls, qubits: int) -> GrassmannState:
        return cls.fock([0] * qubits)

    @classmethod
    def zero(cls, qubits: int) -> GrassmannState:
        return cls(qubits)

    @property
    def amplitudes(self) -> Mapping[BasisKet, GrassmannElement]:
        return self._amplitudes

    def amplitude(self, ket: BasisKet | str) -> GrassmannElement:
        key = BasisKet.parse(ket) if isinstance(ket, str) else ket
        return self._amplitudes.get(key, GrassmannElement.zero())

    def items(self) -> Iterator[tuple[BasisKet, GrassmannElement]]:
        return iter(self._amplitudes.items())

    def is_zero(self) -> bool:
        return not self._amplitudes

    @property
    def modes(self) -> frozenset[int]:
        out: set[int] = set()
        for amp in self._amplitudes.values():
            out |= amp.modes
        return frozenset(out)

    def left_multiply(self, element: GrassmannElement) -> GrassmannState:
        return GrassmannState(
            self.qubits, {k: multiply(element, a) for k, a in self._amplitudes.items()}
        )

    def scaled(self, factor: complex) -> GrassmannState:
        return GrassmannState(self.qubits, {k: a.scaled(factor) for k, a in self._amplitudes.items()})

    def __add__(self, other: GrassmannState) -> GrassmannState:
        return add_states(self, other)

    def __sub__(self, other: GrassmannState) -> GrassmannState:
        return add_states(self, other.scaled(-1))

    def __neg__(self) -> GrassmannState:
        return self.scaled(-1)

    def approx_equal(self, other: GrassmannState, tol: float = ZERO_DROP) -> bool:
        if self.qubits != other.qubits:
            return False
        keys = set(self._amplitudes) | set(other._amplitudes)
        return all(self.amplitude(k).approx_equal(other.amplitude(k), tol) for k in keys)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrassmannState):
            return NotImplemented
        return self.approx_equal(other)

    __hash__ = None  # type: ignore[assignment]

    def to_qubit_state(self) -> QubitState:
        """Ordinary amplitude vector; the state must carry no Grassmann content."""
        vec = np.zeros(2**self.qubits, dtype=complex)
        for ket, amp in self._amplitudes.items():
            if not amp.is_scalar():
                raise StateError(f"amplitude of {ket} still carries Grassmann generators")
            vec[ket.index] = amp.body
        return QubitState(self.qubits, vec)

    def __repr__(self) -> str:
        parts = [f"{amp!r}{ket}" for ket, amp in self._amplitudes.items()]
        return f"GrassmannState({self.qubits}: {' + '.join(parts) or '0'})"


def add_states(a: GrassmannState, b: GrassmannState) -> GrassmannState:
    if a.qubits != b.qubits:
        raise StateError(f"cannot add a {a.qubits}-qubit state to a {b.qubits}-qubit state")
    out = dict(a.amplitudes)
    for ket, amp in b.items():
        out[ket] = out[ket] + amp if ket in out else amp
    return GrassmannState(a.qubits, out)


def coherent_ket(label: FermionLabel) -> GrassmannState:
    """|kθ⟩ = exp(−|k|²θ*θ/2)(|0⟩ − kθ|1⟩); θ and θ* swap for a conjugated label."""
    g = label.generator
    k = complex(label.scale)
    pair = GrassmannElement.product_of([g.star(), g])
    envelope = exp_nilpotent(pair.scaled(-abs(k) ** 2 / 2))
    excited = multiply(envelope, GrassmannElement.generator(g, -k))
    return GrassmannState(1, {BasisKet((0,)): envelope, BasisKet((1,)): excited})


def even_odd_ket(label: FermionLabel, sign: int) -> GrassmannState:
    """|kθ⟩ ± |−kθ⟩."""
    mirrored = FermionLabel(-label.scale, label.generator)
    other = coherent_ket(mirrored)
    return add_states(coherent_ket(label), other if sign >= 0 else other.scaled(-1))


def tensor_product(a: GrassmannState, b: GrassmannState) -> GrassmannState:
    """a ⊗ b with b's amplitudes moved left past a's kets."""
    out: dict[BasisKet, GrassmannElement] = {}
    for ka, amp_a in a.items():
        for kb, amp_b in b.items():
            ket = ka + kb
            term = multiply(amp_a, amp_b.parity_flip(ka.ones))
            out[ket] = out[ket] + term if ket in out else term
    return GrassmannState(a.qubits + b.qubits, out)


def inner(a: GrassmannState, b: GrassmannState) -> GrassmannElement:
    """⟨a|b⟩ with bra-side factors conjugated, reversed and moved past ⟨x|."""
    if a.qubits != b.qubits:
        raise StateError(f"inner product of {a.qubits}- and {b.qubits}-qubit states")
    total = GrassmannElement.zero()
    for ket, amp_b in b.items():
        amp_a = a.amplitudes.get(ket)
        if amp_a is None:
            continue
        total = total + multiply(conjugate(amp_a), amp_b).parity_flip(ket.ones)
    return total


@dataclass(frozen=True, slots=True)
class ModeOperator:
    """Σ E_ij |i⟩⟨j| on one mode, Grassmann factors written left of |i⟩⟨j|."""

    entries: tuple[tuple[GrassmannElement, GrassmannElement], tuple[GrassmannElement, GrassmannElement]]

    @classmethod
    def from_entries(cls, e00=0, e01=0, e10=0, e11=0) -> ModeOperator:
        def el(x) -> GrassmannElement:
            return x if isinstance(x, GrassmannElement) else GrassmannElement.scalar(x)

        return cls(((el(e00), el(e01)), (el(e10), el(e11))))

    @classmethod
    def identity(cls) -> ModeOperator:
        return cls.from_entries(1, 0, 0, 1)

    def entry(self, i: int, j: int) -> GrassmannElement:
        return self.entries[i][j]

    def __add__(self, other: ModeOperator) -> ModeOperator:
        return ModeOperator.from_entries(
            *(self.entry(i, j) + other.entry(i, j) for i in (0, 1) for j in (0, 1))
        )

    def scaled(self, factor: complex) -> ModeOperator:
        return ModeOperator.from_entries(
            *(self.entry(i, j).scaled(factor) for i in (0, 1) for j in (0, 1))
        )

    def __matmul__(self, other: ModeOperator) -> ModeOperator:
        out = []
        for i in (0, 1):
            for l in (0, 1):
                acc = GrassmannElement.zero()
                for j in (0, 1):
                    acc = acc + multiply(self.entry(i, j), other.entry(j, l).parity_flip(i + j))
                out.append(acc)
        return ModeOperator.from_entries(*out)

    def adjoint(self) -> ModeOperator:
        cells = {}
        for i in (0, 1):
            for j in (0, 1):
                cells[(j, i)] = conjugate(self.entry(i, j)).parity_flip(i + j)
        return ModeOperator.from_entries(cells[(0, 0)], cells[(0, 1)], cells[(1, 0)], cells[(1, 1)])

    def exp(self) -> ModeOperator:
        """Terminating series for an operator whose entries have zero body."""
        result = ModeOperator.identity()
        term = ModeOperator.identity()
        for n in range(1, 4 * MAX_MODES + 2):
            term = (term @ self).scaled(1 / n)
            if term.is_zero():
                break
            result = result + term
        return result

    def is_zero(self) -> bool:
        return all(self.entry(i, j).is_zero() for i in (0, 1) for j in (0, 1))

    def approx_equal(self, other: ModeOperator, tol: float = ZERO_DROP) -> bool:
        return all(
            self.entry(i, j).approx_equal(other.entry(i, j), tol) for i in (0, 1) for j in (0, 1)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModeOperator):
            return NotImplemented
        return self.approx_equal(other)

    __hash__ = None  # type: ignore[assignment]


def annihilation() -> ModeOperator:
    """a = |0⟩⟨1|."""
    return ModeOperator.from_entries(0, 1, 0, 0)


def creation() -> ModeOperator:
    """a† = |1⟩⟨0|."""
    return ModeOperator.from_entries(0, 0, 1, 0)


def displacement(label: FermionLabel) -> ModeOperator:
    """D = exp(a†kθ − k̄θ*a) as a 2×2 Grassmann matrix."""
    g = label.generator
    k = complex(label.scale)
    # a†kθ = −kθ a† once kθ is moved left of |1⟩⟨0|
    generator = ModeOperator.from_entries(
        0,
        GrassmannElement.generator(g.star(), -k.conjugate()),
        GrassmannElement.generator(g, -k),
        0,
    )
    return generator.exp()


def apply_mode_op(op: ModeOperator, state: GrassmannState, slot: int) -> GrassmannState:
    """Apply op to tensor slot `slot` (0-based) and restore left-normal form."""
    if not 0 <= slot < state.qubits:
        raise StateError(f"slot {slot} out of range for a {state.qubits}-qubit state")
    out: dict[BasisKet, GrassmannElement] = {}
    for ket, amp in state.items():
        j = ket.bits[slot]
        before = sum(ket.bits[:slot])
        for i in (0, 1):
            entry = op.entry(i, j)
            if entry.is_zero():
                continue
            parity = (i + j) % 2
            term = multiply(entry, amp.parity_flip(parity))
            if parity and before % 2:
                term = -term
            bits = list(ket.bits)
            bits[slot] = i
            new_ket = BasisKet(tuple(bits))
            out[new_ket] = out[new_ket] + term if new_ket in out else term
    return GrassmannState(state.qubits, out)


def product_state(factors: Sequence[GrassmannState]) -> GrassmannState:
    if not factors:
        raise StateError("a tensor product needs at least one factor")
    result = factors[0]
    for f in factors[1:]:
        result = tensor_product(result, f)
    return result
