"""Independent reference implementations used to cross-check the library.

DenseGrassmann stores every coefficient in a flat array indexed by bitmask
and computes signs by literally counting inversions of the concatenated
generator sequence. It shares no code with grassmann_fcs.algebra.
"""

from __future__ import annotations

import cmath
import math

import numpy as np


def _indices(mask: int) -> list[int]:
    return [b for b in range(mask.bit_length()) if mask >> b & 1]


def _inversions(seq: list[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


class DenseGrassmann:
    def __init__(self, generators: int, coeffs: np.ndarray | None = None):
        self.generators = generators
        size = 1 << generators
        self.coeffs = np.zeros(size, dtype=complex) if coeffs is None else np.asarray(coeffs, dtype=complex)
        assert self.coeffs.shape == (size,)

    @classmethod
    def from_mapping(cls, generators: int, mapping) -> DenseGrassmann:
        out = cls(generators)
        for mask, c in mapping.items():
            out.coeffs[mask] += c
        return out

    def to_mapping(self, tol: float = 1e-12) -> dict[int, complex]:
        return {m: complex(c) for m, c in enumerate(self.coeffs) if abs(c) > tol}

    def __mul__(self, other: DenseGrassmann) -> DenseGrassmann:
        out = DenseGrassmann(self.generators)
        for a, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            for b, cb in enumerate(other.coeffs):
                if cb == 0 or a & b:
                    continue
                sign = -1 if _inversions(_indices(a) + _indices(b)) % 2 else 1
                out.coeffs[a | b] += sign * ca * cb
        return out

    def conjugate(self) -> DenseGrassmann:
        """Reverse each monomial, swap every generator with its partner, conjugate coefficients."""
        out = DenseGrassmann(self.generators)
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            seq = [b ^ 1 for b in reversed(_indices(m))]
            sign = -1 if _inversions(seq) % 2 else 1
            new = sum(1 << b for b in seq)
            out.coeffs[new] += sign * np.conj(c)
        return out

    def derivative(self, bit: int) -> DenseGrassmann:
        """Left derivative: anticommute the generator to the front, then remove it."""
        out = DenseGrassmann(self.generators)
        for m, c in enumerate(self.coeffs):
            if c == 0 or not m >> bit & 1:
                continue
            position = _indices(m).index(bit)
            out.coeffs[m ^ (1 << bit)] += (-1) ** position * c
        return out

    def integrate(self, bits: list[int]) -> DenseGrassmann:
        """Measure given left to right; the rightmost factor acts first."""
        result = self
        for bit in reversed(bits):
            result = result.derivative(bit)
        return result


def wootters_concurrence(psi: np.ndarray) -> float:
    """Spin-flip overlap |⟨ψ|σy⊗σy|ψ*⟩| of the normalized pure state."""
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    sy = np.array([[0, -1j], [1j, 0]])
    flipped = np.kron(sy, sy) @ psi.conj()
    return float(abs(np.vdot(psi, flipped)))


def _overlap(a: complex, b: complex) -> complex:
    a, b = complex(a), complex(b)
    return cmath.exp(-abs(a) ** 2 / 2 - abs(b) ** 2 / 2 + a.conjugate() * b)


def embed_coherent_pair(mu, nu, alpha, beta, gamma, delta) -> np.ndarray:
    """Coordinates of μ|α⟩|β⟩ + ν|γ⟩|δ⟩ in the Gram–Schmidt bases {|α⟩, |γ⟩⊥} ⊗ {|β⟩, |δ⟩⊥}."""
    p1 = _overlap(alpha, gamma)
    p2 = _overlap(beta, delta)
    s1 = math.sqrt(max(0.0, 1 - abs(p1) ** 2))
    s2 = math.sqrt(max(0.0, 1 - abs(p2) ** 2))
    return np.array([mu + nu * p1 * p2, nu * p1 * s2, nu * s1 * p2, nu * s1 * s2], dtype=complex)


def boson_concurrence_oracle(mu, nu, alpha, beta, gamma, delta) -> float:
    return wootters_concurrence(embed_coherent_pair(mu, nu, alpha, beta, gamma, delta))
