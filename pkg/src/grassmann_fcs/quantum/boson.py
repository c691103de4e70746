"""Bosonic coherent-state concurrence and the boson/fermion maximality comparison.

The bosonic phase conditions are periodic: the concurrence sees
Im(k₄*k₂) − Im(k₁*k₃) only through exp(i|α|²(...)), so the minus-sign
condition is "≡ 0" and the plus-sign condition "≡ π", both modulo 2π.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable
from dataclasses import dataclass, field

from ..algebra.fock import FermionLabel, GrassmannState, coherent_ket, tensor_product
from ..algebra.grassmann import GeneratorId, GrassmannElement, MeasureList
from ..core.errors import BosonError
from ..core.models import BosonSuperposition, KQuad, MaximalityReport, QubitState
from .entanglement import ZERO_NORM, concurrence2
from .weights import integrate_with_weight, solve_weight

TOL = 1e-9
DEGENERATE = 1e-12
INTEGRATED_TOL = 1e-9


def coherent_overlap(a: complex, b: complex) -> complex:
    """⟨a|b⟩ = exp(−|a|²/2 − |b|²/2 + ā b)."""
    a, b = complex(a), complex(b)
    return cmath.exp(-abs(a) ** 2 / 2 - abs(b) ** 2 / 2 + a.conjugate() * b)


def superposition_norm(z: BosonSuperposition) -> float:
    """Squared norm |μ|² + |ν|² + 2Re(μ̄ν⟨α|γ⟩⟨β|δ⟩)."""
    p = coherent_overlap(z.alpha, z.gamma) * coherent_overlap(z.beta, z.delta)
    mu, nu = complex(z.mu), complex(z.nu)
    return abs(mu) ** 2 + abs(nu) ** 2 + 2 * (mu.conjugate() * nu * p).real


def boson_concurrence(z: BosonSuperposition) -> float:
    denominator = superposition_norm(z)
    if denominator < DEGENERATE:
        raise BosonError("the superposition vanishes (degenerate Gram matrix)")
    p1 = abs(coherent_overlap(z.alpha, z.gamma)) ** 2
    p2 = abs(coherent_overlap(z.beta, z.delta)) ** 2
    numerator = 2 * abs(complex(z.mu) * complex(z.nu)) * math.sqrt(max(0.0, (1 - p1) * (1 - p2)))
    return min(1.0, numerator / denominator)


def superposition_maximal(z: BosonSuperposition, tol: float = TOL) -> bool:
    """|μ| = |ν|, |⟨α|γ⟩| = |⟨β|δ⟩| < 1 and (ν/μ)⟨α|γ⟩⟨β|δ⟩ = −|⟨α|γ⟩⟨β|δ⟩|."""
    mu, nu = complex(z.mu), complex(z.nu)
    if abs(mu) < DEGENERATE or abs(nu) < DEGENERATE:
        return False
    p1 = coherent_overlap(z.alpha, z.gamma)
    p2 = coherent_overlap(z.beta, z.delta)
    if abs(abs(mu) - abs(nu)) > tol or abs(abs(p1) - abs(p2)) > tol:
        return False
    if abs(p1) > 1 - tol:
        return False
    product = (nu / mu) * p1 * p2
    return abs(product + abs(product)) <= tol


def kquad_superposition(q: KQuad) -> BosonSuperposition:
    k1, k2, k3, k4 = q.ks
    a = complex(q.alpha)
    return BosonSuperposition(
        mu=1, nu=-1 if q.sign == "-" else 1, alpha=k1 * a, beta=k2 * a, gamma=k3 * a, delta=k4 * a
    )


def f_ij(ki: complex, kj: complex) -> complex:
    """|kᵢ|² + |kⱼ|² − 2 k̄ᵢ kⱼ."""
    return abs(ki) ** 2 + abs(kj) ** 2 - 2 * ki.conjugate() * kj


def kquad_concurrence(q: KQuad) -> float:
    """Closed form in f₁₃, f₂₄ for |k₁α⟩|k₂α⟩ ± |k₃α⟩|k₄α⟩."""
    k1, k2, k3, k4 = q.ks
    if q.sign == "-" and abs(k1 - k3) < DEGENERATE and abs(k2 - k4) < DEGENERATE:
        raise BosonError("the two product terms cancel: the state is zero")
    a2 = abs(complex(q.alpha)) ** 2
    f13, f24 = f_ij(k1, k3), f_ij(k2, k4)
    cross = cmath.exp(-a2 * (f13 + f24) / 2)
    s = 1 if q.sign == "+" else -1
    denominator = 2 + s * (cross + cross.conjugate()).real
    if denominator < DEGENERATE:
        raise BosonError("the superposition vanishes (degenerate Gram matrix)")
    x = math.exp(-a2 * (f13 + f13.conjugate()).real / 2)
    y = math.exp(-a2 * (f24 + f24.conjugate()).real / 2)
    return min(1.0, 2 * math.sqrt(max(0.0, (1 - x) * (1 - y))) / denominator)


def _wrapped(angle: float) -> float:
    """Representative of angle in (−π, π]."""
    out = math.remainder(angle, 2 * math.pi)
    if out <= -math.pi:
        out += 2 * math.pi
    return out


def boson_maximality(q: KQuad, tol: float = TOL) -> tuple[bool, bool]:
    """(modulus condition, phase condition) for the quad's sign at its alpha."""
    a2 = abs(complex(q.alpha)) ** 2
    if a2 < DEGENERATE:
        raise BosonError("alpha must be nonzero for the maximality conditions")
    k1, k2, k3, k4 = q.ks
    modulus = abs(abs(k1 - k3) - abs(k2 - k4)) <= tol
    difference = a2 * ((k4.conjugate() * k2).imag - (k1.conjugate() * k3).imag)
    target = 0.0 if q.sign == "-" else math.pi
    phase = abs(_wrapped(difference - target)) <= tol
    return modulus, phase


@dataclass(slots=True)
class FermionCounterpart:
    maximal: bool
    d1: complex
    d2: complex
    m: complex | None = None
    phi: float | None = None

    @property
    def weight_coefficient(self) -> complex | None:
        """c in the weight c·θ* that turns the fermionic quad into an MES."""
        if self.m is None:
            return None
        return 1 / (self.m * math.sqrt(2))


def fermion_counterpart_max(q: KQuad, tol: float = TOL) -> FermionCounterpart:
    k1, k2, k3, k4 = q.ks
    if q.sign == "-":
        d1, d2 = k1 - k3, k2 - k4
    else:
        d1, d2 = k1 + k3, k2 + k4
    maximal = abs(abs(d1) - abs(d2)) <= tol and abs(d1) > tol
    if not maximal:
        return FermionCounterpart(False, d1, d2)
    phi = _wrapped(cmath.phase(d1) - cmath.phase(d2))
    return FermionCounterpart(True, d1, d2, m=d1, phi=phi)


def fermion_quad_state(q: KQuad) -> GrassmannState:
    """|k₁θ⟩|k₂θ⟩ ∓ |k₃θ⟩|k₄θ⟩ on a single Grassmann mode."""
    g = GeneratorId(1)
    k1, k2, k3, k4 = q.ks

    def pair(a: complex, b: complex) -> GrassmannState:
        return tensor_product(coherent_ket(FermionLabel(a, g)), coherent_ket(FermionLabel(b, g)))

    first, second = pair(k1, k2), pair(k3, k4)
    return first - second if q.sign == "-" else first + second


@dataclass(slots=True)
class FermionQuadCheck:
    """Integrated and solved fermionic quad next to the closed-form maximality test."""

    weight: GrassmannElement
    output: QubitState
    concurrence: float | None
    closed_form_maximal: bool
    solver_residual: float
    solver_reachable: bool

    @property
    def integrated_maximal(self) -> bool:
        return self.concurrence is not None and abs(self.concurrence - 1) <= INTEGRATED_TOL

    @property
    def agrees(self) -> bool:
        return self.integrated_maximal == self.closed_form_maximal == self.solver_reachable


def fermion_quad_check(q: KQuad, tol: float = TOL) -> FermionQuadCheck:
    """Integrate the fermionic quad with θ*/(m√2) and solve for (|01⟩ + e^{iφ}|10⟩)/√2.

    When the quad is not maximal m falls back to d₁ (or d₂ if d₁ vanishes)
    and φ to arg d₁ − arg d₂ (0 if either vanishes).
    """
    counterpart = fermion_counterpart_max(q, tol)
    d1, d2 = counterpart.d1, counterpart.d2
    m = counterpart.m
    if m is None:
        m = d1 if abs(d1) > tol else d2
    phi = counterpart.phi
    if phi is None:
        phi = cmath.phase(d1) - cmath.phase(d2) if abs(d1) > tol and abs(d2) > tol else 0.0
    coefficient = 1 / (m * math.sqrt(2)) if abs(m) > tol else 1
    g = GeneratorId(1)
    measure = MeasureList((g.star(), g))
    state = fermion_quad_state(q)
    weight = GrassmannElement.generator(g.star(), coefficient)
    output = integrate_with_weight(weight, state, measure)
    concurrence = None if output.norm < ZERO_NORM else concurrence2(output)
    r = 1 / math.sqrt(2)
    target = QubitState.from_kets({"01": r, "10": r * cmath.exp(1j * phi)})
    solution = solve_weight(state, target, measure)
    return FermionQuadCheck(
        weight,
        output,
        concurrence,
        counterpart.maximal,
        solver_residual=solution.residual,
        solver_reachable=solution.reachable(tol),
    )


def maximality_report(q: KQuad, tol: float = TOL) -> MaximalityReport:
    k1, k2, k3, k4 = q.ks
    modulus, phase = boson_maximality(q, tol)
    fermion = fermion_counterpart_max(q, tol)
    return MaximalityReport(
        concurrence=kquad_concurrence(q),
        f13=f_ij(k1, k3),
        f24=f_ij(k2, k4),
        boson_modulus_condition=modulus,
        boson_phase_condition=phase,
        fermion_maximal=fermion.maximal,
        fermion_m=fermion.m,
        fermion_phi=fermion.phi,
        alpha=complex(q.alpha),
        sign=q.sign,
    )


@dataclass(slots=True)
class SweepResult:
    checked: int = 0
    fermion_maximal: int = 0
    counterexamples: list[tuple[complex, complex]] = field(default_factory=list)


def symmetric_pair_sweep(values: Iterable[complex], alpha: complex = 1) -> SweepResult:
    """Check |kα⟩|lα⟩ + |lα⟩|kα⟩ for a bosonic maximum over all pairs k ≠ l."""
    pool = [complex(v) for v in values]
    result = SweepResult()
    for k in pool:
        for l in pool:
            if k == l:
                continue
            quad = KQuad(k, l, l, k, "+", alpha)
            result.checked += 1
            if all(boson_maximality(quad)):
                result.counterexamples.append((k, l))
            if fermion_counterpart_max(quad).maximal:
                result.fermion_maximal += 1
    return result
