from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from grassmann_fcs.core.errors import BosonError
from grassmann_fcs.core.models import BosonSuperposition, KQuad, QubitState
from grassmann_fcs.corpus.cases import corpus_case, corpus_cases
from grassmann_fcs.quantum.boson import (
    boson_concurrence,
    boson_maximality,
    coherent_overlap,
    fermion_counterpart_max,
    fermion_quad_check,
    fermion_quad_state,
    kquad_concurrence,
    kquad_superposition,
    maximality_report,
    superposition_maximal,
    superposition_norm,
    symmetric_pair_sweep,
)
from tests.support.oracle import boson_concurrence_oracle

R2 = 1 / math.sqrt(2)
PLUS_CASE_TWO = KQuad(math.pi / 2 + 1j, math.pi + 1j, math.pi / 2 - 1j, math.pi - 1j, "+")


def test_coherent_overlap_basics():
    assert abs(coherent_overlap(1 + 1j, 1 + 1j) - 1) < 1e-12
    assert abs(abs(coherent_overlap(0, 2)) - math.exp(-2)) < 1e-12


def test_kquad_closed_form_matches_general_formula():
    for quad in (
        KQuad(1j, 1j, 1, 1, "-"),
        KQuad(3, -1, 1, -3, "-"),
        KQuad(0.3, -0.7j, 1.1, 0.2 + 0.4j, "+", alpha=0.8 - 0.3j),
        PLUS_CASE_TWO,
    ):
        general = boson_concurrence(kquad_superposition(quad))
        assert abs(kquad_concurrence(quad) - general) < 1e-10
        z = kquad_superposition(quad)
        oracle = boson_concurrence_oracle(z.mu, z.nu, z.alpha, z.beta, z.gamma, z.delta)
        assert abs(general - oracle) < 1e-9


def test_imaginary_quad_is_fermionic_maximum_only():
    quad = KQuad(1j, 1j, 1, 1, "-")
    assert kquad_concurrence(quad) < 0.99
    assert boson_maximality(quad) == (True, False)
    counterpart = fermion_counterpart_max(quad)
    assert counterpart.maximal
    assert abs(counterpart.m - (1j - 1)) < 1e-12
    assert abs(counterpart.weight_coefficient - 1 / ((1j - 1) * math.sqrt(2))) < 1e-12


def test_plus_case_two_is_bosonic_maximum_only():
    assert abs(kquad_concurrence(PLUS_CASE_TWO) - 1) < 1e-9
    assert boson_maximality(PLUS_CASE_TWO) == (True, True)
    counterpart = fermion_counterpart_max(PLUS_CASE_TWO)
    assert not counterpart.maximal
    assert counterpart.weight_coefficient is None
    assert superposition_maximal(kquad_superposition(PLUS_CASE_TWO))


@pytest.mark.parametrize(
    "quad",
    [
        KQuad(1, -1, -1, -3, "-"),
        KQuad(1, 1, 1j, -1j, "-"),
        KQuad(3, -1, 1, -3, "-"),
        KQuad(1, 1, -2, -2, "-"),
    ],
)
def test_maximal_quads_agree_on_both_sides(quad):
    report = maximality_report(quad)
    assert report.boson_maximal
    assert report.fermion_maximal
    assert abs(report.concurrence - 1) < 1e-9


def test_phase_condition_is_periodic_in_alpha():
    # the phase difference is 2|α|², which wraps to 0 when |α|² = π
    base = KQuad(1j, 1j, 1, 1, "-", alpha=1)
    a = math.sqrt(math.pi)
    assert boson_maximality(KQuad(1j, 1j, 1, 1, "-", alpha=a))[1]
    assert not boson_maximality(base)[1]


def test_symmetric_pairs_never_reach_a_bosonic_maximum():
    result = symmetric_pair_sweep([1, -1, 2, 1j, 0.5 - 0.5j])
    assert result.checked == 20
    assert result.counterexamples == []
    assert result.fermion_maximal == 18


def test_degenerate_inputs():
    with pytest.raises(BosonError):
        BosonSuperposition(0, 0, 1, 1, 1, 1)
    with pytest.raises(BosonError):
        kquad_concurrence(KQuad(1, 2, 1, 2, "-"))
    with pytest.raises(BosonError):
        boson_maximality(KQuad(1, 2, 3, 4, "-", alpha=0))
    with pytest.raises(ValueError):
        KQuad(1, 2, 3, 4, "*")  # type: ignore[arg-type]


def test_superposition_norm_of_orthogonal_limit():
    z = BosonSuperposition(1, 1, 0, 0, 40, 40)
    assert abs(superposition_norm(z) - 2) < 1e-12
    assert cmath.isclose(coherent_overlap(0, 40), 0, abs_tol=1e-12)


def _maximal_quad(rng: np.random.Generator, sign: str, alpha: float) -> KQuad:
    """Draw k values meeting the modulus and phase conditions at alpha."""
    a2 = alpha**2
    while True:
        k1, k2, k3 = (complex(*rng.normal(size=2)) for _ in range(3))
        d = k1 - k3
        if abs(d) ** 2 * a2 < 0.1:
            continue
        target = (k1.conjugate() * k3).imag + (math.pi / a2 if sign == "+" else 0.0)
        w = d.conjugate() * k2
        if abs(w) <= abs(target):
            continue
        # Im(k̄₄k₂) = target with |k₂ − k₄| = |k₁ − k₃|
        psi = cmath.phase(w) + math.asin(target / abs(w))
        k4 = k2 - d * cmath.exp(1j * psi)
        return KQuad(k1, k2, k3, k4, sign, alpha)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("sign", ["-", "+"])
def test_boson_conditions_imply_maximal_concurrence(sign, alpha):
    rng = np.random.default_rng(int(alpha * 10) + (sign == "+"))
    for _ in range(200):
        quad = _maximal_quad(rng, sign, alpha)
        assert boson_maximality(quad) == (True, True)
        assert abs(kquad_concurrence(quad) - 1) < 1e-9


def test_kquad_concurrence_is_symmetric_under_swapping_the_product_terms():
    rng = np.random.default_rng(5)
    for _ in range(500):
        k1, k2, k3, k4 = (complex(*rng.normal(size=2)) for _ in range(4))
        alpha = complex(*rng.uniform(0.3, 1.5, size=2))
        for sign in ("-", "+"):
            quad = KQuad(k1, k2, k3, k4, sign, alpha)
            swapped = KQuad(k3, k4, k1, k2, sign, alpha)
            assert abs(kquad_concurrence(quad) - kquad_concurrence(swapped)) < 1e-9


def test_fermion_quad_state_has_one_grassmann_mode():
    state = fermion_quad_state(KQuad(1j, 1j, 1, 1, "-"))
    assert state.qubits == 2
    assert state.modes == frozenset({1})


def test_integrated_imaginary_quad_is_maximally_entangled():
    check = fermion_quad_check(KQuad(1j, 1j, 1, 1, "-"))
    assert check.closed_form_maximal
    assert abs(check.concurrence - 1) < 1e-12
    assert check.agrees
    assert check.solver_reachable
    assert check.solver_residual < 1e-9
    expected = QubitState.from_kets({"01": R2, "10": R2})
    assert np.allclose(check.output.amplitudes, expected.amplitudes, atol=1e-12)


def test_integrated_plus_case_two_stays_below_one():
    check = fermion_quad_check(PLUS_CASE_TWO)
    assert not check.closed_form_maximal
    assert abs(check.concurrence - 0.8) < 1e-12
    assert check.agrees
    # (|01⟩ + |10⟩)/√2 sits at angle arccos(3/√10) from the reachable 2|01⟩ + |10⟩
    assert not check.solver_reachable
    assert abs(check.solver_residual - math.sqrt(0.1)) < 1e-9
    expected = QubitState.from_kets({"01": math.sqrt(2), "10": R2})
    assert np.allclose(check.output.amplitudes, expected.amplitudes, atol=1e-12)


def test_integrated_output_vanishes_when_both_differences_do():
    check = fermion_quad_check(KQuad(1, 2, -1, -2, "+"))
    assert check.concurrence is None
    assert not check.closed_form_maximal
    assert not check.solver_reachable
    assert check.agrees


@pytest.mark.parametrize("case", [c for c in corpus_cases() if c.kquad is not None], ids=lambda c: c.name)
def test_integration_path_agrees_with_closed_form_on_corpus_quads(case):
    check = fermion_quad_check(case.kquad)
    assert check.agrees
    assert check.closed_form_maximal is case.fermion_maximal


def test_case_three_reports_complex_m():
    case = corpus_case("maximal_quad_case3")
    counterpart = fermion_counterpart_max(case.kquad)
    assert abs(counterpart.m - (1 - 1j)) < 1e-12
    assert abs(abs(counterpart.m) - math.sqrt(2)) < 1e-12
    assert "m = 1 − i" in case.anchor
