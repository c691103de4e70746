from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.stats import unitary_group

from grassmann_fcs.core.errors import EntanglementError
from grassmann_fcs.core.models import QubitState
from grassmann_fcs.quantum.entanglement import (
    best_named_match,
    canonical_bipartitions,
    canonical_partition,
    classify,
    concurrence2,
    fidelity_up_to_phase,
    matches_exactly,
    matches_up_to_phase,
    schmidt_profile,
)
from grassmann_fcs.quantum.named import ghz_state, named_keys, named_state, w_state

R2 = 1 / math.sqrt(2)


@pytest.mark.parametrize(
    "key", ["PsiPlus", "PsiMinus", "PhiPlus", "PhiMinus", "BellLikePlus", "BellLikeMinus"]
)
def test_bell_family_is_maximally_entangled(key):
    assert abs(concurrence2(named_state(key).state) - 1) < 1e-12


def test_product_state_has_zero_concurrence():
    assert concurrence2(QubitState.from_kets({"00": 1})) == 0
    # unnormalized input is normalized first
    assert abs(concurrence2(QubitState.from_kets({"01": 3, "10": 3})) - 1) < 1e-12


def test_concurrence_errors():
    with pytest.raises(EntanglementError):
        concurrence2(ghz_state(3))
    with pytest.raises(EntanglementError):
        concurrence2(QubitState(2, np.zeros(4)))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_w_and_ghz_are_genuinely_entangled(n):
    for state in (w_state(n), ghz_state(n)):
        report = classify(state)
        assert report.category == "genuinely_entangled"
        assert report.separating == ()


def test_biseparable_cut_is_reported():
    psi = named_state("PsiPlus").state.amplitudes
    state = QubitState(3, np.kron(psi, [1, 0]))
    report = classify(state)
    assert report.category == "biseparable"
    assert report.separating == ((3,),)


def test_product_classification():
    report = classify(QubitState.from_kets({"010": 1}))
    assert report.category == "product"
    assert set(report.separating) == {(1,), (2,), (3,)}


def test_named_match_reports_label_and_phase():
    match = best_named_match(ghz_state(3))
    assert match is not None and match.name == "GHZ(3)"
    flipped = QubitState(2, -named_state("PsiPlus").state.amplitudes)
    match = best_named_match(flipped)
    assert match.name == "Psi+"
    assert abs(abs(match.phase) - math.pi) < 1e-12


def test_canonical_bipartitions():
    assert canonical_bipartitions(3) == [(1,), (2,), (3,)]
    four = canonical_bipartitions(4)
    assert len(four) == 7
    assert (1, 2) in four and (3, 4) not in four
    assert canonical_partition((2, 3, 4), 4) == (1,)
    assert canonical_partition((3, 4), 4) == (1, 2)


def test_schmidt_profile_values():
    report = schmidt_profile(named_state("PhiPlus").state, (1,))
    assert report.schmidt_rank == 2
    assert np.allclose(report.schmidt_values, (R2, R2))
    with pytest.raises(EntanglementError):
        schmidt_profile(ghz_state(3), (1, 2, 3))
    with pytest.raises(EntanglementError):
        schmidt_profile(ghz_state(3), (4,))


def test_phase_and_exact_comparisons():
    plus = named_state("PsiPlus").state
    minus_plus = QubitState(2, -plus.amplitudes)
    fidelity, phase = fidelity_up_to_phase(minus_plus, plus)
    assert abs(fidelity - 1) < 1e-12
    assert abs(phase - math.pi) < 1e-12
    assert matches_up_to_phase(minus_plus, plus)
    assert not matches_exactly(minus_plus, plus)
    assert not matches_up_to_phase(QubitState(2, 2 * plus.amplitudes), plus)


def test_named_table_contents():
    keys = named_keys()
    assert {"W3", "W8", "GHZ2", "GHZ8", "PsiPlus", "BellLikeMinus"} <= set(keys)
    assert [k for k in keys if k.startswith("W")] == [f"W{n}" for n in range(3, 9)]
    assert "W2" not in keys
    with pytest.raises(KeyError):
        named_state("W9")


def _random_two_qubit_state(rng: np.random.Generator) -> QubitState:
    vec = rng.normal(size=4) + 1j * rng.normal(size=4)
    return QubitState(2, vec / np.linalg.norm(vec))


def test_concurrence_is_bounded_and_invariant_under_local_unitaries():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        state = _random_two_qubit_state(rng)
        u1 = unitary_group.rvs(2, random_state=rng)
        u2 = unitary_group.rvs(2, random_state=rng)
        rotated = QubitState(2, np.kron(u1, u2) @ state.amplitudes)
        c = concurrence2(state)
        assert 0 <= c <= 1
        assert abs(concurrence2(rotated) - c) < 1e-9
