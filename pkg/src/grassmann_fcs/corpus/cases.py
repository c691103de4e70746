"""Built-in verification corpus: one DSL document per displayed integration identity.

Each case integrates its document and compares the output with the
``target:`` section. Where the published claim disagrees with what these
sign conventions produce, the claim is kept in ``published_target`` and only
reported, never used for pass/fail.
"""

from __future__ import annotations

import fnmatch
import math
from dataclasses import dataclass
from functools import cache

from ..core.errors import CorpusFilterError
from ..core.models import Category, Comparison, KQuad, QubitState
from ..dsl.ast import Document
from ..dsl.evaluate import build_target
from ..dsl.parser import parse_document

Partitions = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class CorpusCase:
    name: str
    source: str
    anchor: str
    comparison: Comparison = "up_to_global_phase"
    category: Category | None = None
    separating: Partitions | None = None
    concurrence: float | None = None
    kquad: KQuad | None = None
    boson: tuple[bool, bool] | None = None  # (modulus, phase) condition flags
    fermion_maximal: bool | None = None
    published_target: str | None = None  # named key or ket list, when it differs

    @property
    def document(self) -> Document:
        return parse_document(self.source)

    @property
    def expected(self) -> QubitState:
        return build_target(self.document)


def _doc(*lines: str) -> str:
    return "\n".join(lines) + "\n"


M1 = "measure: d t1', d t1"
M2 = "measure: d t1', d t1, d t2', d t2"
M3 = "measure: d t1', d t1, d t2', d t2, d t3', d t3"
M4 = "measure: d t1', d t1, d t2', d t2, d t3', d t3, d t4', d t4"

P12 = "|1:t1> (x) |1:t2>"
P123 = "|1:t1> (x) |1:t2> (x) |1:t3>"
P1234 = "|1:t1> (x) |1:t2> (x) |1:t3> (x) |1:t4>"

EVEN_ODD_PAIR = (
    "(|1:t1> + |-1:t1>) (x) (|1:t1> - |-1:t1>) {sign} (|1:t1> - |-1:t1>) (x) (|1:t1> + |-1:t1>)"
)

NONE: Partitions = ()
CUT1: Partitions = ((1,),)

_CASES: tuple[CorpusCase, ...] = (
    # single mode, two copies of the same generator
    CorpusCase(
        "psi_difference_plus",
        _doc(
            "state: |1:t1> (x) |1:t1> - |-1:t1> (x) |-1:t1>",
            "weight: (1/(2*sqrt(2))) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "Bell states from |θ⟩|±θ⟩ − |−θ⟩|∓θ⟩ with weight ±θ*/(2√2), upper sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "psi_difference_minus",
        _doc(
            "state: |1:t1> (x) |-1:t1> - |-1:t1> (x) |1:t1>",
            "weight: -(1/(2*sqrt(2))) * t1'",
            M1,
            "target: PsiMinus",
        ),
        "Bell states from |θ⟩|±θ⟩ − |−θ⟩|∓θ⟩ with weight ±θ*/(2√2), lower sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "separable_sum_plus",
        _doc(
            "state: |1:t1> (x) |1:t1> + |-1:t1> (x) |-1:t1>",
            "weight: 1/2",
            M1,
            "target: |00>",
        ),
        "adding instead of subtracting, weight 1/2, gives the separable |00⟩",
        comparison="exact",
        category="product",
        separating=CUT1,
        concurrence=0.0,
    ),
    CorpusCase(
        "separable_sum_minus",
        _doc(
            "state: |1:t1> (x) |-1:t1> + |-1:t1> (x) |1:t1>",
            "weight: 1/2",
            M1,
            "target: |00>",
        ),
        "adding |θ⟩|−θ⟩ and |−θ⟩|θ⟩, weight 1/2, gives the separable |00⟩",
        comparison="exact",
        category="product",
        separating=CUT1,
        concurrence=0.0,
    ),
    CorpusCase(
        "psi_same_sign_plus",
        _doc("state: |1:t1> (x) |1:t1>", "weight: (1/sqrt(2)) * t1'", M1, "target: PsiPlus"),
        "|±θ⟩|±θ⟩ with weight ±θ*/√2 yields a Bell state, upper sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="PsiMinus",
    ),
    CorpusCase(
        "psi_same_sign_minus",
        _doc("state: |-1:t1> (x) |-1:t1>", "weight: -(1/sqrt(2)) * t1'", M1, "target: PsiPlus"),
        "|±θ⟩|±θ⟩ with weight ±θ*/√2 yields a Bell state, lower sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="PsiMinus",
    ),
    CorpusCase(
        "psi_even_odd_plus",
        _doc(
            "state: " + EVEN_ODD_PAIR.format(sign="+"),
            "weight: (1/(4*sqrt(2))) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "|θ⟩₊|θ⟩₋ ± |θ⟩₋|θ⟩₊ with |θ⟩± = |θ⟩ ± |−θ⟩ and weight θ*/(4√2), upper sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "psi_even_odd_minus",
        _doc(
            "state: " + EVEN_ODD_PAIR.format(sign="-"),
            "weight: (1/(4*sqrt(2))) * t1'",
            M1,
            "target: PsiMinus",
        ),
        "|θ⟩₊|θ⟩₋ ± |θ⟩₋|θ⟩₊ with |θ⟩± = |θ⟩ ± |−θ⟩ and weight θ*/(4√2), lower sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    # single mode, |θ*⟩|θ⟩
    CorpusCase(
        "phi_conjugate_plus",
        _doc(
            "state: |1:t1'> (x) |1:t1>",
            "weight: (1/sqrt(2)) * exp(t1*t1')",
            M1,
            "target: PhiPlus",
        ),
        "|θ*⟩|θ⟩ with weight ±e^{±θθ*}/√2 yields Φ±, upper sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "phi_conjugate_minus",
        _doc(
            "state: |1:t1'> (x) |1:t1>",
            "weight: -(1/sqrt(2)) * exp(-t1*t1')",
            M1,
            "target: PhiMinus",
        ),
        "|θ*⟩|θ⟩ with weight ±e^{±θθ*}/√2 yields Φ±, lower sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "psi_conjugate_plus",
        _doc(
            "state: |1:t1'> (x) |1:t1>",
            "weight: (1/sqrt(2)) * (t1' + t1)",
            M1,
            "target: PsiMinus",
        ),
        "|θ*⟩|θ⟩ with weight (θ* ± θ)/√2, upper sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="PsiPlus",
    ),
    CorpusCase(
        "psi_conjugate_minus",
        _doc(
            "state: |1:t1'> (x) |1:t1>",
            "weight: (1/sqrt(2)) * (t1' - t1)",
            M1,
            "target: PsiPlus",
        ),
        "|θ*⟩|θ⟩ with weight (θ* ± θ)/√2, lower sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="PsiMinus",
    ),
    # two modes, |θ₁⟩|θ₂⟩
    CorpusCase(
        "phi_two_mode_plus",
        _doc(
            f"state: {P12}",
            "weight: (1/sqrt(2)) * (t1'*t1*t2'*t2 + t1'*t2')",
            M2,
            "target: PhiPlus",
        ),
        "|θ₁⟩|θ₂⟩ with weight (θ₁*θ₁θ₂*θ₂ ∓ θ₁*θ₂*)/√2, the + weight",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="PhiMinus",
    ),
    CorpusCase(
        "phi_two_mode_minus",
        _doc(
            f"state: {P12}",
            "weight: (1/sqrt(2)) * (t1'*t1*t2'*t2 - t1'*t2')",
            M2,
            "target: PhiMinus",
        ),
        "|θ₁⟩|θ₂⟩ with weight (θ₁*θ₁θ₂*θ₂ ∓ θ₁*θ₂*)/√2, the − weight",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="PhiPlus",
    ),
    CorpusCase(
        "psi_two_mode",
        _doc(
            f"state: {P12}",
            "weight: (-1/sqrt(2)) * (t1'*t1*t2' + t1'*t2'*t2)",
            M2,
            "target: PsiPlus",
        ),
        "|θ₁⟩|θ₂⟩ with weight −(θ₁*θ₁θ₂* + θ₁*θ₂*θ₂)/√2",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="PsiMinus",
    ),
    CorpusCase(
        "lambda_plus_psi",
        _doc(
            "state: |1:t1> (x) |1:t2> + |1:t2> (x) |1:t1>",
            "weight: sqrt(2)*t1'",
            M2,
            "target: PsiPlus",
        ),
        "symmetric FCS Λ₊(θ₁,θ₂) with weight (2/√2)θ₁*",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "lambda_minus_psi",
        _doc(
            "state: |1:t1> (x) |1:t2> - |1:t2> (x) |1:t1>",
            "weight: sqrt(2)*t1'",
            M2,
            "target: PsiMinus",
        ),
        "anti-symmetric FCS Λ₋(θ₁,θ₂) with weight (2/√2)θ₁*",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "lambda_plus_separable",
        _doc(
            "state: |1:t1> (x) |1:t2> + |1:t2> (x) |1:t1>",
            "weight: (1/2) * t1'*t1*t2'*t2",
            M2,
            "target: |00>",
        ),
        "Λ₊ with weight θ₁*θ₁θ₂*θ₂/2 gives a separable state",
        comparison="exact",
        category="product",
        separating=CUT1,
        concurrence=0.0,
        published_target="|11>",
    ),
    CorpusCase(
        "lambda_minus_separable",
        _doc(
            "state: |1:t1> (x) |1:t2> - |1:t2> (x) |1:t1>",
            "weight: (1/2) * t1'*t2'",
            M2,
            "target: |11>",
        ),
        "Λ₋ with weight θ₁*θ₂*/2 gives a separable state",
        comparison="exact",
        category="product",
        separating=CUT1,
        concurrence=0.0,
        published_target="|00>",
    ),
    # Bell-like
    CorpusCase(
        "bell_like_conjugate_plus",
        _doc(
            "state: |1:t1'> (x) |1:t1>",
            "weight: (1/sqrt(2)) * (exp(i*pi/4)*t1' + exp(-i*pi/4)*t1)",
            M1,
            "target: BellLikeMinus",
        ),
        "Bell-like states from |θ*⟩|θ⟩ with weight (e^{iπ/4}θ* ± e^{−iπ/4}θ)/√2, upper sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="BellLikePlus",
    ),
    CorpusCase(
        "bell_like_conjugate_minus",
        _doc(
            "state: |1:t1'> (x) |1:t1>",
            "weight: (1/sqrt(2)) * (exp(i*pi/4)*t1' - exp(-i*pi/4)*t1)",
            M1,
            "target: BellLikePlus",
        ),
        "Bell-like states from |θ*⟩|θ⟩ with weight (e^{iπ/4}θ* ± e^{−iπ/4}θ)/√2, lower sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        published_target="BellLikeMinus",
    ),
    CorpusCase(
        "bell_like_two_mode_plus",
        _doc(
            f"state: {P12}",
            "weight: (1/sqrt(2)) * (exp(i*pi/4)*t1*t1'*t2' + exp(-i*pi/4)*t1'*t2*t2')",
            M2,
            "target: BellLikePlus",
        ),
        "Bell-like states from |θ₁⟩|θ₂⟩, upper sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    CorpusCase(
        "bell_like_two_mode_minus",
        _doc(
            f"state: {P12}",
            "weight: (1/sqrt(2)) * (exp(i*pi/4)*t1*t1'*t2' - exp(-i*pi/4)*t1'*t2*t2')",
            M2,
            "target: BellLikeMinus",
        ),
        "Bell-like states from |θ₁⟩|θ₂⟩, lower sign",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
    ),
    # W and GHZ
    CorpusCase(
        "w3_single_mode",
        _doc(
            "state: |1:t1> (x) |1:t1> (x) |1:t1>",
            "weight: (1/sqrt(3)) * t1'",
            M1,
            "target: W3",
        ),
        "W(3) from |θ⟩|θ⟩|θ⟩ with a convenient weight θ*/√3",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
    ),
    CorpusCase(
        "w4_single_mode",
        _doc(
            "state: |1:t1> (x) |1:t1> (x) |1:t1> (x) |1:t1>",
            "weight: (1/sqrt(4)) * t1'",
            M1,
            "target: W4",
        ),
        "W(n) from n copies of |θ⟩ with weight θ*/√n, n = 4",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
    ),
    CorpusCase(
        "w3_even_odd",
        _doc(
            "state: (|1:t1> + |-1:t1>) (x) (|1:t1> + |-1:t1>) (x) (|1:t1> - |-1:t1>)"
            " + (|1:t1> + |-1:t1>) (x) (|1:t1> - |-1:t1>) (x) (|1:t1> + |-1:t1>)"
            " + (|1:t1> - |-1:t1>) (x) (|1:t1> + |-1:t1>) (x) (|1:t1> + |-1:t1>)",
            "weight: (1/(8*sqrt(3))) * t1'",
            M1,
            "target: W3",
        ),
        "W(n) from sums of |θ⟩₊ and |θ⟩₋ products with weight θ*/(2ⁿ√n), n = 3",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
    ),
    CorpusCase(
        "ghz3",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1'*t1*t2'*t2*t3'*t3 + t1'*t2'*t3')",
            M3,
            "target: -(1/sqrt(2))|000> + (1/sqrt(2))|111>",
        ),
        "GHZ(3) from |θ₁⟩|θ₂⟩|θ₃⟩ with weight (θ₁*θ₁θ₂*θ₂θ₃*θ₃ + θ₁*θ₂*θ₃*)/√2",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        published_target="GHZ3",
    ),
    CorpusCase(
        "ghz4",
        _doc(
            f"state: {P1234}",
            "weight: (1/sqrt(2)) * (t1'*t1*t2'*t2*t3'*t3*t4'*t4 + t1'*t2'*t3'*t4')",
            M4,
            "target: GHZ4",
        ),
        "GHZ(n) from |θ₁⟩…|θₙ⟩ with weight (θ₁*θ₁…θₙ*θₙ + θ₁*…θₙ*)/√2, n = 4",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
    ),
    # three-qubit biseparable
    CorpusCase(
        "zero1_psi23_plus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1'*t1*t2'*t3*t3' + t1'*t1*t2*t2'*t3')",
            M3,
            "target: (1/sqrt(2))|001> + (1/sqrt(2))|010>",
        ),
        "|0⟩₁|Ψ±⟩₂,₃ from |θ₁⟩|θ₂⟩|θ₃⟩, upper sign",
        category="biseparable",
        separating=CUT1,
    ),
    CorpusCase(
        "zero1_psi23_minus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1'*t1*t2'*t3*t3' - t1'*t1*t2*t2'*t3')",
            M3,
            "target: (1/sqrt(2))|001> - (1/sqrt(2))|010>",
        ),
        "|0⟩₁|Ψ±⟩₂,₃ from |θ₁⟩|θ₂⟩|θ₃⟩, lower sign",
        comparison="exact",
        category="biseparable",
        separating=CUT1,
    ),
    CorpusCase(
        "psi12_zero3_plus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3' + t1'*t1*t2'*t3*t3')",
            M3,
            "target: (1/sqrt(2))|000> - (1/sqrt(2))|010>",
        ),
        "|Ψ±⟩₁,₂|0⟩₃ from |θ₁⟩|θ₂⟩|θ₃⟩, upper sign",
        comparison="exact",
        category="product",
        separating=((1,), (2,), (3,)),
        published_target="(1/sqrt(2))|010> + (1/sqrt(2))|100>",
    ),
    CorpusCase(
        "psi12_zero3_minus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3' - t1'*t1*t2'*t3*t3')",
            M3,
            "target: (1/sqrt(2))|000> + (1/sqrt(2))|010>",
        ),
        "|Ψ±⟩₁,₂|0⟩₃ from |θ₁⟩|θ₂⟩|θ₃⟩, lower sign",
        comparison="exact",
        category="product",
        separating=((1,), (2,), (3,)),
        published_target="(1/sqrt(2))|010> - (1/sqrt(2))|100>",
    ),
    CorpusCase(
        "psi12_zero3_plus_reached",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1'*t2*t2'*t3*t3' - t1'*t1*t2'*t3*t3')",
            M3,
            "target: (1/sqrt(2))|010> + (1/sqrt(2))|100>",
        ),
        "|Ψ±⟩₁,₂|0⟩₃ reached by pairing the terms with |100⟩ and |010⟩, upper sign",
        comparison="exact",
        category="biseparable",
        separating=((3,),),
    ),
    CorpusCase(
        "psi12_zero3_minus_reached",
        _doc(
            f"state: {P123}",
            "weight: -(1/sqrt(2)) * (t1'*t2*t2'*t3*t3' + t1'*t1*t2'*t3*t3')",
            M3,
            "target: (1/sqrt(2))|010> - (1/sqrt(2))|100>",
        ),
        "|Ψ±⟩₁,₂|0⟩₃ reached by pairing the terms with |100⟩ and |010⟩, lower sign",
        comparison="exact",
        category="biseparable",
        separating=((3,),),
    ),
    CorpusCase(
        "zero2_psi13_plus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1'*t2*t2'*t3*t3' + t1'*t1*t2*t2'*t3')",
            M3,
            "target: (1/sqrt(2))|100> - (1/sqrt(2))|001>",
        ),
        "|0⟩₂|Ψ±⟩₁,₃ = (|001⟩ ± |100⟩)/√2, upper sign",
        comparison="exact",
        category="biseparable",
        separating=((2,),),
        published_target="(1/sqrt(2))|001> + (1/sqrt(2))|100>",
    ),
    CorpusCase(
        "zero2_psi13_minus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1'*t2*t2'*t3*t3' - t1'*t1*t2*t2'*t3')",
            M3,
            "target: (1/sqrt(2))|100> + (1/sqrt(2))|001>",
        ),
        "|0⟩₂|Ψ±⟩₁,₃ = (|001⟩ ± |100⟩)/√2, lower sign",
        comparison="exact",
        category="biseparable",
        separating=((2,),),
        published_target="(1/sqrt(2))|001> - (1/sqrt(2))|100>",
    ),
    CorpusCase(
        "zero1_phi23_plus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3' + t1*t1'*t3'*t2')",
            M3,
            "target: (1/sqrt(2))|000> - (1/sqrt(2))|011>",
        ),
        "|0⟩₁|Φ±⟩₂,₃ from |θ₁⟩|θ₂⟩|θ₃⟩, upper sign",
        comparison="exact",
        category="biseparable",
        separating=CUT1,
        published_target="(1/sqrt(2))|000> + (1/sqrt(2))|011>",
    ),
    CorpusCase(
        "zero1_phi23_minus",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3' - t1*t1'*t3'*t2')",
            M3,
            "target: (1/sqrt(2))|000> + (1/sqrt(2))|011>",
        ),
        "|0⟩₁|Φ±⟩₂,₃ from |θ₁⟩|θ₂⟩|θ₃⟩, lower sign",
        comparison="exact",
        category="biseparable",
        separating=CUT1,
        published_target="(1/sqrt(2))|000> - (1/sqrt(2))|011>",
    ),
    CorpusCase(
        "zero2_phi13",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3' + t1'*t2*t2'*t3')",
            M3,
            "target: (1/sqrt(2))|000> + (1/sqrt(2))|101>",
        ),
        "|0⟩₂|Φ⁺⟩₁,₃, obtained in the same manner with a different weight",
        comparison="exact",
        category="biseparable",
        separating=((2,),),
    ),
    CorpusCase(
        "zero3_phi12",
        _doc(
            f"state: {P123}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3' + t1'*t2'*t3*t3')",
            M3,
            "target: (1/sqrt(2))|000> + (1/sqrt(2))|110>",
        ),
        "|0⟩₃|Φ⁺⟩₁,₂, obtained in the same manner with a different weight",
        comparison="exact",
        category="biseparable",
        separating=((3,),),
    ),
    # four-qubit biseparable
    CorpusCase(
        "zero1_w3",
        _doc(
            f"state: {P1234}",
            "weight: (1/sqrt(3)) * (t1*t1'*t2'*t3*t3'*t4*t4' + t1*t1'*t2*t2'*t3'*t4*t4'"
            " + t1*t1'*t2*t2'*t3*t3'*t4')",
            M4,
            "target: (1/sqrt(3))|0100> + (1/sqrt(3))|0010> + (1/sqrt(3))|0001>",
        ),
        "|0⟩₁|W(3)⟩₂,₃,₄ from |θ₁⟩|θ₂⟩|θ₃⟩|θ₄⟩",
        comparison="exact",
        category="biseparable",
        separating=CUT1,
    ),
    CorpusCase(
        "one1_w3",
        _doc(
            f"state: {P1234}",
            "weight: (1/sqrt(3)) * (t1'*t2'*t3*t3'*t4*t4' + t1'*t2*t2'*t3'*t4*t4'"
            " + t1'*t2*t2'*t3*t3'*t4')",
            M4,
            "target: (1/sqrt(3))|1100> + (1/sqrt(3))|1010> + (1/sqrt(3))|1001>",
        ),
        "|s⟩ᵢ|W(3)⟩ⱼ,ₖ,ₗ with s = 1 on the first qubit",
        comparison="exact",
        category="biseparable",
        separating=CUT1,
    ),
    CorpusCase(
        "zero1_ghz3",
        _doc(
            f"state: {P1234}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3'*t4*t4' + t1*t1'*t2'*t3'*t4')",
            M4,
            "target: (1/sqrt(2))|0000> + (1/sqrt(2))|0111>",
        ),
        "|0⟩₁|GHZ(3)⟩₂,₃,₄ from |θ₁⟩|θ₂⟩|θ₃⟩|θ₄⟩",
        comparison="exact",
        category="biseparable",
        separating=CUT1,
    ),
    CorpusCase(
        "zero12_phi34_plus",
        _doc(
            f"state: {P1234}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3'*t4*t4' + t1*t1'*t2*t2'*t3'*t4')",
            M4,
            "target: (1/sqrt(2))|0000> + (1/sqrt(2))|0011>",
        ),
        "|00⟩₁,₂|Φ±⟩₃,₄, upper sign",
        comparison="exact",
        category="biseparable",
        separating=((1,), (2,), (1, 2)),
    ),
    CorpusCase(
        "zero12_phi34_minus",
        _doc(
            f"state: {P1234}",
            "weight: (1/sqrt(2)) * (t1*t1'*t2*t2'*t3*t3'*t4*t4' - t1*t1'*t2*t2'*t3'*t4')",
            M4,
            "target: (1/sqrt(2))|0000> - (1/sqrt(2))|0011>",
        ),
        "|00⟩₁,₂|Φ±⟩₃,₄, lower sign",
        comparison="exact",
        category="biseparable",
        separating=((1,), (2,), (1, 2)),
    ),
    CorpusCase(
        "psi12_phi34",
        _doc(
            f"state: {P1234}",
            "weight: (1/2) * (t1'*t2*t2'*t3*t3'*t4*t4' + t1*t1'*t2'*t3*t3'*t4*t4'"
            " + t1'*t2*t2'*t3'*t4' + t1*t1'*t2'*t3'*t4')",
            M4,
            "target: (1/2)|0100> + (1/2)|0111> + (1/2)|1000> + (1/2)|1011>",
        ),
        "|Ψ⁺⟩₁,₂|Φ⁺⟩₃,₄ from |θ₁⟩|θ₂⟩|θ₃⟩|θ₄⟩",
        comparison="exact",
        category="biseparable",
        separating=((1, 2),),
    ),
    # fermionic quads |k₁θ⟩|k₂θ⟩ ∓ |k₃θ⟩|k₄θ⟩ with weight θ*/(m√2)
    CorpusCase(
        "maximal_quad_case1",
        _doc(
            "state: |1:t1> (x) |-1:t1> - |-1:t1> (x) |-3:t1>",
            "weight: (1/(2*sqrt(2))) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "maximal FCS |θ⟩|−θ⟩ − |−θ⟩|−3θ⟩ with m = 2",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(1, -1, -1, -3, "-"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    CorpusCase(
        "maximal_quad_case2",
        _doc(
            "state: |1:t1> (x) |-1:t1> - |-1:t1> (x) |1:t1>",
            "weight: -(1/(2*sqrt(2))) * t1'",
            M1,
            "target: PsiMinus",
        ),
        "maximal FCS |θ⟩|−θ⟩ − |−θ⟩|θ⟩ with m = −2",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(1, -1, -1, 1, "-"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    CorpusCase(
        "maximal_quad_case3",
        _doc(
            "state: |1:t1> (x) |1:t1> - |i:t1> (x) |-i:t1>",
            "weight: (1/2) * t1'",
            M1,
            "target: BellLikePlus",
        ),
        "maximal FCS |θ⟩|θ⟩ − |iθ⟩|−iθ⟩ with m = 1 − i (|m| = √2), Bell-like output",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(1, 1, 1j, -1j, "-"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    CorpusCase(
        "maximal_quad_case4",
        _doc(
            "state: |1:t1> (x) |-1:t1> - |i:t1> (x) |i:t1>",
            "weight: -(1/2) * t1'",
            M1,
            "target: BellLikeMinus",
        ),
        "maximal FCS |θ⟩|−θ⟩ − |iθ⟩|iθ⟩ with m = −√2, Bell-like output",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(1, -1, 1j, 1j, "-"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    CorpusCase(
        "maximal_quad_three",
        _doc(
            "state: |3:t1> (x) |-1:t1> - |1:t1> (x) |-3:t1>",
            "weight: (1/(2*sqrt(2))) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "maximal FCS |3θ⟩|−θ⟩ − |θ⟩|−3θ⟩ whose bosonic counterpart is also maximal",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(3, -1, 1, -3, "-"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    CorpusCase(
        "maximal_quad_m3",
        _doc(
            "state: |1:t1> (x) |1:t1> - |-2:t1> (x) |-2:t1>",
            "weight: (1/(3*sqrt(2))) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "maximal FCS |θ⟩|θ⟩ − |−2θ⟩|−2θ⟩ with m = 3",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(1, 1, -2, -2, "-"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    CorpusCase(
        "fermion_only_imaginary",
        _doc(
            "state: |i:t1> (x) |i:t1> - |1:t1> (x) |1:t1>",
            "weight: (1/(sqrt(2)*(i - 1))) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "|iθ⟩|iθ⟩ − |θ⟩|θ⟩ with weight θ*/(√2(i−1)), which is clearly maximal"
        " while the bosonic counterpart is not",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(1j, 1j, 1, 1, "-"),
        boson=(True, False),
        fermion_maximal=True,
    ),
    CorpusCase(
        "psi_prime_even_odd",
        _doc(
            "state: (1/sqrt(2)) * (" + EVEN_ODD_PAIR.format(sign="+") + ")",
            "weight: (1/4) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "|ψ′⟩ = (|θ⟩₊|θ⟩₋ + |θ⟩₋|θ⟩₊)/√2 with weight θ*/4",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(1, 1, -1, -1, "-"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    # plus-sign quads
    CorpusCase(
        "plus_quad_case1",
        _doc(
            "state: |i*pi/2:t1> (x) |i*pi/2:t1> + |1:t1> (x) |1:t1>",
            "weight: (1/((1 + i*pi/2)*sqrt(2))) * t1'",
            M1,
            "target: PsiPlus",
        ),
        "k₁ = k₂ = iπ/(2|α|²), k₃ = k₄ = 1: bosonic and fermionic counterparts are both maximal",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=1.0,
        kquad=KQuad(0.5j * math.pi, 0.5j * math.pi, 1, 1, "+"),
        boson=(True, True),
        fermion_maximal=True,
    ),
    CorpusCase(
        "plus_quad_case2",
        _doc(
            "state: |pi/2 + i:t1> (x) |pi + i:t1> + |pi/2 - i:t1> (x) |pi - i:t1>",
            "weight: (1/(pi*sqrt(2))) * t1'",
            M1,
            "target: sqrt(2)|01> + (1/sqrt(2))|10>",
        ),
        "bosonic maximum whose fermionic counterpart does not lead to a MES",
        comparison="exact",
        category="genuinely_entangled",
        separating=NONE,
        concurrence=0.8,
        kquad=KQuad(
            math.pi / 2 + 1j,
            math.pi + 1j,
            math.pi / 2 - 1j,
            math.pi - 1j,
            "+",
        ),
        boson=(True, True),
        fermion_maximal=False,
        published_target="PsiPlus",
    ),
)


@cache
def corpus_cases() -> tuple[CorpusCase, ...]:
    """All cases, sorted by name."""
    names = [c.name for c in _CASES]
    if len(names) != len(set(names)):
        raise RuntimeError("corpus case names must be unique")
    return tuple(sorted(_CASES, key=lambda c: c.name))


def select_cases(pattern: str | None = None) -> tuple[CorpusCase, ...]:
    """Cases whose name matches a shell-style pattern; every case when pattern is None."""
    cases = corpus_cases()
    if pattern is None:
        return cases
    picked = tuple(c for c in cases if fnmatch.fnmatchcase(c.name, pattern))
    if not picked:
        raise CorpusFilterError(f"no corpus case matches {pattern!r}")
    return picked


def corpus_case(name: str) -> CorpusCase:
    for case in corpus_cases():
        if case.name == name:
            return case
    raise CorpusFilterError(f"unknown corpus case {name!r}")
