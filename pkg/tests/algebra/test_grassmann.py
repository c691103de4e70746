from __future__ import annotations

import cmath

import pytest

from grassmann_fcs.algebra.grassmann import (
    GeneratorId,
    GrassmannElement,
    MeasureList,
    Monomial,
    berezin_integrate,
    conjugate,
    exp_element,
    exp_nilpotent,
    left_derivative,
    merge_sign,
)
from grassmann_fcs.core.errors import GrassmannError, IntegrationError

T1 = GeneratorId(1)
T1S = GeneratorId(1, True)
T2 = GeneratorId(2)
T2S = GeneratorId(2, True)


def gen(g: GeneratorId, c: complex = 1) -> GrassmannElement:
    return GrassmannElement.generator(g, c)


def test_generators_anticommute_and_square_to_zero():
    a, b = gen(T1), gen(T1S)
    assert a * b == -(b * a)
    assert (a * a).is_zero()
    assert (gen(T2) * gen(T2)).is_zero()


def test_bit_layout_and_canonical_order():
    assert T1.bit == 0 and T1S.bit == 1 and T2.bit == 2 and T2S.bit == 3
    assert GeneratorId.from_bit(3) == T2S
    assert T1.star() == T1S
    assert str(T2S) == "t2'"
    # θ₁*θ₁ is stored as −θ₁θ₁*
    pair = GrassmannElement.product_of([T1S, T1])
    assert pair.coefficient(0b11) == -1
    assert GrassmannElement.product_of([T1, T1]).is_zero()


def test_monomial_of_rejects_non_canonical_order():
    assert Monomial.of(T1, T1S).mask == 0b11
    with pytest.raises(GrassmannError):
        Monomial.of(T1S, T1)


def test_mode_index_is_capped():
    with pytest.raises(GrassmannError):
        GeneratorId(7)
    with pytest.raises(GrassmannError):
        GeneratorId(0)


def test_merge_sign_counts_crossings():
    assert merge_sign(0b01, 0b10) == 1
    assert merge_sign(0b10, 0b01) == -1
    assert merge_sign(0b110, 0b001) == 1


def test_berezin_sign_conventions():
    m = MeasureList((T1S, T1))
    u = gen(T1) * gen(T1S)
    assert berezin_integrate(u, m) == 1
    assert berezin_integrate(gen(T1S) * gen(T1), m) == -1
    assert berezin_integrate(GrassmannElement.scalar(5), m).is_zero()


def test_products_of_pair_monomials_integrate_to_one():
    u1 = gen(T1) * gen(T1S)
    u2 = gen(T2) * gen(T2S)
    assert berezin_integrate(u1 * u2, MeasureList.full(2)) == 1


def test_left_derivative_moves_generator_to_front():
    x = gen(T1) * gen(T2)
    assert left_derivative(x, T1) == gen(T2)
    assert left_derivative(x, T2) == -gen(T1)
    assert left_derivative(x, T1S).is_zero()


def test_repeated_measure_factor_is_rejected():
    with pytest.raises(IntegrationError):
        MeasureList((T1, T1S, T1))


def test_full_measure_order():
    m = MeasureList.full(2)
    assert m.factors == (T1S, T1, T2S, T2)
    assert str(m) == "d t1', d t1, d t2', d t2"
    assert m.modes == 2


def test_conjugation_is_an_antiautomorphism():
    a = GrassmannElement({0: 1 + 2j, 0b01: 3j, 0b0110: -1})
    b = GrassmannElement({0b10: 2, 0b1001: 1 - 1j})
    assert conjugate(a * b) == conjugate(b) * conjugate(a)
    assert conjugate(conjugate(a)) == a
    # (θ₁θ₂)* = θ₂*θ₁*
    assert conjugate(gen(T1) * gen(T2)) == gen(T2S) * gen(T1S)


def test_exp_nilpotent_terminates():
    pair = GrassmannElement.product_of([T1S, T1])
    e = exp_nilpotent(pair.scaled(-0.5))
    assert e == 1 - pair.scaled(0.5)
    two = gen(T1) * gen(T1S) + gen(T2) * gen(T2S)
    e2 = exp_nilpotent(two)
    assert e2 == 1 + two + (gen(T1) * gen(T1S)) * (gen(T2) * gen(T2S))


def test_exp_nilpotent_rejects_body():
    with pytest.raises(GrassmannError):
        exp_nilpotent(GrassmannElement.scalar(1) + gen(T1) * gen(T1S))


def test_exp_element_factors_out_the_body():
    x = GrassmannElement.scalar(2) + gen(T1) * gen(T1S)
    out = exp_element(x)
    assert abs(out.body - cmath.exp(2)) < 1e-12
    assert abs(out.coefficient(0b11) - cmath.exp(2)) < 1e-12


def test_element_inspection():
    x = GrassmannElement({0: 1, 0b0101: 2, 0b10: 1e-15})
    assert 0b10 not in x.coeffs
    assert x.degree == 2
    assert x.modes == frozenset({1, 2})
    assert x.is_even()
    assert not x.is_scalar()
    assert x.parity_flip() == x
    assert gen(T1).parity_flip() == -gen(T1)


def test_scalar_arithmetic_mixes_with_numbers():
    x = gen(T1)
    assert (2 * x) / 2 == x
    assert (x + 1) - 1 == x
    assert 1 - x == -(x - 1)
