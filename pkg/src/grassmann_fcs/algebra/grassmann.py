"""Sparse Grassmann polynomials over the generators θ₁, θ₁*, θ₂, θ₂*, ...

Monomials are stored as bitmasks. Generator θᵢ owns bit 2(i-1) and θᵢ* owns
bit 2(i-1)+1, so ascending bit order is the canonical order
θ₁ < θ₁* < θ₂ < θ₂* < ...; every reordering sign lives in the coefficient.
"""

from __future__ import annotations

import cmath
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

from ..core.errors import GrassmannError, IntegrationError

MAX_MODES = 6
ZERO_DROP = 1e-12


@dataclass(frozen=True, order=True, slots=True)
class GeneratorId:
    mode: int
    conjugated: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.mode <= MAX_MODES:
            raise GrassmannError(f"mode index must be in 1..{MAX_MODES}, got {self.mode}")

    @property
    def bit(self) -> int:
        return 2 * (self.mode - 1) + int(self.conjugated)

    @classmethod
    def from_bit(cls, bit: int) -> GeneratorId:
        return cls(bit // 2 + 1, bool(bit & 1))

    def star(self) -> GeneratorId:
        """The partner generator: θᵢ ↔ θᵢ*."""
        return GeneratorId(self.mode, not self.conjugated)

    def __str__(self) -> str:
        return f"t{self.mode}'" if self.conjugated else f"t{self.mode}"


@dataclass(frozen=True, slots=True)
class Monomial:
    """Canonically ordered product of distinct generators."""

    mask: int = 0

    @classmethod
    def of(cls, *generators: GeneratorId) -> Monomial:
        sign, mask = _canonicalize([g.bit for g in generators])
        if sign != 1:
            raise GrassmannError("Monomial.of expects generators in canonical order")
        return cls(mask)

    @property
    def generators(self) -> tuple[GeneratorId, ...]:
        return tuple(GeneratorId.from_bit(b) for b in _bits(self.mask))

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return "*".join(str(g) for g in self.generators) or "1"


@dataclass(frozen=True, slots=True)
class MeasureList:
    """Ordered Berezin measure; the rightmost factor is integrated first."""

    factors: tuple[GeneratorId, ...]

    def __post_init__(self) -> None:
        seen: set[GeneratorId] = set()
        for g in self.factors:
            if g in seen:
                raise IntegrationError(f"measure factor d{g} is repeated")
            seen.add(g)

    @classmethod
    def full(cls, modes: int) -> MeasureList:
        """⟨θ₁*, θ₁, ..., θₙ*, θₙ⟩, the measure used for every full integration."""
        factors: list[GeneratorId] = []
        for mode in range(1, modes + 1):
            factors += [GeneratorId(mode, True), GeneratorId(mode, False)]
        return cls(tuple(factors))

    @property
    def mask(self) -> int:
        out = 0
        for g in self.factors:
            out |= 1 << g.bit
        return out

    @property
    def modes(self) -> int:
        return max((g.mode for g in self.factors), default=0)

    def __iter__(self) -> Iterator[GeneratorId]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return ", ".join(f"d {g}" for g in self.factors)


class GrassmannElement:
    """Immutable sparse polynomial: bitmask monomial -> complex coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, complex] | None = None):
        clean: dict[int, complex] = {}
        for mask, value in (coeffs or {}).items():
            c = complex(value)
            if abs(c) >= ZERO_DROP:
                clean[mask] = c
        self._coeffs = MappingProxyType(clean)

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls) -> GrassmannElement:
        return cls()

    @classmethod
    def scalar(cls, value: complex) -> GrassmannElement:
        return cls({0: value})

    @classmethod
    def generator(cls, g: GeneratorId, coefficient: complex = 1) -> GrassmannElement:
        return cls({1 << g.bit: coefficient})

    @classmethod
    def product_of(cls, generators: Sequence[GeneratorId], coefficient: complex = 1) -> GrassmannElement:
        """Coefficient times the ordered product g₁g₂…; zero when a generator repeats."""
        bits = [g.bit for g in generators]
        if len(set(bits)) != len(bits):
            return cls()
        sign, mask = _canonicalize(bits)
        return cls({mask: sign * coefficient})

    # inspection -------------------------------------------------------------

    @property
    def coeffs(self) -> Mapping[int, complex]:
        return self._coeffs

    @property
    def terms(self) -> dict[Monomial, complex]:
        return {Monomial(mask): c for mask, c in self._coeffs.items()}

    @property
    def body(self) -> complex:
        return self._coeffs.get(0, 0j)

    @property
    def degree(self) -> int:
        return max((mask.bit_count() for mask in self._coeffs), default=0)

    @property
    def support(self) -> int:
        """Bitmask of every generator occurring in some term."""
        out = 0
        for mask in self._coeffs:
            out |= mask
        return out

    @property
    def modes(self) -> frozenset[int]:
        return frozenset(GeneratorId.from_bit(b).mode for b in _bits(self.support))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_scalar(self) -> bool:
        return all(mask == 0 for mask in self._coeffs)

    def is_even(self) -> bool:
        return all(mask.bit_count() % 2 == 0 for mask in self._coeffs)

    def coefficient(self, monomial: Monomial | int) -> complex:
        mask = monomial.mask if isinstance(monomial, Monomial) else monomial
        return self._coeffs.get(mask, 0j)

    def items(self) -> Iterable[tuple[int, complex]]:
        return self._coeffs.items()

    # algebra ----------------------------------------------------------------

    def parity_flip(self, times: int = 1) -> GrassmannElement:
        """Apply the grading automorphism `times` times (odd terms change sign)."""
        if times % 2 == 0:
            return self
        return GrassmannElement(
            {m: (-c if m.bit_count() % 2 else c) for m, c in self._coeffs.items()}
        )

    def scaled(self, factor: complex) -> GrassmannElement:
        return GrassmannElement({m: factor * c for m, c in self._coeffs.items()})

    def __add__(self, other: object) -> GrassmannElement:
        other_el = _coerce(other)
        if other_el is None:
            return NotImplemented
        return linear_combine(1, self, 1, other_el)

    __radd__ = __add__

    def __sub__(self, other: object) -> GrassmannElement:
        other_el = _coerce(other)
        if other_el is None:
            return NotImplemented
        return linear_combine(1, self, -1, other_el)

    def __rsub__(self, other: object) -> GrassmannElement:
        other_el = _coerce(other)
        if other_el is None:
            return NotImplemented
        return linear_combine(1, other_el, -1, self)

    def __neg__(self) -> GrassmannElement:
        return self.scaled(-1)

    def __mul__(self, other: object) -> GrassmannElement:
        if isinstance(other, GrassmannElement):
            return multiply(self, other)
        if isinstance(other, int | float | complex):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other: object) -> GrassmannElement:
        if isinstance(other, int | float | complex):
            return self.scaled(other)
        return NotImplemented

    def __truediv__(self, other: object) -> GrassmannElement:
        if isinstance(other, int | float | complex):
            return self.scaled(1 / other)
        return NotImplemented

    def approx_equal(self, other: GrassmannElement, tol: float = ZERO_DROP) -> bool:
        keys = set(self._coeffs) | set(other._coeffs)
        return all(abs(self.coefficient(k) - other.coefficient(k)) <= tol for k in keys)

    def __eq__(self, other: object) -> bool:
        other_el = _coerce(other)
        if other_el is None:
            return NotImplemented
        return self.approx_equal(other_el)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self._coeffs:
            return "GrassmannElement(0)"
        parts = [f"{c:.6g}*{Monomial(m)}" for m, c in sorted(self._coeffs.items())]
        return f"GrassmannElement({' + '.join(parts)})"


def multiply(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    """Canonical-form product with permutation-parity signs."""
    out: dict[int, complex] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            mask = ma | mb
            out[mask] = out.get(mask, 0j) + merge_sign(ma, mb) * ca * cb
    return GrassmannElement(out)


def linear_combine(
    alpha: complex, a: GrassmannElement, beta: complex, b: GrassmannElement
) -> GrassmannElement:
    out: dict[int, complex] = {m: alpha * c for m, c in a.items()}
    for m, c in b.items():
        out[m] = out.get(m, 0j) + beta * c
    return GrassmannElement(out)


def conjugate(a: GrassmannElement) -> GrassmannElement:
    """Antiautomorphism: conjugate coefficients, reverse and star every generator."""
    out: dict[int, complex] = {}
    for mask, c in a.items():
        starred = [b ^ 1 for b in reversed(list(_bits(mask)))]
        sign, new_mask = _canonicalize(starred)
        out[new_mask] = out.get(new_mask, 0j) + sign * c.conjugate()
    return GrassmannElement(out)


def exp_nilpotent(a: GrassmannElement) -> GrassmannElement:
    """Terminating exponential series of a body-free element."""
    if abs(a.body) >= ZERO_DROP:
        raise GrassmannError(
            "exp_nilpotent needs a zero body; factor out exp(body) first"
        )
    result = GrassmannElement.scalar(1)
    term = GrassmannElement.scalar(1)
    for n in range(1, 2 * MAX_MODES + 1):
        term = multiply(term, a).scaled(1 / n)
        if term.is_zero():
            break
        result = result + term
    return result


def exp_element(a: GrassmannElement) -> GrassmannElement:
    """exp(body)·exp_nilpotent(soul); the body commutes with everything."""
    body = a.body
    soul = a - GrassmannElement.scalar(body)
    try:
        factor = cmath.exp(body)
    except OverflowError:
        raise GrassmannError(f"exp overflows for body {body}") from None
    return exp_nilpotent(soul).scaled(factor)


def left_derivative(a: GrassmannElement, g: GeneratorId) -> GrassmannElement:
    """∂/∂g acting from the left: move g to the front, then drop it."""
    bit = 1 << g.bit
    below = bit - 1
    out: dict[int, complex] = {}
    for mask, c in a.items():
        if not mask & bit:
            continue
        sign = -1 if (mask & below).bit_count() % 2 else 1
        out[mask ^ bit] = out.get(mask ^ bit, 0j) + sign * c
    return GrassmannElement(out)


def berezin_integrate(a: GrassmannElement, m: MeasureList) -> GrassmannElement:
    """Iterated left derivative, innermost (rightmost) measure factor first."""
    result = a
    for g in reversed(m.factors):
        result = left_derivative(result, g)
    return result


def merge_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation (generators of a)(generators of b)."""
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        swaps += (a >> low.bit_length()).bit_count()
        rest ^= low
    return -1 if swaps % 2 else 1


def _canonicalize(bits: Sequence[int]) -> tuple[int, int]:
    """(sign, mask) for an ordered sequence of distinct generator bits."""
    inversions = 0
    for i, x in enumerate(bits):
        for y in bits[i + 1 :]:
            if x > y:
                inversions += 1
    mask = 0
    for x in bits:
        mask |= 1 << x
    return (-1 if inversions % 2 else 1), mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _coerce(value: object) -> GrassmannElement | None:
    if isinstance(value, GrassmannElement):
        return value
    if isinstance(value, int | float | complex):
        return GrassmannElement.scalar(value)
    return None
