from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ..algebra.grassmann import GeneratorId


@dataclass(frozen=True, slots=True)
class Num:
    text: str


@dataclass(frozen=True, slots=True)
class ImagUnit:
    pass


@dataclass(frozen=True, slots=True)
class Pi:
    pass


@dataclass(frozen=True, slots=True)
class Gen:
    generator: GeneratorId


@dataclass(frozen=True, slots=True)
class Call:
    func: Literal["sqrt", "exp"]
    arg: Expr


@dataclass(frozen=True, slots=True)
class BinOp:
    op: Literal["+", "-", "*", "/"]
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Neg:
    operand: Expr


Expr = Num | ImagUnit | Pi | Gen | Call | BinOp | Neg


@dataclass(frozen=True, slots=True)
class CoherentKet:
    scale: Expr
    generator: GeneratorId


@dataclass(frozen=True, slots=True)
class FockKet:
    bits: str


@dataclass(frozen=True, slots=True)
class Tensor:
    factors: tuple[CoherentKet | FockKet | StateSum, ...]


@dataclass(frozen=True, slots=True)
class Term:
    coefficient: Expr | None
    tensor: Tensor


@dataclass(frozen=True, slots=True)
class StateSum:
    terms: tuple[tuple[Literal["+", "-"], Term], ...]


@dataclass(frozen=True, slots=True)
class NamedTarget:
    name: str


Target = NamedTarget | StateSum


@dataclass(frozen=True, slots=True)
class Document:
    modes: int
    state: StateSum | None = None
    weight: Expr | None = None
    measure: tuple[GeneratorId, ...] | None = None
    target: Target | None = None
    declared_modes: bool = False
