"""Turn DSL syntax trees into algebra values."""

from __future__ import annotations

import cmath

from ..algebra.fock import FermionLabel, GrassmannState, coherent_ket, product_state
from ..algebra.grassmann import ZERO_DROP, GrassmannElement, MeasureList, exp_element
from ..core.errors import DocumentError, GrassmannError, StateError
from ..core.models import QubitState
from ..quantum.named import named_state
from .ast import (
    BinOp,
    Call,
    CoherentKet,
    Document,
    Expr,
    FockKet,
    Gen,
    ImagUnit,
    NamedTarget,
    Neg,
    Num,
    Pi,
    StateSum,
    Tensor,
)


def evaluate_expr(node: Expr) -> GrassmannElement:
    match node:
        case Num(text=text):
            return GrassmannElement.scalar(float(text))
        case ImagUnit():
            return GrassmannElement.scalar(1j)
        case Pi():
            return GrassmannElement.scalar(cmath.pi)
        case Gen(generator=g):
            return GrassmannElement.generator(g)
        case Neg(operand=operand):
            return -evaluate_expr(operand)
        case Call(func="sqrt", arg=arg):
            return GrassmannElement.scalar(cmath.sqrt(_scalar(evaluate_expr(arg), "sqrt")))
        case Call(func="exp", arg=arg):
            return exp_element(evaluate_expr(arg))
        case BinOp(op=op, left=left, right=right):
            a, b = evaluate_expr(left), evaluate_expr(right)
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            divisor = _scalar(b, "division")
            if abs(divisor) < ZERO_DROP:
                raise GrassmannError("division by zero")
            return a / divisor
    raise GrassmannError(f"cannot evaluate {node!r}")


def _scalar(value: GrassmannElement, where: str) -> complex:
    if not value.is_scalar():
        raise GrassmannError(f"{where} needs a scalar argument, got a Grassmann element")
    return value.body


def evaluate_scalar(node: Expr) -> complex:
    return _scalar(evaluate_expr(node), "this position")


def build_state_expr(node: StateSum) -> GrassmannState:
    total: GrassmannState | None = None
    for sign, term in node.terms:
        factors = [_build_factor(f) for f in term.tensor.factors]
        piece = product_state(factors)
        if term.coefficient is not None:
            piece = piece.left_multiply(evaluate_expr(term.coefficient))
        if sign == "-":
            piece = -piece
        if total is None:
            total = piece
        elif total.qubits != piece.qubits:
            raise StateError(
                f"summands have {total.qubits} and {piece.qubits} qubits"
            )
        else:
            total = total + piece
    assert total is not None
    return total


def _build_factor(node: CoherentKet | FockKet | StateSum | Tensor) -> GrassmannState:
    match node:
        case CoherentKet(scale=scale, generator=g):
            return coherent_ket(FermionLabel(evaluate_scalar(scale), g))
        case FockKet(bits=bits):
            return GrassmannState.fock(bits)
        case StateSum():
            return build_state_expr(node)
    raise StateError(f"cannot build a state from {node!r}")


def build_state(doc: Document) -> GrassmannState:
    if doc.state is None:
        raise DocumentError("the document has no 'state:' section")
    return build_state_expr(doc.state)


def build_weight(doc: Document) -> GrassmannElement:
    if doc.weight is None:
        raise DocumentError("the document has no 'weight:' section")
    return evaluate_expr(doc.weight)


def build_measure(doc: Document) -> MeasureList:
    if doc.measure is None:
        raise DocumentError("the document has no 'measure:' section")
    return MeasureList(doc.measure)


def build_target(doc: Document) -> QubitState:
    match doc.target:
        case None:
            raise DocumentError("the document has no 'target:' section")
        case NamedTarget(name=name):
            return named_state(name).state
        case StateSum():
            return build_state_expr(doc.target).to_qubit_state()
    raise DocumentError(f"unsupported target {doc.target!r}")
