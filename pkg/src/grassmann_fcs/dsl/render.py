"""Deterministic text rendering; parse(render(x)) reproduces x structurally."""

from __future__ import annotations

from ..algebra.grassmann import GrassmannElement, Monomial
from ..core.models import QubitState
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
    Term,
)

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_ATOMS = (Num, ImagUnit, Pi, Gen, Call)


def _prec(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    return 4


def _tight(node: Expr) -> bool:
    if isinstance(node, _ATOMS):
        return True
    return isinstance(node, BinOp) and node.op == "*" and _tight(node.left) and isinstance(node.right, _ATOMS)


def _wrap(node: Expr, parens: bool) -> str:
    text = render_expr(node)
    return f"({text})" if parens else text


def render_expr(node: Expr) -> str:
    match node:
        case Num(text=text):
            return text
        case ImagUnit():
            return "i"
        case Pi():
            return "pi"
        case Gen(generator=g):
            return str(g)
        case Call(func=func, arg=arg):
            return f"{func}({render_expr(arg)})"
        case Neg(operand=operand):
            return "-" + _wrap(operand, _prec(operand) < 3)
        case BinOp(op=op, left=left, right=right):
            p = _PREC[op]
            div_under_mul = op == "*"
            left_s = _wrap(
                left, _prec(left) < p or (div_under_mul and isinstance(left, BinOp) and left.op == "/")
            )
            right_s = _wrap(
                right, _prec(right) <= p or (div_under_mul and isinstance(right, BinOp) and right.op == "/")
            )
            if op in "+-":
                return f"{left_s} {op} {right_s}"
            if op == "/":
                return f"{left_s}/{right_s}"
            tight = _tight(node)
            return f"{left_s}*{right_s}" if tight else f"{left_s} * {right_s}"
    raise TypeError(f"not an expression node: {node!r}")


def _render_factor(node) -> str:
    match node:
        case CoherentKet(scale=scale, generator=g):
            return f"|{render_expr(scale)}:{g}>"
        case FockKet(bits=bits):
            return f"|{bits}>"
        case StateSum():
            return f"({render_state(node)})"
    raise TypeError(f"not a state factor: {node!r}")


def _render_term(term: Term) -> str:
    tensor = " (x) ".join(_render_factor(f) for f in term.tensor.factors)
    if term.coefficient is None:
        return tensor
    coefficient = _wrap(term.coefficient, not isinstance(term.coefficient, _ATOMS))
    return f"{coefficient}{tensor}"


def render_state(node: StateSum) -> str:
    parts: list[str] = []
    for index, (sign, term) in enumerate(node.terms):
        body = _render_term(term)
        if index == 0:
            parts.append(f"-{body}" if sign == "-" else body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def render_document(doc: Document) -> str:
    lines: list[str] = []
    if doc.declared_modes:
        lines.append(f"modes: {doc.modes}")
    if doc.state is not None:
        lines.append(f"state: {render_state(doc.state)}")
    if doc.weight is not None:
        lines.append(f"weight: {render_expr(doc.weight)}")
    if doc.measure is not None:
        lines.append("measure: " + ", ".join(f"d {g}" for g in doc.measure))
    match doc.target:
        case NamedTarget(name=name):
            lines.append(f"target: {name}")
        case StateSum():
            lines.append(f"target: {render_state(doc.target)}")
    return "\n".join(lines) + "\n"


def format_scalar(value: complex) -> tuple[bool, str]:
    """(negative, magnitude text) with 12 significant digits, in DSL syntax."""
    re, im = value.real, value.imag
    if abs(im) < 1e-12:
        return re < 0, f"{abs(re):.12g}"
    if abs(re) < 1e-12:
        return im < 0, f"{abs(im):.12g}*i"
    joiner = "+" if im >= 0 else "-"
    return False, f"({re:.12g} {joiner} {abs(im):.12g}*i)"


def _join(pieces: list[tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for index, (negative, text) in enumerate(pieces):
        if index == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)


def render_element(element: GrassmannElement) -> str:
    """Canonical text for an element, terms ordered by degree then monomial."""
    pieces: list[tuple[bool, str]] = []
    for mask, coeff in sorted(element.items(), key=lambda kv: (kv[0].bit_count(), kv[0])):
        if mask == 0:
            pieces.append(format_scalar(coeff))
            continue
        monomial = str(Monomial(mask))
        if abs(coeff - 1) < 1e-12:
            pieces.append((False, monomial))
        elif abs(coeff + 1) < 1e-12:
            pieces.append((True, monomial))
        else:
            negative, text = format_scalar(coeff)
            pieces.append((negative, f"{text}*{monomial}"))
    return _join(pieces)


def render_qubit_state(state: QubitState, tol: float = 1e-12) -> str:
    """Ket-list text such as "0.707106781187|01> + 0.707106781187|10>"."""
    pieces: list[tuple[bool, str]] = []
    for bits, amp in state.nonzero_kets(tol):
        if abs(amp - 1) < 1e-12:
            pieces.append((False, f"|{bits}>"))
            continue
        negative, text = format_scalar(amp)
        pieces.append((negative, f"{text}|{bits}>"))
    return _join(pieces)
