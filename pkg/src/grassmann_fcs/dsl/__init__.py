"""Text notation for states, weights, measures and targets."""

from .evaluate import (
    build_measure,
    build_state,
    build_target,
    build_weight,
    evaluate_expr,
    evaluate_scalar,
)
from .parser import parse_document, parse_expr, parse_measure, parse_state
from .render import (
    render_document,
    render_element,
    render_expr,
    render_qubit_state,
    render_state,
)

__all__ = [
    "build_measure",
    "build_state",
    "build_target",
    "build_weight",
    "evaluate_expr",
    "evaluate_scalar",
    "parse_document",
    "parse_expr",
    "parse_measure",
    "parse_state",
    "render_document",
    "render_element",
    "render_expr",
    "render_qubit_state",
    "render_state",
]
