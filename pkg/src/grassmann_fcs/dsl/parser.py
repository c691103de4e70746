"""Document parser: line-oriented sections, each value parsed by the lark grammar."""

from __future__ import annotations

import re
from collections.abc import Iterator

import lark
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from ..algebra.grassmann import MAX_MODES, GeneratorId
from ..core.errors import FcsError, GrassmannError, ParseError
from ..quantum.named import named_keys
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
    Term,
)
from .evaluate import build_state, build_target, build_weight
from .grammar import PARSER

SECTIONS = ("modes", "state", "weight", "measure", "target")
_SECTION = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")
_NAMED = re.compile(r"[A-Za-z]+[0-9]*")


def _generator(token: lark.Token) -> GeneratorId:
    text = str(token)
    conjugated = text.endswith("'")
    return GeneratorId(int(text[1:].rstrip("'")), conjugated)


class _ToAst(lark.Transformer):
    def number(self, items):
        return Num(str(items[0]))

    def imag(self, _):
        return ImagUnit()

    def pi(self, _):
        return Pi()

    def gen(self, items):
        return Gen(_generator(items[0]))

    def call(self, items):
        return Call(str(items[0]), items[1])

    def add(self, items):
        return BinOp("+", items[0], items[1])

    def sub(self, items):
        return BinOp("-", items[0], items[1])

    def mul(self, items):
        return BinOp("*", items[0], items[1])

    def div(self, items):
        return BinOp("/", items[0], items[1])

    def neg(self, items):
        return Neg(items[0])

    def state(self, items):
        first, *rest = items
        lead = first if isinstance(first, tuple) else ("+", first)
        return StateSum((lead, *rest))

    def minus_lead(self, items):
        return ("-", items[0])

    def plus_term(self, items):
        return ("+", items[0])

    def minus_term(self, items):
        return ("-", items[0])

    def term(self, items):
        if len(items) == 2:
            return Term(items[0], items[1])
        return Term(None, items[0])

    def coefficient(self, items):
        return items[0]

    def tensor(self, items):
        return Tensor(tuple(items))

    def ket(self, items):
        return CoherentKet(items[0], _generator(items[1]))

    def fock(self, items):
        return FockKet(str(items[0]))

    def measure(self, items):
        return tuple(_generator(tok) for tok in items)


_TRANSFORMER = _ToAst()


def _parse_value(text: str, start: str, *, line: int = 1, offset: int = 0):
    try:
        tree = PARSER.parse(text, start=start)
        return _TRANSFORMER.transform(tree)
    except VisitError as exc:
        orig = exc.orig_exc
        if isinstance(orig, GrassmannError):
            raise ParseError(
                f"unknown generator index: {orig}", line=line, column=offset + 1, token=text.strip()
            ) from orig
        raise
    except UnexpectedInput as exc:
        column = getattr(exc, "column", -1)
        token = ""
        if isinstance(exc, UnexpectedEOF) or column is None or column < 1:
            column = len(text) + 1
            message = "unexpected end of input"
        else:
            token = str(getattr(exc, "token", "") or getattr(exc, "char", "") or "")
            message = "unexpected input"
        raise ParseError(message, line=line, column=offset + column, token=token) from None


def parse_expr(text: str) -> Expr:
    """Parse a scalar or Grassmann expression such as "(1/sqrt(2)) * t1'"."""
    return _parse_value(text, "expr")


def parse_state(text: str) -> StateSum:
    return _parse_value(text, "state")


def parse_measure(text: str) -> tuple[GeneratorId, ...]:
    return _parse_value(text, "measure")


def iter_generators(node) -> Iterator[GeneratorId]:
    """Every generator mentioned by an expression, state or target."""
    match node:
        case Gen(generator=g):
            yield g
        case Call(arg=arg):
            yield from iter_generators(arg)
        case BinOp(left=left, right=right):
            yield from iter_generators(left)
            yield from iter_generators(right)
        case Neg(operand=operand):
            yield from iter_generators(operand)
        case CoherentKet(scale=scale, generator=g):
            yield g
            yield from iter_generators(scale)
        case Tensor(factors=factors):
            for f in factors:
                yield from iter_generators(f)
        case Term(coefficient=coefficient, tensor=tensor):
            if coefficient is not None:
                yield from iter_generators(coefficient)
            yield from iter_generators(tensor)
        case StateSum(terms=terms):
            for _, t in terms:
                yield from iter_generators(t)
        case tuple():
            yield from node
        case _:
            return


def _only_fock(node) -> bool:
    match node:
        case CoherentKet():
            return False
        case Tensor(factors=factors):
            return all(_only_fock(f) for f in factors)
        case Term(tensor=tensor):
            return _only_fock(tensor)
        case StateSum(terms=terms):
            return all(_only_fock(t) for _, t in terms)
        case _:
            return True


def parse_document(text: str) -> Document:
    """Parse a newline-delimited document into a validated Document."""
    found: dict[str, tuple[int, int, str]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        match = _SECTION.match(raw)
        first_col = len(raw) - len(raw.lstrip()) + 1
        if match is None:
            raise ParseError(
                "expected 'section: value'", line=line_no, column=first_col, token=stripped[:20]
            )
        name = match.group(1)
        if name not in SECTIONS:
            raise ParseError(
                f"unknown section {name!r}", line=line_no, column=first_col, token=name
            )
        if name in found:
            raise ParseError(
                f"section {name!r} appears twice", line=line_no, column=first_col, token=name
            )
        found[name] = (line_no, match.start(2), match.group(2))

    if not found:
        raise ParseError("empty document", line=1, column=1)

    parsed: dict[str, object] = {}
    for name in ("state", "weight", "measure"):
        if name in found:
            line_no, offset, value = found[name]
            start = "expr" if name == "weight" else name
            parsed[name] = _parse_value(value, start, line=line_no, offset=offset)

    if "measure" in parsed:
        factors = parsed["measure"]
        line_no, offset, value = found["measure"]
        if len(set(factors)) != len(factors):
            raise ParseError(
                "repeated measure factor", line=line_no, column=offset + 1, token=value.strip()
            )

    if "target" in found:
        line_no, offset, value = found["target"]
        name = value.strip()
        if _NAMED.fullmatch(name):
            if name not in named_keys():
                raise ParseError(
                    f"unknown named target {name!r}", line=line_no, column=offset + 1, token=name
                )
            parsed["target"] = NamedTarget(name)
        else:
            target = _parse_value(value, "state", line=line_no, offset=offset)
            if not _only_fock(target):
                raise ParseError(
                    "explicit targets may only contain Fock kets such as |01>",
                    line=line_no,
                    column=offset + 1,
                    token=name,
                )
            parsed["target"] = target

    used = 0
    for name in ("state", "weight", "measure", "target"):
        for g in iter_generators(parsed.get(name)):
            used = max(used, g.mode)

    declared = "modes" in found
    if declared:
        line_no, offset, value = found["modes"]
        try:
            modes = int(value.strip())
        except ValueError:
            raise ParseError(
                "modes must be an integer", line=line_no, column=offset + 1, token=value.strip()
            ) from None
        if not 1 <= modes <= MAX_MODES:
            raise ParseError(
                f"modes must be in 1..{MAX_MODES}", line=line_no, column=offset + 1, token=value.strip()
            )
        for name in ("state", "weight", "measure", "target"):
            if name not in parsed:
                continue
            for g in iter_generators(parsed[name]):
                if g.mode > modes:
                    sec_line, sec_offset, _ = found[name]
                    raise ParseError(
                        f"unknown generator index {g.mode} (document declares {modes} modes)",
                        line=sec_line,
                        column=sec_offset + 1,
                        token=str(g),
                    )
    else:
        modes = max(used, 1)

    document = Document(
        modes=modes,
        state=parsed.get("state"),
        weight=parsed.get("weight"),
        measure=parsed.get("measure"),
        target=parsed.get("target"),
        declared_modes=declared,
    )
    _check_sections(document, found)
    return document


def _check_sections(document: Document, found: dict[str, tuple[int, int, str]]) -> None:
    """Evaluate every section once so semantic errors surface at parse time."""
    checks = (
        ("state", build_state),
        ("weight", build_weight),
        ("target", build_target),
    )
    for name, build in checks:
        if getattr(document, name) is None:
            continue
        try:
            build(document)
        except FcsError as exc:
            line_no, offset, value = found[name]
            raise ParseError(str(exc), line=line_no, column=offset + 1, token=value.strip()) from exc
