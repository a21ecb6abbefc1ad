"""String-diagram expressions: ``;`` composes sequentially, ``*`` in parallel and binds tighter."""

from dataclasses import dataclass
from functools import cache, reduce

import pyparsing as pp
from beartype import beartype

from monowidth.utils.errors import DiagramSyntaxError

PLAIN_GENERATORS = ("copy", "add", "discard", "zero", "swap", "cup", "vertex")
ARGUMENT_GENERATORS = ("id", "scalar", "mat")

MatrixLiteral = tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class DiagramExpr:
    """Node of a parsed diagram expression."""


@dataclass(frozen=True)
class Generator(DiagramExpr):
    """A generator with its argument: the wire count of ``id``, the scalar of ``scalar``, the rows of ``mat``."""

    name: str
    argument: int | str | MatrixLiteral | None = None


@dataclass(frozen=True)
class Sequential(DiagramExpr):
    left: DiagramExpr
    right: DiagramExpr


@dataclass(frozen=True)
class Parallel(DiagramExpr):
    left: DiagramExpr
    right: DiagramExpr


def _unknown_generator(s: str, loc: int, toks: pp.ParseResults) -> None:
    expected = ", ".join((*ARGUMENT_GENERATORS, *PLAIN_GENERATORS))
    raise pp.ParseFatalException(s, loc, f"Unknown generator {toks[0]!r}, expected one of {expected}")


def _matrix_literal(toks: pp.ParseResults) -> Generator:
    return Generator("mat", tuple(tuple(row) for row in toks[1]))


@cache
def make_grammar() -> pp.ParserElement:
    """Grammar ``expr := term (';' term)*``, ``term := atom ('*' atom)*``, ``atom := generator | '(' expr ')'``."""

    integer = pp.Regex(r"\d+")
    scalar = pp.Regex(r"-?\d+(/\d+)?")
    lbracket, rbracket, comma = pp.Suppress("["), pp.Suppress("]"), pp.Suppress(",")
    lparen, rparen = pp.Suppress("("), pp.Suppress(")")

    row = pp.Group(lbracket + pp.Optional(scalar + pp.ZeroOrMore(comma + scalar)) + rbracket)
    matrix = pp.Group(lbracket + pp.Optional(row + pp.ZeroOrMore(comma + row)) + rbracket)

    identity = pp.Keyword("id") + pp.Optional(integer, default="1")
    scalar_generator = pp.Keyword("scalar") - scalar
    matrix_generator = pp.Keyword("mat") - matrix
    plain = pp.MatchFirst([pp.Keyword(name) for name in PLAIN_GENERATORS])
    unknown = pp.Word(pp.alphas + "_", pp.alphanums + "_")

    identity.set_parse_action(lambda toks: Generator("id", int(toks[1])))
    scalar_generator.set_parse_action(lambda toks: Generator("scalar", toks[1]))
    matrix_generator.set_parse_action(_matrix_literal)
    plain.set_parse_action(lambda toks: Generator(toks[0]))
    unknown.set_parse_action(_unknown_generator)

    expr = pp.Forward()
    atom = identity | scalar_generator | matrix_generator | plain | unknown | (lparen + expr + rparen)
    term = atom + pp.ZeroOrMore(pp.Suppress("*") + atom)
    sequence = term + pp.ZeroOrMore(pp.Suppress(";") + term)

    term.set_parse_action(lambda toks: reduce(Parallel, toks))
    sequence.set_parse_action(lambda toks: reduce(Sequential, toks))

    expr <<= sequence
    return expr


@beartype
def parse(text: str) -> DiagramExpr:
    """Parse a diagram expression such as ``"copy ; (id 1 * copy) ; (id 2 * add)"``.

    Args:
        text (str): Expression; whitespace and line breaks are free.

    Raises:
        DiagramSyntaxError: The text does not parse or names an unknown generator; carries line and column.

    Returns:
        DiagramExpr: Both operators nest to the left.
    """

    try:
        result = make_grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise DiagramSyntaxError(e.msg, e.lineno, e.col) from None
    return result[0]


def _matrix_text(rows: MatrixLiteral) -> str:
    return "[" + ", ".join("[" + ", ".join(row) + "]" for row in rows) + "]"


def _wrapped(expr: DiagramExpr, *kinds: type) -> str:
    text = to_text(expr)
    return f"({text})" if isinstance(expr, kinds) else text


@beartype
def to_text(expr: DiagramExpr) -> str:
    """Print an expression with the fewest parentheses that :func:`parse` reads back to the same tree."""

    match expr:
        case Generator(name="id", argument=wires):
            return f"id {wires}"
        case Generator(name="scalar", argument=value):
            return f"scalar {value}"
        case Generator(name="mat", argument=rows):
            return f"mat {_matrix_text(rows)}"
        case Generator(name=name):
            return name
        case Sequential(left=left, right=right):
            return f"{to_text(left)} ; {_wrapped(right, Sequential)}"
        case Parallel(left=left, right=right):
            return f"{_wrapped(left, Sequential)} * {_wrapped(right, Sequential, Parallel)}"
    raise TypeError(f"Unknown expression node {type(expr).__name__}")
