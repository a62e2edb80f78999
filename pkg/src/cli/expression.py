"""
The expression language for U(W) elements.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-' | '+') factor | power
    power  := atom ('^' '-'? INT)?
    atom   := INT ('/' INT)? | 'q' | gen | '(' expr ')'
    gen    := ('e' | 'f' | 'g' | 'h') '[' '-'? INT ',' '-'? INT ']' | 'd' | 'd1' | 'd2'

Tokens come from a ply lexer; the grammar is LL(1) and parsed by
recursive descent over a token stream.  Every error is a ParseError with
the character offset and the set of tokens that would have been accepted.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

import ply.lex as lex

from src.algebra.liealg import GenId, Kind, gen
from src.algebra.scalars import LaurentQ, Q
from src.algebra.uea import UElt
from src.utils.errors import ParseError, UsageError

logger = logging.getLogger(__name__)


# -- lexer --------------------------------------------------------------

class _ExprLexer:
    tokens = (
        "INT", "NAME", "PLUS", "MINUS", "STAR", "SLASH", "CARET",
        "LPAREN", "RPAREN", "LBRACKET", "RBRACKET", "COMMA",
    )

    t_PLUS = r"\+"
    t_MINUS = r"-"
    t_STAR = r"\*"
    t_SLASH = r"/"
    t_CARET = r"\^"
    t_LPAREN = r"\("
    t_RPAREN = r"\)"
    t_LBRACKET = r"\["
    t_RBRACKET = r"\]"
    t_COMMA = r","
    t_ignore = " \t"

    def t_INT(self, t):
        r"\d+"
        t.value = int(t.value)
        return t

    def t_NAME(self, t):
        r"[A-Za-z][A-Za-z0-9]*"
        return t

    def t_error(self, t):
        raise ParseError(f"unrecognized character {t.value[0]!r}", t.lexpos)


_LEXER = lex.lex(module=_ExprLexer(), errorlog=lex.NullLogger())

_DISPLAY = {
    "INT": "integer", "NAME": "name", "PLUS": "'+'", "MINUS": "'-'",
    "STAR": "'*'", "SLASH": "'/'", "CARET": "'^'", "LPAREN": "'('",
    "RPAREN": "')'", "LBRACKET": "'['", "RBRACKET": "']'", "COMMA": "','",
    "EOF": "end of input",
}

_ATOM_START = frozenset({"INT", "NAME", "LPAREN"})
_FACTOR_START = _ATOM_START | {"PLUS", "MINUS"}


@dataclass(frozen=True)
class Token:
    type: str
    value: object
    offset: int


def tokenize(text: str) -> List[Token]:
    """All tokens of text followed by an EOF token"""
    lexer = _LEXER.clone()
    lexer.input(text)
    try:
        out = [Token(tok.type, tok.value, tok.lexpos) for tok in iter(lexer.token, None)]
    except ParseError as e:
        raise ParseError(e.args[0], e.offset, e.expected, text) from None
    out.append(Token("EOF", None, len(text)))
    return out


class TokenStream:
    """Cursor over the token list with expectation-aware error reporting"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def next(self) -> Token:
        return self.tokens[self.pos]

    def next_is(self, *types: str) -> bool:
        return self.next().type in types

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.type != "EOF":
            self.pos += 1
        return tok

    def fail(self, expected, message: str = None) -> ParseError:
        tok = self.next()
        names = [_DISPLAY.get(e, e) for e in expected]
        if message is None:
            seen = _DISPLAY["EOF"] if tok.type == "EOF" else repr(str(tok.value))
            message = f"unexpected {seen}"
        return ParseError(message, tok.offset, names, self.text)

    def eat(self, type_: str) -> Token:
        if self.next_is(type_):
            return self.advance()
        raise self.fail([type_])

    def eat_signed_int(self) -> int:
        negative = False
        if self.next_is("MINUS"):
            self.advance()
            negative = True
        elif not self.next_is("INT"):
            raise self.fail(["INT", "MINUS"])
        value = self.eat("INT").value
        return -value if negative else value


# -- syntax tree --------------------------------------------------------

@dataclass(frozen=True)
class Number:
    value: Fraction
    offset: int


@dataclass(frozen=True)
class QVar:
    offset: int


@dataclass(frozen=True)
class Gen:
    kind: Kind
    degree: Tuple[int, int]
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ExprAst"
    right: "ExprAst"
    offset: int


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int
    offset: int


ExprAst = Union[Number, QVar, Gen, Neg, BinOp, Pow]

_GRADED = {"e": Kind.E, "f": Kind.F, "g": Kind.G, "h": Kind.H}
_PLAIN = {"d": Kind.D, "d1": Kind.D1, "d2": Kind.D2}


# -- parser -------------------------------------------------------------

def _parse_expr(ts: TokenStream) -> ExprAst:
    node = _parse_term(ts)
    while ts.next_is("PLUS", "MINUS"):
        tok = ts.advance()
        right = _parse_term(ts)
        node = BinOp("+" if tok.type == "PLUS" else "-", node, right, tok.offset)
    return node


def _parse_term(ts: TokenStream) -> ExprAst:
    node = _parse_factor(ts)
    while ts.next_is("STAR"):
        tok = ts.advance()
        node = BinOp("*", node, _parse_factor(ts), tok.offset)
    return node


def _parse_factor(ts: TokenStream) -> ExprAst:
    if ts.next_is("MINUS"):
        tok = ts.advance()
        return Neg(_parse_factor(ts), tok.offset)
    if ts.next_is("PLUS"):
        ts.advance()
        return _parse_factor(ts)
    return _parse_power(ts)


def _parse_power(ts: TokenStream) -> ExprAst:
    base = _parse_atom(ts)
    if ts.next_is("CARET"):
        tok = ts.advance()
        return Pow(base, ts.eat_signed_int(), tok.offset)
    return base


def _parse_atom(ts: TokenStream) -> ExprAst:
    tok = ts.next()
    if tok.type == "INT":
        ts.advance()
        value = Fraction(tok.value)
        if ts.next_is("SLASH"):
            ts.advance()
            denominator = ts.eat("INT")
            if denominator.value == 0:
                raise ParseError("zero denominator", denominator.offset, (), ts.text)
            value = Fraction(tok.value, denominator.value)
        return Number(value, tok.offset)
    if tok.type == "LPAREN":
        ts.advance()
        node = _parse_expr(ts)
        ts.eat("RPAREN")
        return node
    if tok.type == "NAME":
        name = tok.value
        if name == "q":
            ts.advance()
            return QVar(tok.offset)
        if name in _PLAIN:
            ts.advance()
            return Gen(_PLAIN[name], (0, 0), tok.offset)
        if name in _GRADED:
            ts.advance()
            ts.eat("LBRACKET")
            m1 = ts.eat_signed_int()
            ts.eat("COMMA")
            m2 = ts.eat_signed_int()
            ts.eat("RBRACKET")
            return Gen(_GRADED[name], (m1, m2), tok.offset)
        raise ts.fail((), f"unknown name {name!r} (use q, d, d1, d2, e[..], f[..], g[..], h[..])")
    raise ts.fail(sorted(_FACTOR_START))


def parse_expr(text: str) -> ExprAst:
    """
    Parse an element expression.

    Raises:
        ParseError: with the offending offset and the accepted token set
    """
    ts = TokenStream(text)
    if ts.next_is("EOF"):
        raise ts.fail(sorted(_FACTOR_START), "empty expression")
    node = _parse_expr(ts)
    if not ts.next_is("EOF"):
        expected = {"PLUS", "MINUS", "STAR", "EOF"}
        if isinstance(node, (Number, QVar, Gen)) or ts.next_is("CARET"):
            expected.add("CARET")
        raise ts.fail(sorted(expected))
    return node


# -- evaluation ---------------------------------------------------------

Value = Union[LaurentQ, UElt]


def evaluate(node: ExprAst) -> Value:
    """
    Evaluate to a scalar or a normal-form U-element.

    g[0,0] and h[0,0] evaluate to zero.
    """
    if isinstance(node, Number):
        return LaurentQ.const(node.value)
    if isinstance(node, QVar):
        return Q
    if isinstance(node, Gen):
        return UElt.gen(gen(node.kind, node.degree))
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, Pow):
        base = evaluate(node.base)
        try:
            return base ** node.exponent
        except ZeroDivisionError as e:
            raise UsageError(f"at offset {node.offset}: {e}") from None
        except UsageError as e:
            raise UsageError(f"at offset {node.offset}: {e}") from None
    if isinstance(node, BinOp):
        left, right = evaluate(node.left), evaluate(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str) -> UElt:
    """Parse and evaluate, lifting scalars into U"""
    value = evaluate(parse_expr(text))
    if isinstance(value, LaurentQ):
        return UElt.scalar(value)
    return value


def parse_generator(text: str) -> GenId:
    """
    Parse text that must denote a single basis generator.

    Raises:
        UsageError: when the expression is not exactly one generator
    """
    value = parse_element(text)
    items = list(value.items())
    if len(items) == 1:
        mono, coeff = items[0]
        if len(mono) == 1 and coeff == 1:
            return mono[0]
    raise UsageError(f"{text!r} is not a single generator")


def canonical(text: str) -> str:
    """Canonical rendering of the element text denotes"""
    return parse_element(text).render()

