"""Recursive descent parser for single variable equations.

    equation := expr '=' expr
    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | '+' unary | power
    power    := atom ('^' unary)?                     (right associative)
    atom     := NUMBER | 'x' | 'e' | 'pi' | NAME '(' expr ')' | '(' expr ')'

Decimal literals become exact rationals. A minus applied directly to a literal folds into the literal."""

import re
from dataclasses import dataclass
from decimal import Decimal
from enum import StrEnum, auto
from fractions import Fraction

from transcert.arith.functions import FunctionName
from transcert.error import ParseError
from transcert.expr.algebraic import Rational
from transcert.expr.tree import (
    PI,
    Add,
    Const,
    Div,
    E,
    Equation,
    Expr,
    Fn,
    Mul,
    Pow,
    Sub,
    X,
    const,
)

FUNCTION_ALIASES: dict[str, FunctionName] = {
    "log": FunctionName.LN,
    "arcsin": FunctionName.ASIN,
    "arccos": FunctionName.ACOS,
    "arctan": FunctionName.ATAN,
    "arccot": FunctionName.ACOT,
    "arcsec": FunctionName.ASEC,
    "arccsc": FunctionName.ACSC,
} | {str(f): f for f in FunctionName}


class TokenKind(StrEnum):
    NUMBER = auto()
    NAME = auto()
    OPERATOR = auto()
    LPAREN = auto()
    RPAREN = auto()
    EQUALS = auto()
    END = auto()


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


_TOKEN_PATTERN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+(?![a-zA-Z(]))?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*|π)"
    r"|(?P<operator>[-+*/^])"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
    r"|(?P<equals>=)"
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ParseError(position, {"number", "name", "operator", "parenthesis", "'='"}, text)
        group = match.lastgroup
        if group != "space":
            tokens.append(Token(TokenKind(group), match.group(), position))
        position = match.end()
    tokens.append(Token(TokenKind.END, "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def fail(self, expected: set[str]) -> ParseError:
        return ParseError(self.current.position, expected, self.text)

    def expect(self, kind: TokenKind, description: str) -> Token:
        if self.current.kind != kind:
            raise self.fail({description})
        return self.advance()

    def is_operator(self, *symbols: str) -> bool:
        return self.current.kind == TokenKind.OPERATOR and self.current.text in symbols

    def equation(self) -> Equation:
        lhs = self.expr()
        self.expect(TokenKind.EQUALS, "'='")
        rhs = self.expr()
        if self.current.kind != TokenKind.END:
            raise self.fail({"end of input", "operator"})
        return Equation(lhs, rhs)

    def expr(self) -> Expr:
        node = self.term()
        while self.is_operator("+", "-"):
            op = self.advance().text
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.is_operator("*", "/"):
            op = self.advance().text
            right = self.unary()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def unary(self) -> Expr:
        if self.is_operator("-"):
            self.advance()
            operand = self.unary()
            if isinstance(operand, Const) and isinstance(operand.value, Rational):
                return Const(Rational(-operand.value.value))
            return Mul(const(-1), operand)
        if self.is_operator("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.is_operator("^"):
            self.advance()
            return Pow(base, self.unary())
        return base

    def atom(self) -> Expr:
        token = self.current
        match token.kind:
            case TokenKind.NUMBER:
                self.advance()
                return const(Fraction(Decimal(token.text)))
            case TokenKind.LPAREN:
                self.advance()
                inner = self.expr()
                self.expect(TokenKind.RPAREN, "')'")
                return inner
            case TokenKind.NAME:
                return self.name()
        raise self.fail({"number", "'x'", "'e'", "'pi'", "function name", "'('"})

    def name(self) -> Expr:
        token = self.advance()
        lowered = token.text.lower()
        if lowered == "x":
            return X
        if lowered == "e":
            return E
        if lowered in ("pi", "π"):
            return PI
        function = FUNCTION_ALIASES.get(lowered)
        if function is None:
            self.index -= 1
            raise self.fail({"'x'", "'e'", "'pi'", "function name"})
        self.expect(TokenKind.LPAREN, "'('")
        arg = self.expr()
        self.expect(TokenKind.RPAREN, "')'")
        return Fn(function, arg)


def parse_equation(text: str) -> Equation:
    """Parses 'lhs = rhs'. Raises ParseError with the failing position and the expected token kinds"""
    return _Parser(text).equation()


def parse_expr(text: str) -> Expr:
    """Parses a bare expression (no '=')"""
    parser = _Parser(text)
    node = parser.expr()
    if parser.current.kind != TokenKind.END:
        raise parser.fail({"end of input", "operator"})
    return node
