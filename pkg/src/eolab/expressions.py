"""Tiny expression language for enumerator programs.

Arithmetic grammar (value and cost fields)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "mod") factor)*
    factor := natural | "i" | "(" expr ")"

Guards add comparisons and boolean connectives on top::

    guard := conj ("or" conj)*
    conj  := cmp ("and" cmp)*
    cmp   := expr ("==" | "!=" | "<" | "<=") expr

The only bound variable is ``i``.  Arithmetic is checked unsigned
64-bit: subtraction truncates at zero, anything exceeding 2**64 - 1
raises instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

MAX_VALUE = 2**64 - 1

_KEYWORDS = {"mod", "and", "or"}
_CMP_OPS = {"==", "!=", "<", "<="}


class ExpressionError(ValueError):
    """Base for anything wrong with an expression's text."""


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownIdentifierError(ExpressionSyntaxError):
    def __init__(self, name: str, position: int):
        self.name = name
        ExpressionError.__init__(self, f"unknown identifier {name!r} (at position {position}); only 'i' is bound")
        self.position = position


class GuardTypeError(ExpressionError):
    """An arithmetic value appeared where a boolean was required."""


class EvaluationError(ArithmeticError):
    """Expression evaluation failed for a specific input."""

    def __init__(self, message: str, expression: str, input_value: int):
        self.expression = expression
        self.input_value = input_value
        super().__init__(f"{message} while evaluating {expression!r} at i={input_value}")


class CheckedOverflowError(EvaluationError):
    """A result exceeded 64 unsigned bits."""


# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class _Nat:
    value: int


@dataclass(frozen=True)
class _Var:
    pass


@dataclass(frozen=True)
class _Arith:
    op: str  # + - * mod
    left: "_ArithNode"
    right: "_ArithNode"


_ArithNode = Union[_Nat, _Var, _Arith]


@dataclass(frozen=True)
class _Compare:
    op: str  # == != < <=
    left: _ArithNode
    right: _ArithNode


@dataclass(frozen=True)
class _Logic:
    op: str  # and or
    left: "_BoolNode"
    right: "_BoolNode"


_BoolNode = Union[_Compare, _Logic]


# --- tokenizer ------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # nat ident op end
    text: str
    position: int  # 1-based


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(source)
    while pos < n:
        ch = source[pos]
        if ch.isspace():
            pos += 1
            continue
        start = pos + 1
        if ch.isdigit():
            end = pos
            while end < n and source[end].isdigit():
                end += 1
            tokens.append(_Token("nat", source[pos:end], start))
            pos = end
        elif ch.isalpha() or ch == "_":
            end = pos
            while end < n and (source[end].isalnum() or source[end] == "_"):
                end += 1
            tokens.append(_Token("ident", source[pos:end], start))
            pos = end
        elif ch in "+-*()":
            tokens.append(_Token("op", ch, start))
            pos += 1
        elif ch in "=!<":
            if source[pos : pos + 2] in ("==", "!=", "<="):
                tokens.append(_Token("op", source[pos : pos + 2], start))
                pos += 2
            elif ch == "<":
                tokens.append(_Token("op", "<", start))
                pos += 1
            else:
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", start)
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", start)
    tokens.append(_Token("end", "", n + 1))
    return tokens


# --- parser ---------------------------------------------------------------


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.at = 0

    def peek(self) -> _Token:
        return self.tokens[self.at]

    def advance(self) -> _Token:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def factor(self) -> _ArithNode:
        tok = self.advance()
        if tok.kind == "nat":
            value = int(tok.text)
            if value > MAX_VALUE:
                raise ExpressionSyntaxError(f"literal {tok.text} exceeds 64 bits", tok.position)
            return _Nat(value)
        if tok.kind == "ident":
            if tok.text == "i":
                return _Var()
            if tok.text in _KEYWORDS:
                raise ExpressionSyntaxError(f"unexpected keyword {tok.text!r}", tok.position)
            raise UnknownIdentifierError(tok.text, tok.position)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            closing = self.advance()
            if closing.text != ")":
                raise ExpressionSyntaxError("expected ')'", closing.position)
            return inner
        raise ExpressionSyntaxError(f"expected a natural, 'i' or '(' but found {tok.text or 'end of input'!r}", tok.position)

    def term(self) -> _ArithNode:
        node = self.factor()
        while True:
            tok = self.peek()
            if (tok.kind == "op" and tok.text == "*") or (tok.kind == "ident" and tok.text == "mod"):
                self.advance()
                node = _Arith("mod" if tok.text == "mod" else "*", node, self.factor())
            else:
                return node

    def expr(self) -> _ArithNode:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in ("+", "-"):
            op = self.advance().text
            node = _Arith(op, node, self.term())
        return node

    def comparison(self) -> _Compare:
        left = self.expr()
        tok = self.peek()
        if tok.kind == "op" and tok.text in _CMP_OPS:
            self.advance()
            return _Compare(tok.text, left, self.expr())
        raise GuardTypeError(
            f"guard requires a comparison (==, !=, <, <=) but found "
            f"{tok.text or 'end of input'!r} at position {tok.position}"
        )

    def conj(self) -> _BoolNode:
        node = self.comparison()
        while self.peek().kind == "ident" and self.peek().text == "and":
            self.advance()
            node = _Logic("and", node, self.comparison())
        return node

    def guard(self) -> _BoolNode:
        node = self.conj()
        while self.peek().kind == "ident" and self.peek().text == "or":
            self.advance()
            node = _Logic("or", node, self.conj())
        return node

    def expect_end(self) -> None:
        tok = self.peek()
        if tok.kind != "end":
            raise ExpressionSyntaxError(f"unexpected trailing {tok.text!r}", tok.position)


# --- evaluation -----------------------------------------------------------


def _eval_arith(node: _ArithNode, i: int, source: str) -> int:
    if isinstance(node, _Nat):
        return node.value
    if isinstance(node, _Var):
        return i
    left = _eval_arith(node.left, i, source)
    right = _eval_arith(node.right, i, source)
    if node.op == "+":
        result = left + right
    elif node.op == "-":
        result = left - right if left > right else 0
    elif node.op == "*":
        result = left * right
    else:  # mod
        if right == 0:
            raise EvaluationError("mod by zero", source, i)
        result = left % right
    if result > MAX_VALUE:
        raise CheckedOverflowError("overflow beyond 64 bits", source, i)
    return result


def _eval_bool(node: _BoolNode, i: int, source: str) -> bool:
    if isinstance(node, _Compare):
        left = _eval_arith(node.left, i, source)
        right = _eval_arith(node.right, i, source)
        if node.op == "==":
            return left == right
        if node.op == "!=":
            return left != right
        if node.op == "<":
            return left < right
        return left <= right
    if node.op == "and":
        return _eval_bool(node.left, i, source) and _eval_bool(node.right, i, source)
    return _eval_bool(node.left, i, source) or _eval_bool(node.right, i, source)


@dataclass(frozen=True)
class ArithExpr:
    """A parsed arithmetic expression over the variable i."""

    source: str
    root: _ArithNode

    def evaluate(self, i: int) -> int:
        return _eval_arith(self.root, i, self.source)


@dataclass(frozen=True)
class GuardExpr:
    """A parsed boolean expression over the variable i."""

    source: str
    root: _BoolNode

    def evaluate(self, i: int) -> bool:
        return _eval_bool(self.root, i, self.source)


def parse_arith(source: str) -> ArithExpr:
    parser = _Parser(source)
    root = parser.expr()
    parser.expect_end()
    return ArithExpr(source, root)


def parse_guard(source: str) -> GuardExpr:
    parser = _Parser(source)
    root = parser.guard()
    parser.expect_end()
    return GuardExpr(source, root)
