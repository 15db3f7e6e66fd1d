"""Expression front-end for the CLI.

Grammar (ASCII only, '*' explicit, '/' multiplies by an inverse):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' ['-'] int]
    atom   := int | symbol | '(' expr ')'
            | 'comm' '[' expr ',' expr ']' | 'acomm' '{' expr ',' expr '}'

Symbols cover the W generators (a+, a, t, b+, b, b2+, b2, e23, e32, k2, k3,
with k2inv/k3inv/tinv for inverses in symbol position) and the abstract
generators E12..E31, K1..K3, K1inv..; a trailing '+' is part of a symbol
only when directly attached, so "a + a" is a sum while "a+" is the creator.
Errors carry the offending position.  Renderings produced by the package
parse back to equal elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scalars as sc
from . import walgebra as wa
from .scalars import QScalar


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__("at position %d: %s" % (pos, message))
        self.pos = pos


class AbstractSymbolError(ValueError):
    """An abstract-algebra symbol reached a W-only evaluator."""


ABSTRACT_SYMBOLS = frozenset(
    ["E12", "E21", "E23", "E32", "E13", "E31"]
    + ["K%d" % i for i in (1, 2, 3)]
    + ["K%dinv" % i for i in (1, 2, 3)])

_PLUS_SYMBOLS = frozenset(["a+", "b+", "b1+", "b2+"])

W_SYMBOLS = frozenset(wa.GENERATOR_NAMES)

SCALAR_SYMBOLS = {"q": sc.Q, "p1": sc.P1, "p2": sc.P2, "p3": sc.P3}


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int


@dataclass(frozen=True)
class Bracket:
    anti: bool
    left: object
    right: object
    pos: int


# -- lexer ------------------------------------------------------------------

def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if j < n and text[j] == "+" and (word + "+") in _PLUS_SYMBOLS:
                word += "+"
                j += 1
            tokens.append(("name", word, i))
            i = j
            continue
        if ch in "+-*/^(),[]{}":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", None, n))
    return tokens


# -- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError("expected %r, found %s" % (kind, found), tok[2])
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input %r" % tok[1], tok[2])
        return node

    def expr(self):
        kind, _val, pos = self.peek()
        if kind == "-":
            self.next()
            node = Neg(self.term(), pos)
        else:
            node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _v, pos = self.next()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _v, pos = self.next()
            node = BinOp(op, node, self.factor(), pos)
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            _k, _v, pos = self.next()
            sign = 1
            if self.peek()[0] == "-":
                self.next()
                sign = -1
            tok = self.next()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer", tok[2])
            node = Pow(node, sign * tok[1], pos)
        return node

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            return Num(val, pos)
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "name":
            if val in ("comm", "acomm"):
                opener, closer = ("[", "]") if val == "comm" else ("{", "}")
                self.expect(opener)
                left = self.expr()
                self.expect(",")
                right = self.expr()
                self.expect(closer)
                return Bracket(val == "acomm", left, right, pos)
            if val in W_SYMBOLS or val in ABSTRACT_SYMBOLS \
                    or val in SCALAR_SYMBOLS:
                return Sym(val, pos)
            raise ParseError("unknown symbol %r" % val, pos)
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError("expected a value, found %s" % found, pos)


def parse(text):
    """Parse an expression to its AST; raises ParseError with a position."""
    return _Parser(text).parse()


# -- evaluation into W ------------------------------------------------------

def eval_w(node):
    """Evaluate an AST to a WElement; abstract symbols are rejected."""
    if isinstance(node, Num):
        return wa.WElement.from_scalar(node.value)
    if isinstance(node, Sym):
        if node.name in ABSTRACT_SYMBOLS:
            raise AbstractSymbolError(
                "%r is an abstract generator with no normal-ordered form; "
                "use the verify commands for the abstract algebra" % node.name)
        scal = SCALAR_SYMBOLS.get(node.name)
        if scal is not None:
            return wa.WElement.from_scalar(scal)
        return wa.generator(node.name)
    if isinstance(node, Neg):
        return -eval_w(node.operand)
    if isinstance(node, BinOp):
        left = eval_w(node.left)
        right = eval_w(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return wa.w_mul(left, right)
        if node.op == "/":
            return wa.w_mul(left, right.inverse())
    if isinstance(node, Pow):
        base = eval_w(node.base)
        return base ** node.exp
    if isinstance(node, Bracket):
        left = eval_w(node.left)
        right = eval_w(node.right)
        lr = wa.w_mul(left, right)
        rl = wa.w_mul(right, left)
        return lr + rl if node.anti else lr - rl
    raise TypeError("unknown AST node %r" % (node,))


def eval_scalar(node):
    """Evaluate an expression that must reduce to a pure scalar."""
    el = eval_w(node)
    if not el.terms:
        return QScalar.from_rational(0)
    if set(el.terms) == {wa.UNIT}:
        return el.terms[wa.UNIT]
    raise ValueError("expression is not a scalar")


def parse_w(text):
    return eval_w(parse(text))


def parse_scalar(text):
    return eval_scalar(parse(text))
