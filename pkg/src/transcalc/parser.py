"""Tokenizer and recursive-descent parser for the calculator language.

Grammar::

    stmt   := 'let' ident '=' expr | expr
    expr   := term (('+' | '-') term)*
    term   := signed (('*' | '/') signed)*
    signed := ('-' | '+') signed | factor
    factor := atom ('^' exponent)?
    exponent := ['-'] rational | '(' ['-'] rational ')'
    atom   := rational | 'x' | 'Y' "'"* | ident '(' args ')' | ident | '(' expr ')'
    rational := integer ('/' positive-integer)?

A '/' directly between two integer literals always forms a rational
literal, so ``x^1/2`` is ``x^(1/2)``.
"""

import re
from dataclasses import dataclass

from . import errors
from .rational import Q

# name -> (min args, max args)
FUNCTIONS = {
    "log": (1, 1), "exp": (1, 1), "d": (1, 1), "int": (1, 1),
    "compose": (2, 2), "inverse": (1, 1), "lt": (1, 1), "sign": (1, 1),
    "cmp": (2, 2), "lambda": (1, 1), "omega": (1, 1), "omega_map": (1, 1),
    "theta": (1, 1), "schwarzian": (1, 1), "newton": (1, 1), "vP": (2, 2),
    "solve1": (2, 2), "in_I": (1, 1), "in_Lambda": (1, 1), "osc": (1, 1),
    "gamma": (1, 1),
    # extras
    "sint": (1, 1), "eval": (2, 2), "conj": (2, 2), "equalize": (2, 2),
}

RESERVED = set(FUNCTIONS) | {"x", "Y", "let"}


@dataclass(frozen=True)
class Num:
    value: Q
    pos: int = 0


@dataclass(frozen=True)
class X:
    pos: int = 0


@dataclass(frozen=True)
class DVar:
    """``Y^(order)``."""
    order: int
    pos: int = 0


@dataclass(frozen=True)
class Name:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: Q
    pos: int = 0


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = 0


@dataclass(frozen=True)
class Let:
    name: str
    expr: object
    pos: int = 0


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)('*)|(.))")


def tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m.end() == pos or (m.group(1) is None and m.group(2) is None and m.group(4) is None):
            break
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            name, quotes = m.group(2), m.group(3)
            if quotes and name != "Y":
                raise errors.SyntaxError("primes are only allowed on Y", m.start(3))
            toks.append(("ident", name + quotes, m.start(2)))
        else:
            ch = m.group(4)
            if ch not in "+-*/^(),=":
                raise errors.SyntaxError(f"unexpected character {ch!r}", m.start(4))
            toks.append((ch, ch, m.start(4)))
        pos = m.end()
    toks.append(("end", None, len(text.rstrip()) if text.strip() else len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        t = self.peek()
        if t[0] != kind:
            raise errors.SyntaxError(f"expected {kind!r}", t[2])
        return self.next()

    def fail(self, msg):
        raise errors.SyntaxError(msg, self.peek()[2])

    def stmt(self):
        t = self.peek()
        if t[0] == "ident" and t[1] == "let":
            self.next()
            name = self.expect("ident")
            if name[1] in RESERVED:
                raise errors.SyntaxError(f"cannot bind reserved name {name[1]!r}", name[2])
            self.expect("=")
            node = Let(name[1], self.expr(), t[2])
        else:
            node = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected input")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in "+-":
            op, _, pos = self.next()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.signed()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.next()
            node = BinOp(op, node, self.signed(), pos)
        return node

    def signed(self):
        t = self.peek()
        if t[0] == "-":
            self.next()
            return Neg(self.signed(), t[2])
        if t[0] == "+":
            self.next()
            return self.signed()
        return self.factor()

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            _, _, pos = self.next()
            node = Pow(node, self.exponent(), pos)
            if self.peek()[0] == "^":
                self.fail("chained '^' needs parentheses")
        return node

    def rational(self):
        t = self.expect("int") if self.peek()[0] == "int" else None
        if t is None:
            self.fail("exponent must be a rational literal")
        num = t[1]
        if self.peek()[0] == "/" and self.peek(1)[0] == "int":
            self.next()
            den = self.next()
            if den[1] == 0:
                raise errors.SyntaxError("zero denominator", den[2])
            return Q(num, den[1])
        return Q(num)

    def signed_rational(self):
        s = 1
        if self.peek()[0] in "+-":
            s = -1 if self.next()[0] == "-" else 1
        return s * self.rational()

    def exponent(self):
        if self.peek()[0] == "(":
            self.next()
            r = self.signed_rational()
            self.expect(")")
            return r
        return self.signed_rational()

    def atom(self):
        t = self.peek()
        kind, val, pos = t
        if kind == "int":
            return Num(self.rational(), pos)
        if kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "ident":
            self.next()
            if val == "x":
                return X(pos)
            if val.startswith("Y") and set(val[1:]) <= {"'"}:
                return DVar(len(val) - 1, pos)
            if self.peek()[0] == "(":
                if val not in FUNCTIONS:
                    raise errors.UnknownFunction(f"unknown function {val!r}", pos)
                self.next()
                args = []
                if self.peek()[0] != ")":
                    args.append(self.expr())
                    while self.peek()[0] == ",":
                        self.next()
                        args.append(self.expr())
                self.expect(")")
                lo, hi = FUNCTIONS[val]
                if not lo <= len(args) <= hi:
                    raise errors.ArityError(
                        f"{val} takes {lo} argument{'s' if lo != 1 else ''}, got {len(args)}", pos)
                return Call(val, tuple(args), pos)
            if val in FUNCTIONS:
                raise errors.SyntaxError(f"function {val!r} needs arguments", pos)
            if val == "let":
                raise errors.SyntaxError("'let' is only allowed at the start of a line", pos)
            return Name(val, pos)
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {val!r}")


def parse(text):
    """Parse one statement (an expression or a ``let`` binding)."""
    return _Parser(text).stmt()


def parse_expr(text):
    node = parse(text)
    if isinstance(node, Let):
        raise errors.SyntaxError("expected an expression", node.pos)
    return node
