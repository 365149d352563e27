"""Text <-> Laurent polynomial.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ['-'] factor
    factor := base (('^' | '**') ['-'] integer)?
    base   := integer | variable | '(' expr ')'

Juxtaposition is not multiplication, and a divisor must be a monomial with
coefficient +1 or -1, so results always stay Laurent polynomials.
"""

from __future__ import annotations

import re

from .laurent import LaurentPoly


class ExprError(ValueError):
    pass


class ExprSyntaxError(ExprError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class UnsupportedDivisorError(ExprError):
    pass


class UnboundVariableError(ExprError):
    pass


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")
_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


def _check_vars(vars):
    vars = list(vars)
    if not vars:
        raise ExprError("at least one variable is required")
    for v in vars:
        if not _IDENT_RE.match(v):
            raise ExprError(f"bad variable name {v!r}")
    if len(set(vars)) != len(vars):
        raise ExprError(f"duplicate variable names in {vars}")
    return vars


def _invert_monomial(poly, what):
    if len(poly) != 1:
        raise UnsupportedDivisorError(f"{what} must be a single monomial")
    ((e, c),) = poly.items()
    if c not in (1, -1):
        raise UnsupportedDivisorError(f"{what} must have coefficient +1 or -1, got {c}")
    return LaurentPoly.monomial(tuple(-x for x in e), c)


class _Parser:
    def __init__(self, text, vars):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {v: k for k, v in enumerate(vars)}
        self.arity = len(vars)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)

    def is_op(self, *ops):
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def parse(self):
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", pos)
        return result

    def expr(self):
        acc = self.term()
        while self.is_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.is_op("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                acc = acc * _invert_monomial(rhs, "divisor")
        return acc

    def unary(self):
        if self.is_op("-"):
            self.take()
            return -self.factor()
        return self.factor()

    def factor(self):
        base = self.base()
        if self.is_op("^"):
            self.take()
            negative = False
            if self.is_op("-"):
                self.take()
                negative = True
            kind, val, pos = self.take()
            if kind != "int":
                raise ExprSyntaxError("expected integer exponent", pos)
            if negative:
                base = _invert_monomial(base, "base of a negative power")
            base = base**val
        return base

    def base(self):
        kind, val, pos = self.take()
        if kind == "int":
            return LaurentPoly.constant(val, self.arity)
        if kind == "name":
            if val not in self.index:
                raise UnboundVariableError(f"unknown variable {val!r} at position {pos}")
            e = [0] * self.arity
            e[self.index[val]] = 1
            return LaurentPoly.monomial(e)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {what}", pos)


def parse_laurent(text: str, vars=("x",)) -> LaurentPoly:
    """Parse ``text`` into an exact integer Laurent polynomial over ``vars``."""
    vars = _check_vars(vars)
    return _Parser(text, vars).parse()


def _monomial_str(e, vars):
    parts = []
    for v, k in zip(vars, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_laurent(P: LaurentPoly, vars=None) -> str:
    """Canonical text for ``P``; terms in lexicographic exponent order."""
    if vars is None:
        vars = ["x"] if P.arity == 1 else [f"x{i + 1}" for i in range(P.arity)]
    if len(vars) != P.arity:
        raise ExprError(f"need {P.arity} variable names, got {len(vars)}")
    if not P:
        return "0"
    out = []
    for e, c in P.key:
        mono = _monomial_str(e, vars)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if out or sign == "-":
            out.append(sign)
        out.append(body)
    return "".join(out)
