"""Expression grammar for rational-function coefficients and canonical printing.

Grammar (whitespace insignificant)::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := ("-" | "+") unary | power
    power := atom ("^" INT)?
    atom  := INT | "x" | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Poly, RatFunc


class ExprError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.col = line, col
        super().__init__(f"{message} at line {line}, column {col}")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(x)|([-+*/^()]))")


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ExprError(f"unexpected character {text[bad]!r}", text, bad)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2):
            toks.append(_Tok("x", "x", m.start(2)))
        else:
            toks.append(_Tok(m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> _Tok:
        tok = self.toks[self.i]
        if kind is not None and tok.kind != kind:
            what = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ExprError(f"expected {kind!r}, found {what}", self.text, tok.pos)
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        acc = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RatFunc:
        acc = self.unary()
        while self.peek().kind in ("*", "/"):
            tok = self.take()
            rhs = self.unary()
            if tok.kind == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise ExprError("division by the zero polynomial", self.text, tok.pos)
                acc = acc / rhs
        return acc

    def unary(self) -> RatFunc:
        tok = self.peek()
        if tok.kind == "-":
            self.take()
            return -self.unary()
        if tok.kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek().kind == "^":
            self.take()
            exp = int(self.take("int").text)
            return base**exp
        return base

    def atom(self) -> RatFunc:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return RatFunc.coerce(int(tok.text))
        if tok.kind == "x":
            self.take()
            return RatFunc.x()
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprError(f"unexpected {what}", self.text, tok.pos)


def parse_ratfunc_expr(text: str) -> RatFunc:
    """Parse ``text`` into an exact rational function."""
    parser = _Parser(text)
    value = parser.expr()
    parser.take("end")
    return value


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial(k: int) -> str:
    return "" if k == 0 else ("x" if k == 1 else f"x^{k}")


def format_poly(p: Poly) -> str:
    """Ascending-exponent rendering with explicit ``*`` and ``^``."""
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        mono = _monomial(k)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def _term_count(p: Poly) -> int:
    return sum(1 for c in p.coeffs if c)


def format_ratfunc(r: RatFunc) -> str:
    """Canonical text: denominator scaled so its lowest nonzero coefficient is 1."""
    if r.is_zero():
        return "0"
    num, den = r.num, r.den
    low = den[den.ord0()]
    if low != 1:
        num, den = num * (1 / low), den * (1 / low)
    ns = format_poly(num)
    if den.deg == 0:
        return ns
    if _term_count(num) > 1:
        ns = f"({ns})"
    ds = format_poly(den)
    if _term_count(den) > 1:
        ds = f"({ds})"
    return f"{ns}/{ds}"
