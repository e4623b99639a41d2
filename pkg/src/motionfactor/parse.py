"""Reading motion polynomials from JSON or from expressions like ``t^2 + 1 + eps*i``.

Expression grammar (recursive descent)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary | unary)*      juxtaposition multiplies
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := NUMBER | "t" | "i" | "j" | "k" | "eps" | "e" | "(" expr ")"

Division is only allowed by a nonzero real constant.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import EPS, I, J, K, DualQuaternion, scalar
from .errors import ParseError
from .polyring import DQPoly, RPoly, poly_from_json

_ALIASES = {"−": "-", "·": "*", "⋅": "*", "**": "^", "ε": "eps"}
_ATOMS = {"t", "i", "j", "k", "e", "eps", "epsilon"}
_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z]+)|(\*\*|[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    for src, dst in _ALIASES.items():
        text = text.replace(src, f" {dst} " if dst == "eps" else dst)
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        num, name, op = m.groups()
        if num is not None:
            out.append(Token("num", num, start))
        elif name is not None:
            out.extend(_split_name(name, start))
        else:
            out.append(Token("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


def _split_name(name: str, start: int) -> list[Token]:
    if name in _ATOMS:
        return [Token("name", name, start)]
    if all(c in "tijke" for c in name):
        return [Token("name", c, start + n) for n, c in enumerate(name)]
    raise ParseError(f"unknown symbol {name!r}", start)


class _Parser:
    def __init__(self, text: str, mode: str):
        self.tokens = tokenize(text)
        self.idx = 0
        self.mode = mode

    @property
    def tok(self) -> Token:
        return self.tokens[self.idx]

    def advance(self) -> Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def parse(self) -> DQPoly:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return value

    def expr(self) -> DQPoly:
        value = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_atom(self) -> bool:
        tok = self.tok
        return tok.kind in ("num", "name") or (tok.kind == "op" and tok.text == "(")

    def term(self) -> DQPoly:
        value = self.unary()
        while True:
            tok = self.tok
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                value = value * self.unary()
            elif tok.kind == "op" and tok.text == "/":
                self.advance()
                value = self._divide(value, self.unary(), tok.pos)
            elif self._starts_atom():
                value = value * self.power()
            else:
                return value

    def _divide(self, value: DQPoly, divisor: DQPoly, pos: int) -> DQPoly:
        if divisor.deg != 0 or not divisor.lead.is_real():
            raise ParseError("division is only defined by a real constant", pos)
        c = divisor.lead.primal.w
        if c == 0:
            raise ParseError("division by zero", pos)
        return value / c

    def unary(self) -> DQPoly:
        if self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            value = self.unary()
            return -value if op == "-" else value
        return self.power()

    def power(self) -> DQPoly:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            tok = self.advance()
            if tok.kind != "num" or not tok.text.isdigit():
                raise ParseError("exponent must be a nonnegative integer", tok.pos)
            return base ** int(tok.text)
        return base

    def atom(self) -> DQPoly:
        tok = self.advance()
        if tok.kind == "num":
            return DQPoly([scalar(tok.text, self.mode)])
        if tok.kind == "name":
            return self._name(tok.text)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            close = self.advance()
            if close.kind != "op" or close.text != ")":
                raise ParseError("expected ')'", close.pos)
            return value
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"unexpected {what}", tok.pos)

    def _name(self, name: str) -> DQPoly:
        one = scalar(1, self.mode)
        if name == "t":
            return DQPoly([scalar(0, self.mode), one])
        unit = {"i": I, "j": J, "k": K}.get(name)
        if unit is not None:
            return DQPoly([DualQuaternion(unit * one)])
        return DQPoly([EPS * one])


def parse_expression(text: str, mode: str = "exact") -> DQPoly:
    """Parse a dual quaternion polynomial expression."""
    return _Parser(text, mode).parse()


def parse_real(text: str, mode: str = "exact") -> RPoly:
    """Parse an expression that must evaluate to a real polynomial."""
    p = parse_expression(text, mode)
    if not p.is_real():
        raise ParseError(f"{text!r} is not a real polynomial", 0)
    return p.primal.to_rpoly()


def parse_input(text: str, mode: str = "exact") -> DQPoly:
    """JSON coefficient format when the text starts with '{', else an expression."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from exc
        try:
            return poly_from_json(obj, mode)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid polynomial JSON: {exc}", 0) from exc
    return parse_expression(text, mode)


def load_input(source: str, mode: str = "exact") -> DQPoly:
    """Read ``source`` as a file when it exists, else parse it as inline text."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_input(fh.read(), mode)
    return parse_input(source, mode)


def parse_point(text: str, mode: str = "exact") -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ParseError("a point needs three comma separated coordinates", 0)
    try:
        return tuple(scalar(p, mode) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coordinate in {text!r}: {exc}", 0) from exc


def parse_samples(text: str, mode: str = "exact") -> list:
    """``a..b`` (integer steps), ``a..b:n`` (n evenly spaced values) or a comma list."""
    try:
        if ".." in text:
            span, _, count = text.partition(":")
            lo_text, hi_text = span.split("..")
            lo, hi = Fraction(lo_text.strip()), Fraction(hi_text.strip())
            if count:
                n = int(count)
                if n < 1:
                    raise ValueError("sample count must be positive")
                values = [lo] if n == 1 else [lo + (hi - lo) * s / (n - 1) for s in range(n)]
            else:
                values = []
                x = lo
                while x <= hi:
                    values.append(x)
                    x += 1
        else:
            values = [Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad sample specification {text!r}: {exc}", 0) from exc
    return [scalar(v, mode) for v in values]
