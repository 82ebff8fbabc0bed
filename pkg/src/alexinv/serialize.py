"""Text and JSON encodings for rationals, Laurent polynomials and words.

Polynomial grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' ['-'] INT]
    atom   := NUMBER ['/' INT] | VAR | '(' expr ')'
    VAR    := 't' | 't' INT          (t alone means t1)

Variables are 1-based: ``t1, t2, ...``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .laurent import LaurentPoly

__all__ = ["parse_poly", "poly_to_text", "poly_to_json", "poly_from_json",
           "frac_str", "parse_frac", "PolyParseError"]


class PolyParseError(ValueError):
    pass


def frac_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError("boolean is not a rational")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not re.fullmatch(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*", s):
        raise ValueError(f"not a rational string: {s!r}")
    return Fraction(s.replace(" ", ""))


_TOKEN = re.compile(r"\s*(?:(\d+)|(t\d*)|(.))")


def _tokens(text):
    out = []
    for m in _TOKEN.finditer(text):
        num, var, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif var is not None:
            out.append(("var", int(var[1:]) if len(var) > 1 else 1))
        elif sym is not None and not sym.isspace():
            if sym not in "+-*^/()":
                raise PolyParseError(f"unexpected character {sym!r}")
            out.append((sym, None))
    return out


class _Parser:
    def __init__(self, text, num_vars):
        self.toks = _tokens(text)
        self.pos = 0
        self.num_vars = num_vars

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self, kind=None):
        if self.pos >= len(self.toks):
            raise PolyParseError("unexpected end of input")
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}, got {tok[0]!r}")
        self.pos += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in ("*", "num", "var", "("):
            if self.peek() == "*":
                self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            k = self.take("num")[1]
            base = base ** (-k if neg else k)
        return base

    def atom(self):
        kind = self.peek()
        if kind == "num":
            n = self.take()[1]
            if self.peek() == "/":
                self.take()
                n = Fraction(n, self.take("num")[1])
            return LaurentPoly.constant(self.num_vars, n)
        if kind == "var":
            i = self.take()[1]
            if not 1 <= i <= self.num_vars:
                raise PolyParseError(f"variable t{i} outside 1..{self.num_vars}")
            return LaurentPoly.var(self.num_vars, i - 1)
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        raise PolyParseError(f"unexpected token {kind!r}")


def parse_poly(text: str, num_vars: int | None = None) -> LaurentPoly:
    """Parse a Laurent polynomial; num_vars defaults to the largest index used."""
    if num_vars is None:
        idx = [v for k, v in _tokens(text) if k == "var"]
        num_vars = max(idx, default=1)
    p = _Parser(text, num_vars)
    if not p.toks:
        raise PolyParseError("empty polynomial")
    out = p.expr()
    if p.pos != len(p.toks):
        raise PolyParseError(f"trailing input at token {p.pos}")
    return out


def poly_to_text(f: LaurentPoly, names=None) -> str:
    if names is None:
        names = ["t"] if f.num_vars == 1 else [f"t{i + 1}" for i in range(f.num_vars)]
    if f.is_zero():
        return "0"
    parts = []
    for e, c in f.sorted_terms():
        mono = []
        for name, k in zip(names, e):
            if k == 1:
                mono.append(name)
            elif k:
                mono.append(f"{name}^{k}")
        a = abs(c)
        coeff = frac_str(a)
        if mono:
            body = "*".join(mono) if a == 1 else coeff + "*" + "*".join(mono)
        else:
            body = coeff
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def poly_to_json(f: LaurentPoly) -> dict:
    return {"vars": f.num_vars,
            "terms": [[list(e), frac_str(c)] for e, c in f.sorted_terms()]}


def poly_from_json(data) -> LaurentPoly:
    if isinstance(data, str):
        return parse_poly(data)
    k = int(data["vars"])
    return LaurentPoly(k, [(tuple(e), parse_frac(c)) for e, c in data["terms"]])
