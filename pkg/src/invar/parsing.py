"""Shared expression parser for scalar and polynomial text.

One grammar serves both: identifiers, integer literals, ``+ - * / ^``
and parentheses, no implicit multiplication, whitespace insignificant.
The parser is generic over the value domain; scalars and polynomials
plug in their own symbol tables.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, InvarError, ParseError


def _tokenize(text: str):
    text = text.replace("−", "-").replace("·", "*")
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j]))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(("op", ch))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens, symbols, make_int):
        self.tokens = tokens
        self.pos = 0
        self.symbols = symbols
        self.make_int = make_int

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, val = self.take()
        if kind != "op" or val != ch:
            raise ParseError(f"expected {ch!r}, got {val!r}")

    def parse(self):
        value = self.expression()
        kind, val = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input at token {val!r}")
        return value

    def expression(self):
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                if val == "*":
                    value = value * rhs
                else:
                    try:
                        value = value / rhs
                    except (DivisionByZero, ZeroDivisionError) as exc:
                        raise ParseError(str(exc)) from exc
            else:
                return value

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer")
            return base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.make_int(val)
        if kind == "ident":
            try:
                return self.symbols[val]
            except KeyError:
                raise ParseError(f"unknown identifier {val!r}") from None
        if kind == "op" and val == "(":
            value = self.expression()
            self.expect_op(")")
            return value
        if kind == "op" and val == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {val!r}")


def parse_expression(text: str, symbols, make_int):
    try:
        return _Parser(_tokenize(text), symbols, make_int).parse()
    except InvarError:
        raise
    except (ZeroDivisionError, OverflowError) as exc:
        raise ParseError(str(exc)) from exc


def parse_scalar(text: str, field):
    """Parse scalar text over the given field; round-trips with str()."""
    from .fields import NumberField

    symbols = {}
    if isinstance(field, NumberField):
        symbols[field.generator_name] = field.generator
    value = parse_expression(text, symbols, field.scalar)
    return value


class _UniPoly:
    """Minimal univariate polynomial over Q, for minimal-poly input only."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        from .fields import _trim

        self.coeffs = _trim(coeffs)

    def __add__(self, other):
        from .fields import _uadd

        return _UniPoly(_uadd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return _UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        from .fields import _umul

        return _UniPoly(_umul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        if len(other.coeffs) > 1:
            raise ParseError("division by nonconstant polynomial")
        if not other.coeffs:
            raise DivisionByZero("division by zero")
        inv = Fraction(1) / other.coeffs[0]
        return _UniPoly(tuple(c * inv for c in self.coeffs))

    def __pow__(self, n):
        out = _UniPoly((Fraction(1),))
        for _ in range(n):
            out = out * self
        return out


def parse_univariate_rational(text: str, name: str):
    """Parse e.g. 'w^2 - 2' into Fraction coefficients, low degree first."""
    symbols = {name: _UniPoly((Fraction(0), Fraction(1)))}
    value = parse_expression(text, symbols, lambda n: _UniPoly((Fraction(n),)))
    return list(value.coeffs)
