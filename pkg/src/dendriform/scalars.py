"""Exact polynomials in the two weights ``lam`` and ``q`` over the rationals.

A :class:`Scalar` is stored as a map ``(lam_exp, q_exp) -> rational`` with no
zero coefficients, so two scalars are equal iff their maps are equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Union

Number = Union[int, Fraction]


class Scalar:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Number] | None = None):
        clean = {}
        if terms:
            for mon, c in terms.items():
                if c:
                    clean[mon] = _norm(c)
        self.terms: dict[tuple[int, int], int | Fraction] = clean
        self._hash = None

    @classmethod
    def const(cls, c: Number) -> "Scalar":
        return cls({(0, 0): c})

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot use {type(value).__name__} as a scalar")

    # ring structure

    def __add__(self, other) -> "Scalar":
        if not isinstance(other, _SCALARLIKE):
            return NotImplemented
        other = Scalar.coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for mon, c in other.terms.items():
            out[mon] = out.get(mon, 0) + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({mon: -c for mon, c in self.terms.items()})

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        if not isinstance(other, _SCALARLIKE):
            return NotImplemented
        other = Scalar.coerce(other)
        if not self.terms or not other.terms:
            return ZERO
        if other.terms == _ONE_TERMS:
            return self
        if self.terms == _ONE_TERMS:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                mon = (a1 + a2, b1 + b2)
                out[mon] = out.get(mon, 0) + c1 * c2
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # inspection

    def is_constant(self) -> bool:
        return all(mon == (0, 0) for mon in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.terms.get((0, 0), 0))

    def lam_degree(self) -> int:
        return max((a for a, _ in self.terms), default=0)

    def min_degree(self) -> int:
        return min((a + b for a, b in self.terms), default=0)

    def eval(self, lam0: Number, q0: Number) -> Fraction:
        lam0, q0 = Fraction(lam0), Fraction(q0)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * lam0**a * q0**b
        return total

    def specialize(self, lam0: Number | None = None, q0: Number | None = None) -> "Scalar":
        """Substitute whichever of ``lam``/``q`` is given, keeping the other symbolic."""
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self.terms.items():
            if lam0 is not None:
                c, a = c * Fraction(lam0) ** a, 0
            if q0 is not None:
                c, b = c * Fraction(q0) ** b, 0
            out[(a, b)] = out.get((a, b), 0) + c
        return Scalar(out)

    # text

    def _ordered(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, ((a, b), c) in enumerate(self._ordered()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            vars_ = []
            if a:
                vars_.append("lam" if a == 1 else f"lam^{a}")
            if b:
                vars_.append("q" if b == 1 else f"q^{b}")
            if not vars_:
                body = _fmt_rational(mag)
            elif mag == 1:
                body = "*".join(vars_)
            else:
                body = "*".join([_fmt_rational(mag)] + vars_)
            if i == 0:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def is_monomial(self) -> bool:
        return len(self.terms) == 1


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_SCALARLIKE = (Scalar, int, Fraction)


def _norm(c):
    # integers stay ints; Fraction arithmetic is the hot path otherwise
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c

_ONE_TERMS = {(0, 0): 1}
ZERO = Scalar()
ONE = Scalar.const(1)
LAM = Scalar({(1, 0): 1})
Q = Scalar({(0, 1): 1})


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_eval(a: Scalar, lambda0: Number, q0: Number) -> Fraction:
    return a.eval(lambda0, q0)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(lam|q)|(\^)|([-+*()]))")


def parse_scalar(text: str) -> Scalar:
    """Parse ``1 + 2*lam*q - lam^2``-style text; fractions are written ``p/r``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad scalar syntax at column {pos + 1}: {text!r}")
        num, var, caret, punct = m.groups()
        if num:
            tokens.append(("num", Fraction(num)))
        elif var:
            tokens.append(("var", var))
        elif caret:
            tokens.append(("^", None))
        else:
            tokens.append((punct, None))
        pos = m.end()
    tokens.append(("end", None))
    idx = 0

    def peek():
        return tokens[idx][0]

    def take(kind):
        nonlocal idx
        tok = tokens[idx]
        if tok[0] != kind:
            raise ValueError(f"expected {kind!r} in scalar {text!r}")
        idx += 1
        return tok[1]

    def expr():
        sign = 1
        if peek() == "-":
            take("-")
            sign = -1
        elif peek() == "+":
            take("+")
        total = term() * sign
        while peek() in ("+", "-"):
            op = peek()
            take(op)
            total = total + term() if op == "+" else total - term()
        return total

    def term():
        value = factor()
        while peek() == "*":
            take("*")
            value = value * factor()
        return value

    def factor():
        kind = peek()
        if kind == "num":
            base = Scalar.const(take("num"))
        elif kind == "var":
            base = LAM if take("var") == "lam" else Q
        elif kind == "(":
            take("(")
            base = expr()
            take(")")
        elif kind == "-":
            take("-")
            return -factor()
        else:
            raise ValueError(f"unexpected {kind!r} in scalar {text!r}")
        if peek() == "^":
            take("^")
            exp = take("num")
            if exp.denominator != 1:
                raise ValueError("exponent must be an integer")
            base = base ** int(exp)
        return base

    result = expr()
    if peek() != "end":
        raise ValueError(f"trailing input in scalar {text!r}")
    return result
