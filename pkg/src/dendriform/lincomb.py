"""Finite formal linear combinations with :class:`Scalar` coefficients.

Basis keys must be hashable and totally ordered (``<``); the order is only
used for iteration and printing, never for equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Generic, Hashable, Iterable, Iterator, TypeVar

from .scalars import Scalar, ZERO

B = TypeVar("B", bound=Hashable)


class LinComb(Generic[B]):
    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[B, Scalar] = {}
        if terms:
            for key, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    self.terms[key] = c

    @classmethod
    def basis(cls, key: B, coeff=1) -> "LinComb[B]":
        return cls({key: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[B, Scalar]]) -> "LinComb[B]":
        acc: dict[B, Scalar] = {}
        for key, c in pairs:
            accumulate(acc, key, c)
        return cls._raw(acc)

    @classmethod
    def _raw(cls, acc: dict) -> "LinComb[B]":
        # acc may hold zero coefficients left over from cancellation
        out = cls.__new__(cls)
        out.terms = {k: c for k, c in acc.items() if c}
        return out

    # vector space structure

    def __add__(self, other: "LinComb[B]") -> "LinComb[B]":
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(acc, key, c)
        return LinComb._raw(acc)

    def __neg__(self) -> "LinComb[B]":
        return LinComb._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LinComb[B]") -> "LinComb[B]":
        return self + (-other)

    def __rmul__(self, c) -> "LinComb[B]":
        c = Scalar.coerce(c)
        if not c:
            return LinComb()
        return LinComb._raw({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[B, Scalar]]:
        return iter(self.items())

    def __getitem__(self, key: B) -> Scalar:
        return self.terms.get(key, ZERO)

    def items(self) -> list[tuple[B, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def keys(self) -> list[B]:
        return sorted(self.terms)

    # maps

    def map_coeffs(self, f: Callable[[Scalar], Scalar]) -> "LinComb[B]":
        return LinComb._raw({k: f(c) for k, c in self.terms.items()})

    def specialize(self, lam0=None, q0=None) -> "LinComb[B]":
        return self.map_coeffs(lambda c: c.specialize(lam0, q0))

    def linear_map(self, f: Callable[[B], "LinComb"]) -> "LinComb":
        acc: dict = {}
        for key, c in self.terms.items():
            for k2, c2 in f(key).terms.items():
                accumulate(acc, k2, c * c2)
        return LinComb._raw(acc)

    # text

    def to_text(self, fmt: Callable[[B], str] = str) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (key, c) in enumerate(self.items()):
            body = fmt(key)
            sign = "+"
            if c == 1:
                text = body
            elif c == -1:
                text, sign = body, "-"
            elif c.is_monomial():
                ((_, coef),) = c.terms.items()
                if coef < 0:
                    sign = "-"
                    text = f"{-c}*{body}"
                else:
                    text = f"{c}*{body}"
            else:
                text = f"({c})*{body}"
            if i == 0:
                out.append(text if sign == "+" else "-" + text)
            else:
                out.append(f" {sign} {text}")
        return "".join(out)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LinComb({self.to_text()})"


def accumulate(acc: dict, key, c: Scalar) -> None:
    prev = acc.get(key)
    acc[key] = c if prev is None else prev + c


def lc_add(u: LinComb, v: LinComb) -> LinComb:
    return u + v


def lc_scale(c, v: LinComb) -> LinComb:
    return c * v


def lc_bilinear(f: Callable[[B, B], LinComb], u: LinComb, v: LinComb) -> LinComb:
    """Extend the basis-level map ``f`` bilinearly to ``u`` and ``v``."""
    acc: dict = {}
    for t, a in u.terms.items():
        for s, b in v.terms.items():
            ab = a * b
            for key, c in f(t, s).terms.items():
                accumulate(acc, key, ab * c)
    return LinComb._raw(acc)


def to_rational(c) -> Fraction:
    return Scalar.coerce(c).constant_value()
