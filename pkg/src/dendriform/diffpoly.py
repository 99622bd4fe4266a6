"""Free commutative differential algebra of weight lam on a set of generators.

Elements are polynomials in the differential variables ``x^(n)``; ``d0``
raises orders according to the weighted Leibniz rule
``d0(uv) = d0(u) v + u d0(v) + lam d0(u) d0(v)``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, NamedTuple

from .lincomb import LinComb, lc_bilinear
from .scalars import LAM, ONE

POLYNOMIAL = "polynomial"
TRIVIAL = "trivial"
MODES = (POLYNOMIAL, TRIVIAL)


class DiffVar(NamedTuple):
    name: str
    order: int = 0

    def raised(self, by: int = 1) -> "DiffVar":
        return DiffVar(self.name, self.order + by)

    def __str__(self) -> str:
        return f"{self.name}^({self.order})"


class Monomial:
    """Commutative product of differential variables, stored sorted."""

    __slots__ = ("factors", "_hash")

    def __init__(self, factors: Iterable[DiffVar] = ()):
        self.factors: tuple[DiffVar, ...] = tuple(sorted(factors))
        self._hash = hash(self.factors)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def is_unit(self) -> bool:
        return not self.factors

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.factors + other.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.factors == other.factors

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return (len(self.factors), self.factors) < (len(other.factors), other.factors)

    def __str__(self) -> str:
        return "".join(map(str, self.factors)) if self.factors else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


UNIT = Monomial()


def var(name: str, order: int = 0) -> Monomial:
    return Monomial((DiffVar(name, order),))


def poly(*monomials: Monomial) -> LinComb:
    return LinComb.from_pairs((m, ONE) for m in monomials)


def monomial_product(a: Monomial, b: Monomial, mode: str = POLYNOMIAL) -> LinComb:
    if mode == TRIVIAL and not a.is_unit() and not b.is_unit():
        return LinComb()
    return LinComb.basis(a * b)


def poly_mul(a: LinComb, b: LinComb, mode: str = POLYNOMIAL) -> LinComb:
    if mode not in MODES:
        raise ValueError(f"unknown product mode {mode!r}")
    return lc_bilinear(lambda m, n: monomial_product(m, n, mode), a, b)


@lru_cache(maxsize=None)
def d0_monomial(m: Monomial) -> LinComb:
    if m.is_unit():
        return LinComb()
    head, rest = m.factors[0], Monomial(m.factors[1:])
    d_head = Monomial((head.raised(),))
    if rest.is_unit():
        return LinComb.basis(d_head)
    d_rest = d0_monomial(rest)
    out = LinComb.basis(d_head * rest)
    for n, c in d_rest.terms.items():
        out = out + LinComb({Monomial((head,)) * n: c, d_head * n: LAM * c})
    return out


def d0(a: LinComb) -> LinComb:
    return a.linear_map(d0_monomial)


_VAR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\^\((\d+)\)\s*")


def parse_var(text: str) -> DiffVar:
    m = _VAR.fullmatch(text)
    if not m:
        raise ValueError(f"bad differential variable {text!r}; expected e.g. x^(2)")
    return DiffVar(m.group(1), int(m.group(2)))


def parse_monomial(text: str) -> Monomial:
    """Parse ``x^(0)*y^(2)``, ``x^(0)y^(2)`` or ``1``."""
    text = text.strip()
    if text == "1":
        return UNIT
    factors = []
    pos = 0
    while pos < len(text):
        if text[pos] in "* ":
            pos += 1
            continue
        m = _VAR.match(text, pos)
        if not m:
            raise ValueError(f"bad monomial {text!r} at column {pos + 1}")
        factors.append(DiffVar(m.group(1), int(m.group(2))))
        pos = m.end()
    if not factors:
        raise ValueError("empty monomial")
    return Monomial(factors)
