"""Concrete differential q-tridendriform algebras at rational weights.

``DiagonalAlgebra`` lives on the span of ``e_1, e_2, ...`` with
``e_a e_b = e_{a+b}``.  Both the derivation ``d`` and the Rota-Baxter
operator ``P`` act diagonally, so ``dP = Pd`` holds automatically:

* ``d(e_a) = mu_a e_a`` with ``mu_a = ((1 + lam)^a - 1) / lam`` (``a`` when
  ``lam = 0``), which makes ``d`` a derivation of weight ``lam``;
* ``P(e_a) = r_a e_a`` with ``r_a = q / (s^a - 1)``, a Rota-Baxter operator of
  weight ``q``.  For ``q = 0`` that formula is identically zero, so the
  weight-0 operator ``r_a = s / a`` is used instead.

``QShuffleTarget`` exposes the word algebra with its coefficients evaluated
at fixed ``(lam, q)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .axioms import AlgebraHandle
from .diffpoly import POLYNOMIAL
from .lincomb import LinComb
from .qshuffle import QShuffleAlgebra, random_wordsum
from .scalars import Scalar

DEND_Q0 = "dend-q0"
TRIDEND = "tridend"
DEND_LEFT = "dend-left"
DEND_RIGHT = "dend-right"
VARIANTS = (DEND_Q0, TRIDEND, DEND_LEFT, DEND_RIGHT)


class PoleError(ValueError):
    pass


@dataclass(frozen=True)
class TargetConfig:
    lambda0: Fraction = Fraction(1)
    q0: Fraction = Fraction(1)
    s: Fraction = Fraction(2)

    def __post_init__(self):
        for name in ("lambda0", "q0", "s"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


class DiagonalElement:
    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[int, Fraction] | None = None):
        self.coords: dict[int, Fraction] = {}
        for a, c in (coords or {}).items():
            if a < 1:
                raise ValueError("grades start at 1")
            if c:
                self.coords[a] = Fraction(c)

    @classmethod
    def basis(cls, a: int, c=1) -> "DiagonalElement":
        return cls({a: c})

    def __add__(self, other: "DiagonalElement") -> "DiagonalElement":
        out = dict(self.coords)
        for a, c in other.coords.items():
            out[a] = out.get(a, 0) + c
        return DiagonalElement(out)

    def __neg__(self) -> "DiagonalElement":
        return DiagonalElement({a: -c for a, c in self.coords.items()})

    def __sub__(self, other: "DiagonalElement") -> "DiagonalElement":
        return self + (-other)

    def __rmul__(self, c) -> "DiagonalElement":
        if isinstance(c, Scalar):
            c = c.constant_value()
        return DiagonalElement({a: c * v for a, v in self.coords.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, DiagonalElement) and self.coords == other.coords

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        out = []
        for i, (a, c) in enumerate(sorted(self.coords.items())):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"e[{a}]" if mag == 1 else f"{_fmt(mag)}*e[{a}]"
            out.append((body if sign == "+" else "-" + body) if i == 0 else f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"DiagonalElement({self})"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class DiagonalAlgebra:
    def __init__(self, config: TargetConfig = TargetConfig(), variant: str = TRIDEND):
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
        if variant == DEND_Q0 and config.q0 != 0:
            raise ValueError("variant dend-q0 requires q = 0")
        self.config = config
        self.variant = variant

    # eigenvalues

    def mu(self, a: int) -> Fraction:
        lam = self.config.lambda0
        if lam == 0:
            return Fraction(a)
        return ((1 + lam) ** a - 1) / lam

    def r(self, a: int) -> Fraction:
        q, s = self.config.q0, self.config.s
        if q == 0:
            return s / a
        denom = s**a - 1
        if denom == 0:
            raise PoleError(f"RB eigenvalue pole: s^{a} = 1 for s = {s}")
        return q / denom

    # structure maps

    def mul(self, u: DiagonalElement, v: DiagonalElement) -> DiagonalElement:
        out: dict[int, Fraction] = {}
        for a, c in u.coords.items():
            for b, e in v.coords.items():
                out[a + b] = out.get(a + b, 0) + c * e
        return DiagonalElement(out)

    def d(self, u: DiagonalElement) -> DiagonalElement:
        return DiagonalElement({a: self.mu(a) * c for a, c in u.coords.items()})

    def P(self, u: DiagonalElement) -> DiagonalElement:
        return DiagonalElement({a: self.r(a) * c for a, c in u.coords.items()})

    def prec(self, u: DiagonalElement, v: DiagonalElement) -> DiagonalElement:
        out = self.mul(u, self.P(v))
        if self.variant == DEND_LEFT:
            out = out + self.config.q0 * self.mul(u, v)
        return out

    def succ(self, u: DiagonalElement, v: DiagonalElement) -> DiagonalElement:
        out = self.mul(self.P(u), v)
        if self.variant == DEND_RIGHT:
            out = out + self.config.q0 * self.mul(u, v)
        return out

    def bullet(self, u: DiagonalElement, v: DiagonalElement) -> DiagonalElement:
        if self.variant != TRIDEND:
            raise ValueError(f"variant {self.variant} has no bullet product")
        return self.mul(u, v)

    def induced_ops(self, u: DiagonalElement, v: DiagonalElement) -> dict[str, DiagonalElement]:
        out = {"prec": self.prec(u, v), "succ": self.succ(u, v)}
        if self.variant == TRIDEND:
            out["bullet"] = self.bullet(u, v)
        return out

    def sample(self, rng: random.Random, max_grade: int = 6, max_terms: int = 3) -> DiagonalElement:
        while True:
            coords = {
                rng.randint(1, max_grade): Fraction(rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randint(1, max_terms))
            }
            elem = DiagonalElement(coords)
            if elem:
                return elem

    def handle(self) -> AlgebraHandle:
        cfg = self.config
        return AlgebraHandle(
            name=f"diagonal[{self.variant}](lam={cfg.lambda0},q={cfg.q0},s={cfg.s})",
            prec=self.prec,
            succ=self.succ,
            bullet=self.bullet if self.variant == TRIDEND else None,
            d=self.d,
            lam=cfg.lambda0,
            q=cfg.q0,
            zero=DiagonalElement,
            sample=self.sample,
        )


def diag_mul(u: DiagonalElement, v: DiagonalElement, config: TargetConfig = TargetConfig()):
    return DiagonalAlgebra(config).mul(u, v)


def diag_d(u: DiagonalElement, config: TargetConfig = TargetConfig()) -> DiagonalElement:
    return DiagonalAlgebra(config).d(u)


def diag_P(u: DiagonalElement, config: TargetConfig = TargetConfig()) -> DiagonalElement:
    return DiagonalAlgebra(config).P(u)


def induced_ops(u, v, variant: str, config: TargetConfig = TargetConfig()):
    return DiagonalAlgebra(config, variant).induced_ops(u, v)


class QShuffleTarget:
    """The word algebra with every coefficient evaluated at ``(lam0, q0)``."""

    def __init__(self, lam0=0, q0=0, mode: str = POLYNOMIAL):
        self.lam0, self.q0 = Fraction(lam0), Fraction(q0)
        self.algebra = QShuffleAlgebra(mode)

    def _fix(self, u: LinComb) -> LinComb:
        return u.specialize(self.lam0, self.q0)

    def prec(self, u, v):
        return self._fix(self.algebra.prec(u, v))

    def succ(self, u, v):
        return self._fix(self.algebra.succ(u, v))

    def bullet(self, u, v):
        return self._fix(self.algebra.bullet(u, v))

    def d(self, u):
        return self._fix(self.algebra.d(u))

    def handle(self) -> AlgebraHandle:
        return AlgebraHandle(
            name=f"qshuffle(lam={self.lam0},q={self.q0})",
            prec=self.prec,
            succ=self.succ,
            bullet=self.bullet,
            d=self.d,
            lam=self.lam0,
            q=self.q0,
            zero=LinComb,
            sample=lambda rng: random_wordsum(rng, mode=self.algebra.mode),
        )
