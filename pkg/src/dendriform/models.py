"""Registry of algebra handles: the free models, concrete targets and a few
deliberately broken models used to show the checks can fail."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import binary, schroeder
from .axioms import AlgebraHandle
from .diffpoly import POLYNOMIAL, TRIVIAL
from .lincomb import LinComb
from .qshuffle import QShuffleAlgebra, random_word_tuple, random_wordsum
from .scalars import LAM, Q
from .targets import DEND_Q0, DiagonalAlgebra, TargetConfig, TRIDEND


def schroeder_handle(max_leaves: int = 6, max_order: int = 2) -> AlgebraHandle:
    return AlgebraHandle(
        name="schroeder",
        prec=schroeder.s_prec,
        succ=schroeder.s_succ,
        bullet=schroeder.s_bullet,
        d=schroeder.dX,
        lam=LAM,
        q=Q,
        zero=LinComb,
        sample=lambda rng: schroeder.random_treesum(
            rng, max_leaves=max_leaves, max_order=max_order
        ),
    )


def binary_handle(max_leaves: int = 6, max_order: int = 2) -> AlgebraHandle:
    return AlgebraHandle(
        name="binary",
        prec=binary.b_prec,
        succ=binary.b_succ,
        bullet=None,
        d=binary.b_dX,
        lam=LAM,
        q=Q,
        zero=LinComb,
        sample=lambda rng: binary.random_binsum(
            rng, max_leaves=max_leaves, max_order=max_order
        ),
    )


# combined letter budget per sample tuple, keyed by arity
QSHUFFLE_TOTALS = {2: 6, 3: 9}


def qshuffle_handle(mode: str = POLYNOMIAL, max_len: int = 5, max_order: int = 2,
                    totals: dict[int, int] = QSHUFFLE_TOTALS) -> AlgebraHandle:
    """Word sums with at most ``max_len`` letters each.

    The differential of a word with n letters has at least 2^n - 1 terms, so
    jointly drawn inputs share a letter budget from ``totals``.
    """
    alg = QShuffleAlgebra(mode)
    return AlgebraHandle(
        name="qshuffle" if mode == POLYNOMIAL else "qshuffle[trivial]",
        prec=alg.prec,
        succ=alg.succ,
        bullet=alg.bullet if mode == POLYNOMIAL else None,
        d=alg.d,
        lam=LAM,
        q=Q,
        zero=LinComb,
        sample=lambda rng: random_wordsum(rng, max_len=max_len, max_order=max_order, mode=mode),
        sample_many=lambda rng, k: random_word_tuple(
            rng, k, max_len=max_len, max_total=totals.get(k, max_len * k), max_order=max_order, mode=mode
        ),
    )


def diagonal_handle(lambda0=1, q0=1, s=2, variant: str = TRIDEND) -> AlgebraHandle:
    return DiagonalAlgebra(TargetConfig(Fraction(lambda0), Fraction(q0), Fraction(s)), variant).handle()


# broken models ---------------------------------------------------------

def _zero_bullet(u, v):
    return LinComb()


def _d_without_lam(u):
    return schroeder.dX(u).specialize(lam0=0)


def _prec_swapped_on_corollas(u, v):
    """``<`` whose corolla branch answers with ``>`` instead."""
    out = LinComb()
    for t, c in u.terms.items():
        single = LinComb.basis(t, c)
        if t.depth == 1 and t.breadth == 2:
            out = out + schroeder.s_succ(single, v)
        else:
            out = out + schroeder.s_prec(single, v)
    return out


def broken_models() -> dict[str, Callable[[], AlgebraHandle]]:
    def zero_bullet():
        h = schroeder_handle()
        h.name, h.bullet = "broken:zero-bullet", _zero_bullet
        return h

    def no_lam():
        h = schroeder_handle()
        h.name, h.d = "broken:d-without-lam", _d_without_lam
        return h

    def swapped():
        h = schroeder_handle()
        h.name, h.prec = "broken:swapped-prec", _prec_swapped_on_corollas
        return h

    return {
        "broken:zero-bullet": zero_bullet,
        "broken:d-without-lam": no_lam,
        "broken:swapped-prec": swapped,
    }


def get_model(name: str, lambda0=None, q0=None, s=None, variant: str | None = None) -> AlgebraHandle:
    """Look up a handle by CLI name; numeric weights only apply to ``diagonal``."""
    if name == "schroeder":
        return schroeder_handle()
    if name == "binary":
        return binary_handle()
    if name == "qshuffle":
        return qshuffle_handle()
    if name == "qshuffle-trivial":
        return qshuffle_handle(TRIVIAL)
    if name == "diagonal":
        variant = variant or TRIDEND
        lam = 1 if lambda0 is None else lambda0
        q = (0 if variant == DEND_Q0 else 1) if q0 is None else q0
        return diagonal_handle(lam, q, 2 if s is None else s, variant)
    broken = broken_models()
    if name in broken:
        return broken[name]()
    raise ValueError(f"unknown model {name!r}")


MODEL_NAMES = ["schroeder", "binary", "qshuffle", "qshuffle-trivial", "diagonal"] + sorted(
    broken_models()
)
