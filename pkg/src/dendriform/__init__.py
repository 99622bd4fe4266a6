"""Exact computation in free weighted differential (q-tri)dendriform algebras.

The free objects keep the weights ``lam`` and ``q`` symbolic: every
coefficient is a polynomial in both over the rationals, so one computation
covers all weights at once.
"""

from .binary import BLEAF, BinaryTree, b_dX, b_prec, b_succ, bgraft, enumerate_binary
from .diffpoly import DiffVar, Monomial
from .lincomb import LinComb
from .parser import ParseError, eval_expr, evaluate, parse_expr
from .qshuffle import QShuffleAlgebra, Word, dA, parse_word, qshuffle, t_bullet, t_prec, t_star, t_succ
from .scalars import LAM, ONE, Q, ZERO, Scalar, parse_scalar
from .schroeder import (
    LEAF,
    GraftingError,
    Tree,
    corolla,
    dX,
    enumerate_trees,
    graft,
    s_bullet,
    s_prec,
    s_star,
    s_succ,
    tree_lc,
    universal_eval,
)

__all__ = [
    "BLEAF", "BinaryTree", "DiffVar", "GraftingError", "LAM", "LEAF", "LinComb", "Monomial",
    "ONE", "ParseError", "Q", "QShuffleAlgebra", "Scalar", "Tree", "Word", "ZERO",
    "b_dX", "b_prec", "b_succ", "bgraft", "corolla", "dA", "dX", "enumerate_binary",
    "enumerate_trees", "eval_expr", "evaluate", "graft", "parse_expr", "parse_scalar",
    "parse_word", "qshuffle", "s_bullet", "s_prec", "s_star", "s_succ", "t_bullet",
    "t_prec", "t_star", "t_succ", "tree_lc", "universal_eval",
]
