"""Free differential dendriform algebra on decorated planar binary trees."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Sequence

from .diffpoly import DiffVar
from .lincomb import LinComb, accumulate, lc_bilinear
from .scalars import LAM, ONE, Scalar


class BinaryTree:
    __slots__ = ("dec", "left", "right", "leaves", "depth", "_key", "_hash")

    def __init__(self, dec: DiffVar | None = None, left: "BinaryTree | None" = None,
                 right: "BinaryTree | None" = None):
        self.dec, self.left, self.right = dec, left, right
        if dec is None:
            self.leaves, self.depth = 1, 0
            self._key = (1,)
        else:
            self.leaves = left.leaves + right.leaves
            self.depth = 1 + max(left.depth, right.depth)
            self._key = (self.leaves, dec, left._key, right._key)
        self._hash = hash(self._key)

    @property
    def is_leaf(self) -> bool:
        return self.dec is None

    def positions(self) -> list[DiffVar]:
        if self.is_leaf:
            return []
        return self.left.positions() + [self.dec] + self.right.positions()

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryTree) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "BinaryTree") -> bool:
        return self._key < other._key

    def __str__(self) -> str:
        if self.is_leaf:
            return "|"
        return f"B[{self.dec}]({self.left},{self.right})"

    def __repr__(self) -> str:
        return f"BinaryTree({self})"

    def to_json(self):
        if self.is_leaf:
            return None
        return {
            "dec": [self.dec.name, self.dec.order],
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "BinaryTree":
        if data is None:
            return BLEAF
        name, order = data["dec"]
        return bgraft(cls.from_json(data["left"]), DiffVar(name, int(order)),
                      cls.from_json(data["right"]))


BLEAF = BinaryTree()


def bgraft(left: BinaryTree, x: DiffVar, right: BinaryTree) -> BinaryTree:
    return BinaryTree(x, left, right)


def vertex(x: DiffVar) -> BinaryTree:
    return bgraft(BLEAF, x, BLEAF)


def bin_lc(*trees: BinaryTree) -> LinComb:
    return LinComb.from_pairs((t, ONE) for t in trees)


_PREC: dict = {}
_SUCC: dict = {}


def _unit_sum(a: BinaryTree, b: BinaryTree) -> dict:
    """``a < b + a > b`` with the leaf acting as the unit of the sum."""
    if a.is_leaf:
        return {b: ONE}
    if b.is_leaf:
        return {a: ONE}
    acc: dict = {}
    for w, c in _prec_trees(a, b).items():
        accumulate(acc, w, c)
    for w, c in _succ_trees(a, b).items():
        accumulate(acc, w, c)
    return {w: c for w, c in acc.items() if c}


def _prec_trees(t: BinaryTree, u: BinaryTree) -> dict:
    key = (t, u)
    hit = _PREC.get(key)
    if hit is None:
        hit = {BinaryTree(t.dec, t.left, w): c for w, c in _unit_sum(t.right, u).items()}
        _PREC[key] = hit
    return hit


def _succ_trees(t: BinaryTree, u: BinaryTree) -> dict:
    key = (t, u)
    hit = _SUCC.get(key)
    if hit is None:
        hit = {BinaryTree(u.dec, w, u.right): c for w, c in _unit_sum(t, u.left).items()}
        _SUCC[key] = hit
    return hit


def b_prec(u: LinComb, v: LinComb) -> LinComb:
    return lc_bilinear(lambda t, s: LinComb._raw(_prec_trees(t, s)), u, v)


def b_succ(u: LinComb, v: LinComb) -> LinComb:
    return lc_bilinear(lambda t, s: LinComb._raw(_succ_trees(t, s)), u, v)


_DX: dict = {}


def _d_or_zero(t: BinaryTree) -> LinComb:
    return LinComb() if t.is_leaf else _dx_tree(t)


def _dx_tree(t: BinaryTree) -> LinComb:
    hit = _DX.get(t)
    if hit is not None:
        return hit
    x1 = t.dec.raised()
    if t.depth == 1:
        out = LinComb.basis(vertex(x1))
    else:
        # t = (t.left > V_x) < t.right; lam sits on every d-d cross term
        v, v1 = LinComb.basis(vertex(t.dec)), LinComb.basis(vertex(x1))
        dl, dr = _d_or_zero(t.left), _d_or_zero(t.right)
        if t.left.is_leaf:
            inner, d_inner = v, v1
        else:
            left = LinComb.basis(t.left)
            inner = b_succ(left, v)
            d_inner = b_succ(dl, v) + b_succ(left, v1) + LAM * b_succ(dl, v1)
        if t.right.is_leaf:
            out = d_inner
        else:
            right = LinComb.basis(t.right)
            out = b_prec(d_inner, right) + b_prec(inner, dr) + LAM * b_prec(d_inner, dr)
    _DX[t] = out
    return out


def b_dX(u: LinComb) -> LinComb:
    return u.linear_map(_dx_tree)


def clear_caches() -> None:
    for cache in (_PREC, _SUCC, _DX):
        cache.clear()


@lru_cache(maxsize=None)
def _trees_or_leaf(n: int, alphabet: tuple[DiffVar, ...]) -> tuple[BinaryTree, ...]:
    if n == 1:
        return (BLEAF,)
    out = []
    for k in range(1, n):
        for left in _trees_or_leaf(k, alphabet):
            for right in _trees_or_leaf(n - k, alphabet):
                for x in alphabet:
                    out.append(BinaryTree(x, left, right))
    out.sort()
    return tuple(out)


def enumerate_binary(n_leaves: int, alphabet: Iterable[DiffVar]) -> list[BinaryTree]:
    alphabet = tuple(sorted(set(alphabet)))
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    if n_leaves < 2:
        return []
    return list(_trees_or_leaf(n_leaves, alphabet))


def catalan(n_max: int) -> list[int]:
    """Catalan numbers C_0..C_{n_max-1}: binary trees with 1..n_max leaves."""
    c = [1]
    for n in range(n_max - 1):
        c.append(c[-1] * 2 * (2 * n + 1) // (n + 2))
    return c


def random_binary(
    rng: random.Random,
    min_leaves: int = 2,
    max_leaves: int = 6,
    names: Sequence[str] = ("x", "y"),
    max_order: int = 2,
) -> BinaryTree:
    n = rng.randint(min_leaves, max_leaves)

    def build(k: int) -> BinaryTree:
        if k == 1:
            return BLEAF
        # split weighted by Catalan counts keeps shapes uniform
        cat = catalan(k)
        weights = [cat[i - 1] * cat[k - i - 1] for i in range(1, k)]
        i = rng.choices(range(1, k), weights=weights)[0]
        left = build(i)
        x = DiffVar(rng.choice(names), rng.randint(0, max_order))
        return BinaryTree(x, left, build(k - i))

    return build(n)


def random_binsum(rng: random.Random, max_terms: int = 2, **kwargs) -> LinComb:
    acc: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        accumulate(acc, random_binary(rng, **kwargs), Scalar.const(rng.choice([-2, -1, 1, 2])))
    out = LinComb._raw(acc)
    return out if out else random_binsum(rng, max_terms, **kwargs)
