"""Free differential q-tridendriform algebra on valently decorated Schröder trees.

A tree is either the leaf ``|`` or a root carrying ``m >= 1`` differential
variables and ``m + 1`` subtrees.  Linear combinations (``TreeSum``) never
contain the bare leaf; it only shows up inside the recursions, where it acts
as the unit of ``⋆``: ``| > T = T < | = T`` and every other product with
``|`` vanishes.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .diffpoly import DiffVar
from .lincomb import LinComb, accumulate, lc_bilinear
from .scalars import LAM, ONE, Q, Scalar


class GraftingError(ValueError):
    pass


class Tree:
    __slots__ = ("decs", "children", "leaves", "depth", "_key", "_hash")

    def __init__(self, decs: Sequence[DiffVar] = (), children: Sequence["Tree"] = ()):
        self.decs = tuple(decs)
        self.children = tuple(children)
        if self.children:
            self.leaves = sum(c.leaves for c in self.children)
            self.depth = 1 + max(c.depth for c in self.children)
            self._key = (
                self.leaves,
                len(self.children),
                tuple(reversed(self.decs)),
                tuple(c._key for c in self.children),
            )
        else:
            self.leaves = 1
            self.depth = 0
            self._key = (1, 0, (), ())
        self._hash = hash(self._key)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def breadth(self) -> int:
        if self.is_leaf:
            raise ValueError("the leaf has no breadth")
        return len(self.children)

    def positions(self) -> list[DiffVar]:
        """All decorations in left-to-right (in-order) reading."""
        if self.is_leaf:
            return []
        out = self.children[0].positions()
        for x, child in zip(self.decs, self.children[1:]):
            out.append(x)
            out.extend(child.positions())
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Tree") -> bool:
        return self._key < other._key

    def __str__(self) -> str:
        if self.is_leaf:
            return "|"
        decs = ",".join(map(str, self.decs))
        kids = ",".join(map(str, self.children))
        return f"V[{decs}]({kids})"

    def __repr__(self) -> str:
        return f"Tree({self})"

    def to_json(self):
        if self.is_leaf:
            return None
        return {
            "dec": [[x.name, x.order] for x in self.decs],
            "children": [c.to_json() for c in self.children],
        }

    @classmethod
    def from_json(cls, data) -> "Tree":
        if data is None:
            return LEAF
        return graft(
            [cls.from_json(c) for c in data["children"]],
            [DiffVar(name, int(order)) for name, order in data["dec"]],
        )


LEAF = Tree()


def graft(children: Sequence[Tree], decorations: Sequence[DiffVar]) -> Tree:
    if len(children) < 2 or len(children) != len(decorations) + 1:
        raise GraftingError(
            f"grafting arity: {len(children)} children need {len(children) - 1} "
            f"decorations, got {len(decorations)}"
        )
    return Tree(decorations, children)


def corolla(*decorations: DiffVar) -> Tree:
    return graft([LEAF] * (len(decorations) + 1), decorations)


def depth(t: Tree) -> int:
    if t.is_leaf:
        raise ValueError("depth is defined for non-leaf trees only")
    return t.depth


def breadth(t: Tree) -> int:
    return t.breadth


def tree_lc(*trees: Tree) -> LinComb:
    return LinComb.from_pairs((t, ONE) for t in trees)


def check_treesum(u: LinComb) -> None:
    if any(t.is_leaf for t in u.terms):
        raise ValueError("the leaf | is not an element of the tree algebra")


# products --------------------------------------------------------------

_STAR: dict = {}
_PREC: dict = {}
_SUCC: dict = {}
_BULLET: dict = {}


def _unit_star(a: Tree, b: Tree) -> dict:
    """``a ⋆ b`` where either side may be the leaf, which acts as the unit."""
    if a.is_leaf:
        return {b: ONE}
    if b.is_leaf:
        return {a: ONE}
    return _star_trees(a, b)


def _prec_trees(t: Tree, u: Tree) -> dict:
    key = (t, u)
    hit = _PREC.get(key)
    if hit is None:
        head = t.children[:-1]
        hit = {
            Tree(t.decs, head + (w,)): c
            for w, c in _unit_star(t.children[-1], u).items()
        }
        _PREC[key] = hit
    return hit


def _succ_trees(t: Tree, u: Tree) -> dict:
    key = (t, u)
    hit = _SUCC.get(key)
    if hit is None:
        tail = u.children[1:]
        hit = {
            Tree(u.decs, (w,) + tail): c
            for w, c in _unit_star(t, u.children[0]).items()
        }
        _SUCC[key] = hit
    return hit


def _bullet_trees(t: Tree, u: Tree) -> dict:
    key = (t, u)
    hit = _BULLET.get(key)
    if hit is None:
        head, tail, decs = t.children[:-1], u.children[1:], t.decs + u.decs
        # both middle children leaves: the middle slot stays a leaf
        hit = {
            Tree(decs, head + (w,) + tail): c
            for w, c in _unit_star(t.children[-1], u.children[0]).items()
        }
        _BULLET[key] = hit
    return hit


def _star_trees(t: Tree, u: Tree) -> dict:
    key = (t, u)
    hit = _STAR.get(key)
    if hit is None:
        acc: dict = {}
        for w, c in _prec_trees(t, u).items():
            accumulate(acc, w, c)
        for w, c in _succ_trees(t, u).items():
            accumulate(acc, w, c)
        for w, c in _bullet_trees(t, u).items():
            accumulate(acc, w, Q * c)
        hit = {w: c for w, c in acc.items() if c}
        _STAR[key] = hit
    return hit


def _lift(f: Callable[[Tree, Tree], dict]) -> Callable[[Tree, Tree], LinComb]:
    return lambda t, u: LinComb._raw(f(t, u))


def s_prec(u: LinComb, v: LinComb) -> LinComb:
    return lc_bilinear(_lift(_prec_trees), u, v)


def s_succ(u: LinComb, v: LinComb) -> LinComb:
    return lc_bilinear(_lift(_succ_trees), u, v)


def s_bullet(u: LinComb, v: LinComb) -> LinComb:
    return lc_bilinear(_lift(_bullet_trees), u, v)


def s_star(u: LinComb, v: LinComb) -> LinComb:
    return lc_bilinear(_lift(_star_trees), u, v)


def clear_caches() -> None:
    for cache in (_STAR, _PREC, _SUCC, _BULLET, _DX):
        cache.clear()


# grafting of linear combinations ----------------------------------------

def graft_lc(children: Sequence, decorations: Sequence[DiffVar]) -> LinComb:
    """Multilinear grafting; each child is a tree or a combination of trees."""
    parts = [
        c.terms.items() if isinstance(c, LinComb) else [(c, ONE)] for c in children
    ]
    acc: dict = {}
    for combo in itertools.product(*parts):
        coeff = ONE
        for _, c in combo:
            coeff = coeff * c
        accumulate(acc, graft([t for t, _ in combo], decorations), coeff)
    return LinComb._raw(acc)


# differential ----------------------------------------------------------

_DX: dict = {}


def decompose_head(t: Tree) -> tuple[Tree, Optional[Tree]]:
    """Split ``t`` as ``head •_q rest`` with ``head`` of breadth 2.

    ``rest`` is ``None`` when ``t`` already has breadth 2.
    """
    if t.is_leaf:
        raise ValueError("cannot decompose the leaf")
    head = Tree(t.decs[:1], t.children[:2])
    if len(t.children) == 2:
        return head, None
    rest = Tree(t.decs[1:], (LEAF,) + t.children[2:])
    return head, rest


def _d_or_zero(t: Tree) -> LinComb:
    return LinComb() if t.is_leaf else _dx_tree(t)


def _dx_breadth2_closed(t: Tree) -> LinComb:
    """Seven-term expansion for a breadth-2 tree whose children are arbitrary."""
    (x,) = t.decs
    x1 = x.raised()
    t0, t1 = t.children
    d0, d1 = _d_or_zero(t0), _d_or_zero(t1)
    out = (
        graft_lc([d0, t1], [x])
        + graft_lc([t0, t1], [x1])
        + graft_lc([t0, d1], [x])
        + LAM * (graft_lc([d0, t1], [x1]) + graft_lc([t0, d1], [x1]) + graft_lc([d0, d1], [x]))
        + LAM * LAM * graft_lc([d0, d1], [x1])
    )
    return out


def _dx_tree(t: Tree) -> LinComb:
    hit = _DX.get(t)
    if hit is not None:
        return hit
    if len(t.children) == 2:
        if t.depth == 1:
            out = LinComb.basis(corolla(t.decs[0].raised()))
        else:
            out = _dx_breadth2_closed(t)
    else:
        # same weighted split whether the head is a corolla or not
        head, rest = decompose_head(t)
        h, r = LinComb.basis(head), LinComb.basis(rest)
        dh, dr = _dx_tree(head), _dx_tree(rest)
        out = s_bullet(dh, r) + s_bullet(h, dr) + LAM * s_bullet(dh, dr)
    _DX[t] = out
    return out


def dX(u: LinComb) -> LinComb:
    return u.linear_map(_dx_tree)


def _succ_opt(a: Tree | LinComb, b: LinComb) -> LinComb:
    if isinstance(a, Tree):
        return b if a.is_leaf else s_succ(LinComb.basis(a), b)
    return s_succ(a, b)


def _prec_opt(a: LinComb, b: Tree | LinComb) -> LinComb:
    if isinstance(b, Tree):
        return a if b.is_leaf else s_prec(a, LinComb.basis(b))
    return s_prec(a, b)


def dx_breadth2_two_step(t: Tree) -> LinComb:
    """d of ``(T0 > V_x) < T1`` via the two-stage weighted Leibniz expansion.

    Independent of the seven-term closed form: it goes through the actual
    ``>`` and ``<`` products.
    """
    if t.is_leaf or len(t.children) != 2:
        raise ValueError("two-step expansion needs a breadth-2 tree")
    (x,) = t.decs
    t0, t1 = t.children
    cx, cx1 = LinComb.basis(corolla(x)), LinComb.basis(corolla(x.raised()))
    d0, d1 = _d_or_zero(t0), _d_or_zero(t1)
    inner = _succ_opt(t0, cx)
    d_inner = s_succ(d0, cx) + _succ_opt(t0, cx1) + LAM * s_succ(d0, cx1)
    return _prec_opt(d_inner, t1) + s_prec(inner, d1) + LAM * s_prec(d_inner, d1)


# enumeration and sampling ---------------------------------------------

def _compositions(n: int, k: int):
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


@lru_cache(maxsize=None)
def _trees_or_leaf(n: int, alphabet: tuple[DiffVar, ...]) -> tuple[Tree, ...]:
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(2, n + 1):
        for comp in _compositions(n, k):
            child_lists = [_trees_or_leaf(p, alphabet) for p in comp]
            for kids in itertools.product(*child_lists):
                for decs in itertools.product(alphabet, repeat=k - 1):
                    out.append(Tree(decs, kids))
    out.sort()
    return tuple(out)


def enumerate_trees(n_leaves: int, alphabet: Iterable[DiffVar]) -> list[Tree]:
    alphabet = tuple(sorted(set(alphabet)))
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    if n_leaves < 2:
        return []
    return list(_trees_or_leaf(n_leaves, alphabet))


def super_catalan(n_max: int) -> list[int]:
    """Little Schröder numbers s_1..s_{n_max} (trees with n leaves)."""
    s = [0, 1, 1]
    for n in range(2, n_max):
        s.append((3 * (2 * n - 1) * s[n] - (n - 2) * s[n - 1]) // (n + 1))
    return s[1 : n_max + 1]


_PLACEHOLDER = (DiffVar("_", 0),)


def _relabel(t: Tree, decs: Iterable[DiffVar]) -> Tree:
    it = iter(decs)

    def go(s: Tree) -> Tree:
        if s.is_leaf:
            return s
        kids = [go(s.children[0])]
        new_decs = []
        for child in s.children[1:]:
            new_decs.append(next(it))
            kids.append(go(child))
        return Tree(new_decs, kids)

    return go(t)


def random_tree(
    rng: random.Random,
    min_leaves: int = 2,
    max_leaves: int = 6,
    names: Sequence[str] = ("x", "y"),
    max_order: int = 2,
) -> Tree:
    """Uniform over decorated trees with a uniformly drawn leaf count."""
    n = rng.randint(min_leaves, max_leaves)
    shapes = _trees_or_leaf(n, _PLACEHOLDER)
    alpha = len(names) * (max_order + 1)
    weights = [alpha ** len(s.positions()) for s in shapes]
    shape = rng.choices(shapes, weights=weights)[0]
    decs = [
        DiffVar(rng.choice(names), rng.randint(0, max_order))
        for _ in range(len(shape.positions()))
    ]
    return _relabel(shape, decs)


def random_treesum(rng: random.Random, max_terms: int = 2, **kwargs) -> LinComb:
    acc: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.choice([-2, -1, 1, 2])
        accumulate(acc, random_tree(rng, **kwargs), Scalar.const(c))
    out = LinComb._raw(acc)
    return out if out else random_treesum(rng, max_terms, **kwargs)


# universal property ----------------------------------------------------

def universal_eval(assignment: dict, target, u: LinComb, lam0=None, q0=None):
    """Image of ``u`` under the morphism extending ``assignment`` to trees.

    ``target`` provides ``prec``, ``succ``, ``bullet``, ``d``, ``add``,
    ``scale`` and ``zero`` plus numeric ``lam``/``q``; coefficients of ``u``
    are evaluated at those values.
    """
    lam0 = target.lam if lam0 is None else lam0
    q0 = target.q if q0 is None else q0
    memo: dict = {}

    def gen(x: DiffVar):
        if x.name not in assignment:
            raise KeyError(f"no image assigned to generator {x.name!r}")
        value = assignment[x.name]
        for _ in range(x.order):
            value = target.d(value)
        return value

    def image(t: Tree):
        hit = memo.get(t)
        if hit is not None:
            return hit
        if len(t.children) == 2:
            t0, t1 = t.children
            value = gen(t.decs[0])
            if not t0.is_leaf:
                value = target.succ(image(t0), value)
            if not t1.is_leaf:
                value = target.prec(value, image(t1))
        else:
            head, rest = decompose_head(t)
            value = target.bullet(image(head), image(rest))
        memo[t] = value
        return value

    total = target.zero()
    for t, c in u.items():
        total = target.add(total, target.scale(Fraction(c.eval(lam0, q0)), image(t)))
    return total
