import random

import pytest

from oracles import catalan_counts, positionwise, subset_expansion

from dendriform.axioms import check_commutative, check_induced_dendriform
from dendriform.binary import (
    BLEAF,
    BinaryTree,
    b_dX,
    b_prec,
    b_succ,
    bgraft,
    bin_lc,
    catalan,
    enumerate_binary,
    random_binary,
    vertex,
)
from dendriform.diffpoly import DiffVar
from dendriform.models import binary_handle

x0, y0 = DiffVar("x", 0), DiffVar("y", 0)
X, Y = bin_lc(vertex(x0)), bin_lc(vertex(y0))


def test_products_of_two_vertices():
    assert b_prec(X, Y) == bin_lc(bgraft(BLEAF, x0, vertex(y0)))
    assert b_succ(X, Y) == bin_lc(bgraft(vertex(x0), y0, BLEAF))


def test_total_product_sums_trees_by_reading_word():
    # x*y*z is every binary tree whose in-order reading is x, y, z, once each
    Z = bin_lc(vertex(DiffVar("z", 0)))
    xy = b_prec(X, Y) + b_succ(X, Y)
    xyz = b_prec(xy, Z) + b_succ(xy, Z)
    letters = [x0, y0, DiffVar("z", 0)]
    expected = {_relabel(t, letters) for t in enumerate_binary(4, [x0])}
    assert set(xyz.keys()) == expected
    assert all(c == 1 for _, c in xyz.items())


def _relabel(t, letters):
    it = iter(letters)

    def go(s):
        if s.is_leaf:
            return s
        left = go(s.left)
        return bgraft(left, next(it), go(s.right))

    return go(t)


SMALL = [t for n in range(2, 6) for t in enumerate_binary(n, [x0, DiffVar("x", 1)])]


def test_subset_expansion_and_weight_zero():
    for t in SMALL:
        d = b_dX(bin_lc(t))
        assert d == subset_expansion(t), str(t)
        assert d.specialize(lam0=0) == positionwise(t)


def test_counts():
    counts = [len(enumerate_binary(n, [x0])) for n in range(2, 8)]
    assert counts == [1, 2, 5, 14, 42, 132]
    assert counts == catalan_counts(7)[1:]
    assert catalan(7)[1:] == counts


def test_json_round_trip():
    for t in enumerate_binary(4, [x0, y0]):
        assert BinaryTree.from_json(t.to_json()) == t


@pytest.mark.parametrize("seed", range(10))
def test_leaf_grading(seed):
    rng = random.Random(seed)
    t, u = random_binary(rng, max_leaves=5), random_binary(rng, max_leaves=5)
    for op in (b_prec, b_succ):
        assert {s.leaves for s in op(bin_lc(t), bin_lc(u)).keys()} == {t.leaves + u.leaves - 1}


def test_random_suites_and_noncommutativity():
    alg = binary_handle(max_leaves=4)
    assert check_induced_dendriform(alg, trials=15, seed=1).passed
    assert not check_commutative(alg, trials=5, seed=1).passed
