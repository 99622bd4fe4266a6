from hypothesis import given
from hypothesis import strategies as st

from dendriform.lincomb import LinComb, lc_bilinear
from dendriform.scalars import LAM, Q, Scalar

keys = st.sampled_from(["a", "b", "c", "d"])
combos = st.dictionaries(keys, st.integers(-3, 3), max_size=4).map(
    lambda d: LinComb({k: Scalar.const(v) for k, v in d.items()})
)


@given(combos, combos, combos)
def test_module_axioms(u, v, w):
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert u - u == LinComb()
    assert LAM * (u + v) == LAM * u + LAM * v


@given(combos)
def test_zero_coefficients_are_dropped(u):
    assert all(c for _, c in (u - u + u).items())
    assert len(0 * u) == 0


def test_text_format():
    u = LinComb({"a": Scalar.const(1), "b": -Scalar.const(2), "c": 1 + Q, "d": -LAM})
    assert u.to_text() == "a - 2*b + (1 + q)*c - lam*d"
    assert str(LinComb()) == "0"


def test_bilinear_extension():
    def pair(a, b):
        return LinComb.basis(a + b)

    u = LinComb.basis("a", 2) + LinComb.basis("b")
    v = LinComb.basis("c", LAM)
    assert lc_bilinear(pair, u, v) == LinComb.basis("ac", 2 * LAM) + LinComb.basis("bc", LAM)


def test_specialize_and_linear_map():
    u = LinComb.basis("a", LAM + Q)
    assert u.specialize(1, 2) == LinComb.basis("a", 3)
    assert u.linear_map(lambda k: LinComb.basis(k * 2)) == LinComb.basis("aa", LAM + Q)
