"""Tensor words over the differential polynomial algebra with the weight-q
quasi-shuffle product, the commutative q-tridendriform operations and the
differential ``dA``.

Words are nonempty tuples of :class:`~dendriform.diffpoly.Monomial`; the
empty word only ever appears as the unit inside the recursions.
"""

from __future__ import annotations

from .diffpoly import MODES, POLYNOMIAL, DiffVar, Monomial, d0_monomial, monomial_product, parse_monomial
from .lincomb import LinComb, accumulate, lc_bilinear
from .scalars import LAM, ONE, Q, Scalar


class Word(tuple):
    """Nonempty sequence of monomial letters."""

    __slots__ = ()

    def __new__(cls, letters=()):
        return super().__new__(cls, letters)

    @property
    def degree(self) -> int:
        return sum(m.degree for m in self)

    def sort_key(self):
        return (self.degree, -len(self), tuple((m.degree, m.factors) for m in self))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __gt__(self, other):
        return other < self

    def __str__(self) -> str:
        return "|".join(map(str, self))

    def __repr__(self) -> str:
        return f"Word({self})"


def word(*letters) -> Word:
    """Build a word from monomials or monomial text such as ``"x^(0)y^(1)"``."""
    return Word(parse_monomial(m) if isinstance(m, str) else m for m in letters)


def parse_word(text: str) -> Word:
    """Parse ``x^(0)|y^(1)``, ``(x^(0))@(y^(1))`` or ``x^(0) (tensor) y^(1)``."""
    normal = text.replace("(tensor)", "|").replace("@", "|")
    letters = []
    for part in normal.split("|"):
        part = part.strip()
        while part.startswith("(") and part.endswith(")") and _balanced(part[1:-1]):
            part = part[1:-1].strip()
        letters.append(parse_monomial(part))
    return Word(letters)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


class QShuffleAlgebra:
    """The commutative differential q-tridendriform algebra on words.

    ``mode="trivial"`` multiplies letters by the zero product (unit aside),
    which turns the quasi-shuffle into the shuffle product.
    """

    def __init__(self, mode: str = POLYNOMIAL):
        if mode not in MODES:
            raise ValueError(f"unknown product mode {mode!r}")
        self.mode = mode
        self._qsh: dict = {}
        self._d: dict = {}

    # word level; arguments may be the empty tuple inside recursions

    def _letter_product(self, a: Monomial, b: Monomial):
        return monomial_product(a, b, self.mode).terms

    def _qsh_words(self, a: tuple, b: tuple) -> dict:
        if not a:
            return {Word(b): ONE}
        if not b:
            return {Word(a): ONE}
        key = (a, b)
        hit = self._qsh.get(key)
        if hit is not None:
            return hit
        acc: dict = {}
        a1, b1 = a[0], b[0]
        for w, c in self._qsh_words(a[1:], b).items():
            accumulate(acc, Word((a1,) + w), c)
        for w, c in self._qsh_words(a, b[1:]).items():
            accumulate(acc, Word((b1,) + w), c)
        for ab, c_ab in self._letter_product(a1, b1).items():
            for w, c in self._qsh_words(a[1:], b[1:]).items():
                accumulate(acc, Word((ab,) + w), Q * c_ab * c)
        acc = {k: v for k, v in acc.items() if v}
        self._qsh[key] = acc
        return acc

    def _prec_words(self, a: Word, b: Word) -> LinComb:
        a1 = a[0]
        return LinComb._raw({Word((a1,) + w): c for w, c in self._qsh_words(a[1:], b).items()})

    def _succ_words(self, a: Word, b: Word) -> LinComb:
        b1 = b[0]
        return LinComb._raw({Word((b1,) + w): c for w, c in self._qsh_words(a, b[1:]).items()})

    def _bullet_words(self, a: Word, b: Word) -> LinComb:
        acc: dict = {}
        tail = self._qsh_words(a[1:], b[1:])
        for ab, c_ab in self._letter_product(a[0], b[0]).items():
            for w, c in tail.items():
                accumulate(acc, Word((ab,) + w), c_ab * c)
        return LinComb._raw(acc)

    # bilinear extensions

    def qshuffle(self, u: LinComb, v: LinComb) -> LinComb:
        return lc_bilinear(lambda a, b: LinComb._raw(dict(self._qsh_words(a, b))), u, v)

    def prec(self, u: LinComb, v: LinComb) -> LinComb:
        return lc_bilinear(self._prec_words, u, v)

    def succ(self, u: LinComb, v: LinComb) -> LinComb:
        return lc_bilinear(self._succ_words, u, v)

    def bullet(self, u: LinComb, v: LinComb) -> LinComb:
        return lc_bilinear(self._bullet_words, u, v)

    def star(self, u: LinComb, v: LinComb) -> LinComb:
        return self.prec(u, v) + self.succ(u, v) + Q * self.bullet(u, v)

    # differential

    def _d_word(self, a: Word) -> LinComb:
        hit = self._d.get(a)
        if hit is not None:
            return hit
        # a1 < v is just a1 prefixed to v, so the rule reduces to prefixing
        d_head = d0_monomial(a[0]).terms
        if len(a) == 1:
            out = LinComb._raw({Word((m,)): c for m, c in d_head.items()})
        else:
            tail = Word(a[1:])
            d_tail = self._d_word(tail).terms
            acc: dict = {}
            for m, c in d_head.items():
                accumulate(acc, Word((m,) + tail), c)
                for w, e in d_tail.items():
                    accumulate(acc, Word((m,) + w), LAM * c * e)
            for w, e in d_tail.items():
                accumulate(acc, Word((a[0],) + w), e)
            out = LinComb._raw(acc)
        self._d[a] = out
        return out

    def d(self, u: LinComb) -> LinComb:
        return u.linear_map(self._d_word)


DEFAULT = QShuffleAlgebra()


def qshuffle(a: LinComb, b: LinComb) -> LinComb:
    return DEFAULT.qshuffle(a, b)


def t_prec(a: LinComb, b: LinComb) -> LinComb:
    return DEFAULT.prec(a, b)


def t_succ(a: LinComb, b: LinComb) -> LinComb:
    return DEFAULT.succ(a, b)


def t_bullet(a: LinComb, b: LinComb) -> LinComb:
    return DEFAULT.bullet(a, b)


def t_star(a: LinComb, b: LinComb) -> LinComb:
    return DEFAULT.star(a, b)


def dA(a: LinComb) -> LinComb:
    return DEFAULT.d(a)


def words(*ws) -> LinComb:
    """Sum of words, each given as a :class:`Word` or text."""
    return LinComb.from_pairs((parse_word(w) if isinstance(w, str) else w, ONE) for w in ws)


def word_lc(text: str, coeff: Scalar | int = 1) -> LinComb:
    return LinComb.basis(parse_word(text), coeff)


def random_word(
    rng,
    max_len: int = 5,
    min_len: int = 1,
    names=("x", "y"),
    max_order: int = 2,
    max_letter_degree: int = 2,
    mode: str = POLYNOMIAL,
) -> Word:
    if mode != POLYNOMIAL:
        max_letter_degree = 1
    letters = []
    for _ in range(rng.randint(min_len, max_len)):
        k = rng.randint(1, max_letter_degree)
        letters.append(
            Monomial(DiffVar(rng.choice(names), rng.randint(0, max_order)) for _ in range(k))
        )
    return Word(letters)


def random_wordsum(rng, max_terms: int = 2, **kwargs) -> LinComb:
    acc: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        accumulate(acc, random_word(rng, **kwargs), Scalar.const(rng.choice([-2, -1, 1, 2])))
    out = LinComb._raw(acc)
    return out if out else random_wordsum(rng, max_terms, **kwargs)


def random_word_tuple(rng, arity: int, max_len: int = 5, max_total: int = 9, **kwargs) -> list:
    """``arity`` independent word sums, each word at most ``max_len`` letters.

    Lengths are redrawn until their sum is at most ``max_total``; quasi-shuffles
    of three long words have hundreds of thousands of terms.
    """
    while True:
        lengths = [rng.randint(1, max_len) for _ in range(arity)]
        if sum(lengths) <= max_total:
            break
    out = []
    for n in lengths:
        out.append(random_wordsum(rng, min_len=n, max_len=n, **kwargs))
    return out
