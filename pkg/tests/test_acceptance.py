"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.  Every comparison is exact.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import pytest

from oracles import catalan_counts, positionwise, schroeder_counts, subset_expansion

from dendriform.axioms import (
    check_associativity,
    check_commutative,
    check_derivation,
    check_qtridend,
    run_suite,
)
from dendriform.binary import b_dX, bin_lc, catalan, enumerate_binary
from dendriform.diffpoly import DiffVar
from dendriform.models import broken_models, qshuffle_handle, schroeder_handle
from dendriform.parser import evaluate
from dendriform.qshuffle import word_lc
from dendriform.scalars import LAM
from dendriform.schroeder import (
    corolla,
    dX,
    dx_breadth2_two_step,
    enumerate_trees,
    random_tree,
    s_bullet,
    s_prec,
    s_succ,
    super_catalan,
    tree_lc,
    universal_eval,
)
from dendriform.targets import (
    DEND_LEFT,
    DEND_Q0,
    DEND_RIGHT,
    TRIDEND,
    DiagonalAlgebra,
    DiagonalElement,
    QShuffleTarget,
    TargetConfig,
)

TRIALS = 100
SEED = 0


_capture = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    """Verdict lines bypass output capture so they show in every run."""
    global _capture
    _capture = capsys
    yield
    _capture = None


def say(text: str) -> None:
    if _capture is None:
        print(text, flush=True)
        return
    with _capture.disabled():
        print(text, flush=True)


def announce(number: int, title: str, ok: bool, detail: str, elapsed: float) -> None:
    say(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} -- {detail} ({elapsed:.1f} s)")


class Criterion:
    """Times a block, prints its verdict and then asserts it."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.ok, self.detail = False, "not evaluated"

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.ok, self.detail = False, f"error: {exc!r}"
        announce(self.number, self.title, self.ok, self.detail, self.elapsed)
        return False


def _first_failure(report) -> str:
    for r in report.results:
        if not r.passed:
            f = r.failures[0]
            return f"{r.name} fails on inputs {f.inputs}"
    return "zero failures"


# 1 ---------------------------------------------------------------------

def test_criterion_01_corolla_differential():
    with Criterion(1, "worked example d_X of a two-decoration corolla") as c:
        outputs = []
        for m, n in [(0, 0), (1, 2)]:
            got = evaluate(f"d(V[x^({m}),y^({n})](|,|,|))", "schroeder")
            expected = (
                tree_lc(corolla(DiffVar("x", m + 1), DiffVar("y", n)))
                + tree_lc(corolla(DiffVar("x", m), DiffVar("y", n + 1)))
                + LAM * tree_lc(corolla(DiffVar("x", m + 1), DiffVar("y", n + 1)))
            )
            outputs.append(got == expected and len(got) == 3)
        text = str(evaluate("d(V[x^(0),y^(0)](|,|,|))", "schroeder"))
        c.ok = all(outputs) and text == (
            "V[x^(1),y^(0)](|,|,|) + V[x^(0),y^(1)](|,|,|) + lam*V[x^(1),y^(1)](|,|,|)"
        )
        c.detail = text
    assert c.ok
    assert c.elapsed < 1.0


# 2, 3 ------------------------------------------------------------------

def test_criterion_02_schroeder_qtridend_axioms():
    with Criterion(2, f"q-tridendriform axioms on Schroeder trees, {TRIALS} triples") as c:
        report = check_qtridend(schroeder_handle(max_leaves=6, max_order=2), TRIALS, SEED)
        c.ok = report.passed and all(r.trials == TRIALS for r in report.results)
        c.detail = f"{len(report.results)} identities, " + _first_failure(report)
    assert c.ok
    assert c.elapsed < 60.0


def test_criterion_03_schroeder_weighted_leibniz():
    with Criterion(3, f"weighted Leibniz for <, >, . on Schroeder trees, {TRIALS} pairs") as c:
        report = check_derivation(schroeder_handle(), TRIALS, SEED)
        c.ok = report.passed and len(report.results) == 3
        c.detail = _first_failure(report)
    assert c.ok


# 4 ---------------------------------------------------------------------

def test_criterion_04_commutative_model():
    with Criterion(4, "quasi-shuffle model: commutativity, axioms, Leibniz, associativity") as c:
        alg = qshuffle_handle(max_len=5)
        reports = [
            check_commutative(alg, TRIALS, SEED),
            check_qtridend(alg, TRIALS, SEED),
            check_derivation(alg, TRIALS, SEED),
            check_associativity(alg, TRIALS, SEED),
        ]
        c.ok = all(r.passed for r in reports)
        c.detail = "; ".join(f"{r.suite}: {_first_failure(r)}" for r in reports)
    assert c.ok


# 5 ---------------------------------------------------------------------

def test_criterion_05_closed_form_consistency():
    with Criterion(5, "closed form vs two-step differential, breadth 2, depth 2, <=5 leaves") as c:
        x = DiffVar("x", 0)
        trees = [
            t for n in range(3, 6) for t in enumerate_trees(n, [x])
            if t.breadth == 2 and t.depth == 2
        ]
        mismatches = [t for t in trees if dX(tree_lc(t)) != dx_breadth2_two_step(t)]
        c.ok = bool(trees) and not mismatches
        c.detail = f"{len(trees)} trees, {len(mismatches)} mismatches"
    assert c.ok


# 6 ---------------------------------------------------------------------

def test_criterion_06_weight_zero_oracle():
    with Criterion(6, "d_X at lam = 0 is the position-wise raising sum, all trees <=5 leaves") as c:
        alphabet = [DiffVar("x", 0), DiffVar("x", 1)]
        bad, total = 0, 0
        for n in range(2, 6):
            for t in enumerate_trees(n, alphabet):
                total += 1
                bad += dX(tree_lc(t)).specialize(lam0=0) != positionwise(t)
            for t in enumerate_binary(n, alphabet):
                total += 1
                bad += b_dX(bin_lc(t)).specialize(lam0=0) != positionwise(t)
        c.ok = bad == 0
        c.detail = f"{total} trees, {bad} mismatches"
    assert c.ok


# 7 ---------------------------------------------------------------------

def test_criterion_07_basis_counts():
    with Criterion(7, "basis counts for 2..6 leaves") as c:
        x = DiffVar("x", 0)
        s = [len(enumerate_trees(n, [x])) for n in range(2, 7)]
        b = [len(enumerate_binary(n, [x])) for n in range(2, 7)]
        c.ok = (
            s == [1, 3, 11, 45, 197] == super_catalan(6)[1:] == schroeder_counts(6)[1:]
            and b == [1, 2, 5, 14, 42] == catalan(6)[1:] == catalan_counts(6)[1:]
        )
        c.detail = f"Schroeder {s}, binary {b}"
    assert c.ok
    assert c.elapsed < 5.0


# 8 ---------------------------------------------------------------------

def _homomorphism_failures(target, assignment, n_trees, seed, lam0, q0):
    rng = random.Random(seed)
    failures = []

    def image(u):
        return universal_eval(assignment, target, u, lam0, q0)

    for _ in range(n_trees):
        t = tree_lc(random_tree(rng, max_leaves=5))
        u = tree_lc(random_tree(rng, max_leaves=5))
        ft, fu = image(t), image(u)
        checks = {
            "d": (image(dX(t)), target.d(ft)),
            "<": (image(s_prec(t, u)), target.prec(ft, fu)),
            ">": (image(s_succ(t, u)), target.succ(ft, fu)),
            ".": (image(s_bullet(t, u)), target.bullet(ft, fu)),
        }
        failures += [(name, str(t), str(u)) for name, (a, b) in checks.items() if a != b]
    return failures


def test_criterion_08_universal_property():
    with Criterion(8, "universal morphism commutes with d, <, >, . on 100 trees") as c:
        f = {"x": word_lc("x^(0)"), "y": word_lc("y^(0)")}
        parts, ok = [], True
        for lam0, q0 in [(0, 0), (1, 1), (2, 3)]:
            target = QShuffleTarget(lam0, q0).handle()
            fails = _homomorphism_failures(target, f, TRIALS, SEED, lam0, q0)
            ok &= not fails
            parts.append(f"qshuffle({lam0},{q0}): {len(fails)} failures")
        diag = DiagonalAlgebra(TargetConfig(1, 1, 2)).handle()
        e1 = DiagonalElement.basis(1)
        fails = _homomorphism_failures(diag, {"x": e1, "y": e1}, TRIALS, SEED, 1, 1)
        ok &= not fails
        parts.append(f"diagonal(1,1,2): {len(fails)} failures")
        c.ok, c.detail = ok, "; ".join(parts)
    assert c.ok


# 9 ---------------------------------------------------------------------

VARIANT_CONFIGS = {
    DEND_Q0: [(1, 0, 2), (2, 0, 3), (Fraction(1, 2), 0, 5)],
    TRIDEND: [(1, 1, 2), (2, 3, 3), (Fraction(1, 2), -1, 5)],
    DEND_LEFT: [(1, 1, 2), (2, 3, 3), (Fraction(1, 2), -1, 5)],
    DEND_RIGHT: [(1, 1, 2), (2, 3, 3), (Fraction(1, 2), -1, 5)],
}


def test_criterion_09_rota_baxter_witnesses():
    with Criterion(9, "diagonal Rota-Baxter variants, three configurations each") as c:
        failed = []
        for variant, configs in VARIANT_CONFIGS.items():
            suites = ["qtridend", "derivation", "dendriform"] if variant == TRIDEND else ["dendriform", "derivation"]
            for cfg in configs:
                alg = DiagonalAlgebra(TargetConfig(*cfg), variant)
                for suite in suites:
                    if not run_suite(alg.handle(), suite, TRIALS, SEED).passed:
                        failed.append(f"{variant}{cfg}:{suite}")
                lam, q = alg.config.lambda0, alg.config.q0
                for a in range(1, 7):
                    for b in range(1, 7):
                        if alg.mu(a + b) != alg.mu(a) + alg.mu(b) + lam * alg.mu(a) * alg.mu(b):
                            failed.append(f"{variant}{cfg}: mu({a},{b})")
                        if alg.r(a) * alg.r(b) != (alg.r(a) + alg.r(b) + q) * alg.r(a + b):
                            failed.append(f"{variant}{cfg}: r({a},{b})")
        c.ok = not failed
        c.detail = "all suites and eigenvalue identities hold" if c.ok else ", ".join(failed[:5])
    assert c.ok


# 10 --------------------------------------------------------------------

BROKEN_SUITES = {
    "broken:zero-bullet": "qtridend",
    "broken:d-without-lam": "derivation",
    "broken:swapped-prec": "qtridend",
}


def test_criterion_10_mutation_sensitivity():
    with Criterion(10, "broken models are caught with a counterexample") as c:
        caught = []
        for name, make in broken_models().items():
            report = run_suite(make(), BROKEN_SUITES[name], trials=20, seed=SEED)
            bad = [r for r in report.results if not r.passed]
            if bad and bad[0].failures:
                f = bad[0].failures[0]
                caught.append(name)
                say(f"\n    {name}: {bad[0].name} fails; inputs {f.inputs}")
        c.ok = len(caught) >= 3 and len(caught) == len(broken_models())
        c.detail = f"{len(caught)} of {len(broken_models())} caught"
    assert c.ok


# 11 --------------------------------------------------------------------

def test_criterion_11_depth_one_term_count():
    with Criterion(11, "d_X of an m-decoration corolla has 2^m - 1 terms") as c:
        ok = True
        for m in range(1, 7):
            t = corolla(*[DiffVar(f"x{i}", 0) for i in range(m)])
            d = dX(tree_lc(t))
            raised = {s: sum(v.order for v in s.decs) for s, _ in d.items()}
            ok &= len(d) == 2**m - 1
            ok &= all(coeff == LAM ** (raised[s] - 1) for s, coeff in d.items())
            ok &= d == subset_expansion(t)
        c.ok = ok
        c.detail = "m = 1..6"
    assert c.ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
