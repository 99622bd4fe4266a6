"""Randomized identity checks for differential (q-tri)dendriform algebras.

Any model is wrapped in an :class:`AlgebraHandle`; the ``check_*`` functions
sample inputs with a seeded RNG and compare both sides of each identity
exactly.  A :class:`Report` records every failing sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

MAX_RECORDED_FAILURES = 5


def _add(a, b):
    return a + b


def _scale(c, v):
    return c * v


@dataclass
class AlgebraHandle:
    name: str
    prec: Callable[[Any, Any], Any]
    succ: Callable[[Any, Any], Any]
    bullet: Optional[Callable[[Any, Any], Any]]
    d: Callable[[Any], Any]
    lam: Any
    q: Any
    zero: Callable[[], Any]
    sample: Callable[[random.Random], Any]
    add: Callable[[Any, Any], Any] = _add
    scale: Callable[[Any, Any], Any] = _scale
    fmt: Callable[[Any], str] = str
    # optional joint sampler (rng, arity) -> list, e.g. to bound combined size
    sample_many: Optional[Callable[[random.Random, int], list]] = None

    def draw(self, rng: random.Random, arity: int) -> list:
        if self.sample_many is not None:
            return self.sample_many(rng, arity)
        return [self.sample(rng) for _ in range(arity)]

    def star(self, a, b):
        out = self.add(self.prec(a, b), self.succ(a, b))
        if self.bullet is not None:
            out = self.add(out, self.scale(self.q, self.bullet(a, b)))
        return out

    def succ_q(self, a, b):
        """The induced right product ``> + q•`` (plain ``>`` without a bullet)."""
        out = self.succ(a, b)
        if self.bullet is not None:
            out = self.add(out, self.scale(self.q, self.bullet(a, b)))
        return out

    def leibniz(self, op, a, b):
        da, db = self.d(a), self.d(b)
        return self.add(
            self.add(op(da, b), op(a, db)),
            self.scale(self.lam, op(da, db)),
        )


@dataclass
class Failure:
    inputs: list[str]
    lhs: str
    rhs: str


@dataclass
class IdentityResult:
    name: str
    trials: int = 0
    failures: list[Failure] = field(default_factory=list)
    failure_count: int = 0
    outcomes: list[bool] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0


@dataclass
class Report:
    model: str
    suite: str
    seed: int
    results: list[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> IdentityResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def merge(self, other: "Report") -> "Report":
        return Report(self.model, f"{self.suite}+{other.suite}", self.seed,
                      self.results + other.results)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "identities": [
                {
                    "name": r.name,
                    "trials": r.trials,
                    "failures": r.failure_count,
                    "passed": r.passed,
                    "counterexamples": [
                        {"inputs": f.inputs, "lhs": f.lhs, "rhs": f.rhs} for f in r.failures
                    ],
                }
                for r in self.results
            ],
        }

    def summary(self) -> str:
        width = max([len(r.name) for r in self.results] + [8])
        lines = [f"model: {self.model}   suite: {self.suite}   seed: {self.seed}"]
        lines.append(f"{'identity'.ljust(width)}  trials  failures  status")
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.name.ljust(width)}  {r.trials:6d}  {r.failure_count:8d}  {status}")
            for f in r.failures[:1]:
                lines.append("    counterexample:")
                for i, text in enumerate(f.inputs):
                    lines.append(f"      {'abc'[i]} = {text}")
                lines.append(f"      lhs = {f.lhs}")
                lines.append(f"      rhs = {f.rhs}")
        return "\n".join(lines)


Identity = tuple[str, Callable[..., tuple[Any, Any]]]


def _run(alg: AlgebraHandle, suite: str, arity: int, identities: list[Identity],
         trials: int, seed: int) -> Report:
    rng = random.Random(seed)
    report = Report(alg.name, suite, seed, [IdentityResult(name) for name, _ in identities])
    for _ in range(trials):
        args = alg.draw(rng, arity)
        for (name, fn), result in zip(identities, report.results):
            lhs, rhs = fn(*args)
            ok = lhs == rhs
            result.trials += 1
            result.outcomes.append(ok)
            if not ok:
                result.failure_count += 1
                if len(result.failures) < MAX_RECORDED_FAILURES:
                    result.failures.append(
                        Failure([alg.fmt(a) for a in args], alg.fmt(lhs), alg.fmt(rhs))
                    )
    return report


def qtridend_identities(alg: AlgebraHandle) -> list[Identity]:
    P, S, B, star = alg.prec, alg.succ, alg.bullet, alg.star
    if B is None:
        raise ValueError(f"{alg.name} has no bullet product")
    return [
        ("(a<b)<c = a<(b*c)", lambda a, b, c: (P(P(a, b), c), P(a, star(b, c)))),
        ("(a>b)<c = a>(b<c)", lambda a, b, c: (P(S(a, b), c), S(a, P(b, c)))),
        ("(a*b)>c = a>(b>c)", lambda a, b, c: (S(star(a, b), c), S(a, S(b, c)))),
        ("(a>b).c = a>(b.c)", lambda a, b, c: (B(S(a, b), c), S(a, B(b, c)))),
        ("(a<b).c = a.(b>c)", lambda a, b, c: (B(P(a, b), c), B(a, S(b, c)))),
        ("(a.b)<c = a.(b<c)", lambda a, b, c: (P(B(a, b), c), B(a, P(b, c)))),
        ("(a.b).c = a.(b.c)", lambda a, b, c: (B(B(a, b), c), B(a, B(b, c)))),
    ]


def check_qtridend(alg: AlgebraHandle, trials: int = 100, seed: int = 0) -> Report:
    return _run(alg, "qtridend", 3, qtridend_identities(alg), trials, seed)


def derivation_identities(alg: AlgebraHandle) -> list[Identity]:
    d = alg.d
    ops = [("<", alg.prec), (">", alg.succ)]
    if alg.bullet is not None:
        ops.append((".", alg.bullet))
    return [
        (
            f"d(a{sym}b) = d(a){sym}b + a{sym}d(b) + lam*d(a){sym}d(b)",
            (lambda op: lambda a, b: (d(op(a, b)), alg.leibniz(op, a, b)))(op),
        )
        for sym, op in ops
    ]


def check_derivation(alg: AlgebraHandle, trials: int = 100, seed: int = 0) -> Report:
    return _run(alg, "derivation", 2, derivation_identities(alg), trials, seed)


def dendriform_identities(alg: AlgebraHandle) -> list[Identity]:
    P, S = alg.prec, alg.succ_q

    def total(a, b):
        return alg.add(P(a, b), S(a, b))

    return [
        ("(a<b)<c = a<(b<c + b>c)", lambda a, b, c: (P(P(a, b), c), P(a, total(b, c)))),
        ("(a>b)<c = a>(b<c)", lambda a, b, c: (P(S(a, b), c), S(a, P(b, c)))),
        ("(a<b + a>b)>c = a>(b>c)", lambda a, b, c: (S(total(a, b), c), S(a, S(b, c)))),
    ]


def dendriform_derivation_identities(alg: AlgebraHandle) -> list[Identity]:
    d = alg.d
    return [
        (
            f"d(a{sym}b) = d(a){sym}b + a{sym}d(b) + lam*d(a){sym}d(b)",
            (lambda op: lambda a, b: (d(op(a, b)), alg.leibniz(op, a, b)))(op),
        )
        for sym, op in (("<", alg.prec), (">_q", alg.succ_q))
    ]


def check_induced_dendriform(alg: AlgebraHandle, trials: int = 100, seed: int = 0) -> Report:
    """Dendriform axioms and weighted Leibniz rules for ``(<, > + q•, d)``.

    For a model without a bullet this is the plain dendriform check.
    """
    axioms = _run(alg, "dendriform", 3, dendriform_identities(alg), trials, seed)
    leibniz = _run(alg, "dendriform", 2, dendriform_derivation_identities(alg), trials, seed)
    return Report(alg.name, "dendriform", seed, axioms.results + leibniz.results)


def check_commutative(alg: AlgebraHandle, trials: int = 100, seed: int = 0) -> Report:
    identities = [("a>b = b<a", lambda a, b: (alg.succ(a, b), alg.prec(b, a)))]
    if alg.bullet is not None:
        identities.append(("a.b = b.a", lambda a, b: (alg.bullet(a, b), alg.bullet(b, a))))
    return _run(alg, "commutative", 2, identities, trials, seed)


def check_associativity(alg: AlgebraHandle, trials: int = 100, seed: int = 0) -> Report:
    star = alg.star
    identities = [("(a*b)*c = a*(b*c)", lambda a, b, c: (star(star(a, b), c), star(a, star(b, c))))]
    return _run(alg, "associativity", 3, identities, trials, seed)


SUITES = {
    "qtridend": check_qtridend,
    "derivation": check_derivation,
    "dendriform": check_induced_dendriform,
    "commutative": check_commutative,
    "associativity": check_associativity,
}


def run_suite(alg: AlgebraHandle, suite: str, trials: int = 100, seed: int = 0) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return SUITES[suite](alg, trials, seed)
