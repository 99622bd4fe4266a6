import json

import pytest

from dendriform.axioms import SUITES, run_suite
from dendriform.models import MODEL_NAMES, broken_models, get_model


@pytest.mark.parametrize("name,suite", [
    ("broken:zero-bullet", "qtridend"),
    ("broken:d-without-lam", "derivation"),
    ("broken:swapped-prec", "qtridend"),
])
def test_broken_models_are_caught(name, suite):
    report = run_suite(get_model(name), suite, trials=20, seed=0)
    assert not report.passed
    failing = [r for r in report.results if not r.passed]
    assert failing[0].failures, "a counterexample is recorded"
    assert "counterexample" in report.summary()


def test_reports_are_deterministic():
    a = run_suite(get_model("schroeder"), "qtridend", trials=5, seed=11).to_json()
    b = run_suite(get_model("schroeder"), "qtridend", trials=5, seed=11).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["passed"] and a["identities"][0]["trials"] == 5


def test_registry():
    assert set(broken_models()) <= set(MODEL_NAMES)
    with pytest.raises(ValueError):
        get_model("nonsense")
    with pytest.raises(ValueError):
        run_suite(get_model("diagonal"), "nonsense")
    with pytest.raises(ValueError):
        run_suite(get_model("binary"), "qtridend")
    assert {"qtridend", "derivation", "dendriform"} <= set(SUITES)


def test_different_seeds_draw_different_samples():
    alg = get_model("qshuffle-trivial")
    import random

    assert alg.draw(random.Random(1), 2) != alg.draw(random.Random(2), 2)
