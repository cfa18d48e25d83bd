from __future__ import annotations

import json

import pytest

from qminkowski.verify import CheckReport, classical_suite, dumps, failed, limit_report, run_verify


@pytest.fixture(scope="module")
def quantum_doc():
    return run_verify("quantum", max_degree=3, thetas=(0,), seed=0)


def test_quantum_suite_has_no_failures(quantum_doc):
    assert failed(quantum_doc) == []
    statuses = {c["status"] for c in quantum_doc["checks"]}
    assert statuses <= {"pass", "hypothesis-failed", "reported"}
    ids = {c["check_id"] for c in quantum_doc["checks"]}
    assert {"ybe", "hecke", "representation", "bra-pairing", "ch-r3", "idempotent-search"} <= ids


def test_hypothesis_outcomes_are_reported(quantum_doc):
    hyp = {c["check_id"]: c["status"] for c in quantum_doc["checks"] if "hypothesis" in c["check_id"]}
    assert hyp["gauge-hypothesis-r3-deg0"] == "pass"
    assert hyp["gauge-hypothesis-r3-deg2"] == "hypothesis-failed"
    assert hyp["gauge-hypothesis-h2-deg1"] == "hypothesis-failed"


def test_schema(quantum_doc):
    assert set(quantum_doc) == {"version", "config", "checks"}
    assert {"theta", "max_degree", "seed"} <= set(quantum_doc["config"])
    for c in quantum_doc["checks"]:
        assert {"check_id", "statement", "status", "witness", "max_degree", "theta", "elapsed"} <= set(c)
    json.loads(dumps(quantum_doc))


def test_deterministic(quantum_doc):
    again = run_verify("quantum", max_degree=3, thetas=(0,), seed=0)
    strip = lambda d: [{k: v for k, v in c.items() if k != "elapsed"} for c in d["checks"]]
    assert strip(again) == strip(quantum_doc)


def test_classical_suite_passes():
    doc = run_verify("classical", max_degree=3)
    assert failed(doc) == []
    assert all(bad is None for _, _, bad in classical_suite(3))


def test_theta_set():
    doc = run_verify("quantum", max_degree=2, thetas=(0, 1, 2))
    assert failed(doc) == []
    thetas = {c["theta"] for c in doc["checks"] if c["check_id"].startswith("module-algebra")}
    assert thetas == {0, 1, 2}


def test_limits_all_agree():
    assert all(ok for _, ok, _ in limit_report(2))


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_verify("nope")


def test_report_invariants():
    with pytest.raises(ValueError):
        CheckReport("x", "s", "maybe")
    rep = CheckReport("x", "s", "fail")
    assert rep.witness
