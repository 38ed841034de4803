from __future__ import annotations

import json
from importlib import resources

import jsonschema

from sqwu import corpus
from sqwu.report import Check, VerificationReport, digest
from sqwu.suites import algebra_suite


def schema(name: str) -> dict:
    return json.loads(resources.files("sqwu").joinpath("data/schemas", name).read_text())


def test_status_and_passed():
    rep = VerificationReport("t", {"a": 1})
    rep.add(Check("c1", "plumbing", True))
    rep.add(Check("c2", "x", False, status="skipped"))
    assert rep.passed
    rep.add(Check("c3", "x", True, status="warn"))
    assert rep.passed and len(rep.warnings) == 1
    rep.add(Check("c4", "x", False))
    assert not rep.passed and [c.id for c in rep.failures()] == ["c4"]


def test_byte_stable(tmp_path):
    a = corpus.load("rp5xrp5")
    first = algebra_suite(a).to_json()
    second = algebra_suite(corpus.load("rp5xrp5")).to_json()
    assert first == second
    path = tmp_path / "r.json"
    algebra_suite(a).write(path)
    assert path.read_text() == first
    meta = json.loads((tmp_path / "r.json.meta.json").read_text())
    assert "written_at" in meta and "written_at" not in first


def test_digest_ignores_key_order():
    assert digest({"a": 1, "b": [1, 2]}) == digest({"b": [1, 2], "a": 1})
    assert digest({"a": 1}) != digest({"a": 2})


def test_reports_match_schema():
    rep = algebra_suite(corpus.load("hp2"))
    jsonschema.validate(rep.to_dict(), schema("report.schema.json"))


def test_corpus_matches_schema():
    s = schema("algebra.schema.json")
    for name in corpus.names():
        text = resources.files("sqwu").joinpath("data/corpus", f"{name}.json").read_text()
        jsonschema.validate(json.loads(text), s)
