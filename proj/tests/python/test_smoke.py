import json

import pytest

import ihopf


def test_presets_listed():
    names = [name for name, _ in ihopf.list_presets()]
    assert "A2split" in names and "AIII3" in names
    info = ihopf.preset_info("AIII3")
    assert info["rank"] == 3
    assert info["tau"] == [3, 2, 1]
    assert info["cartan"][0] == [2, -1, 0]


def test_evaluate_contexts():
    assert ihopf.evaluate("1")["normal_form"] == "1"
    r = ihopf.evaluate("t[1]*t[2]", ctx="star", preset="A2tau")
    same = ihopf.evaluate("t[1]t[2] + (v - v^-1)h[2]", ctx="borel", preset="A2tau")
    assert r["normal_form"] == same["normal_form"]
    assert r["gradings"] == ["[0,0]", "[1,1]"]
    w = ihopf.evaluate("B[1]", ctx="iword", preset="A1")
    assert w["embedding"] == ihopf.evaluate("F[1] + E[1]K'[1]", ctx="u", preset="A1")["normal_form"]


def test_errors():
    with pytest.raises(ihopf.ParseError):
        ihopf.evaluate("t[1]+*")
    with pytest.raises(ihopf.ConfigError):
        ihopf.preset_info("nope")
    with pytest.raises(ihopf.ConfigError):
        ihopf.verify(["A1"], suites=["nope"])


def test_verify_and_report():
    rs = ihopf.verify(["A2split"], suites=["main-theorem"])
    assert rs and all(r["passed"] for r in rs)
    assert ihopf.verify(["A2split"], suites=[]) == []
    a = ihopf.report_json(["AIII3"], suites=["serre-presentation"], seed=5)
    b = ihopf.report_json(["AIII3"], suites=["serre-presentation"], seed=5)
    assert a == b
    doc = json.loads(a)
    assert doc["failed"] == 0 and doc["total"] == len(doc["checks"]) > 0
