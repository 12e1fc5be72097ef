import pytest

import syllogic


def test_parse_and_normalize():
    assert syllogic.normalize("S sa P -> ~(S si P)") == "S sa P -> ~S si P"
    with pytest.raises(syllogic.ParseError):
        syllogic.normalize("S xx P")


def test_evaluate_model():
    model = {"universe": ["u"], "is": {"u": ["P"]}, "terms": ["S", "P"]}
    assert syllogic.evaluate("S si P & S so P", model)
    assert not syllogic.evaluate("S sa P", model)


def test_decide_counterexample():
    v = syllogic.decide("S so P -> P so S", bound=3)
    assert v["status"] == "counterexample"
    assert len(v["witness"]["universe"]) == 1
    assert syllogic.decide("S sa P -> S se P")["status"] == "valid"


def test_classify_and_square():
    assert syllogic.classify("S sa P", "S si P")["relation"] == "contrary"
    assert syllogic.classify("S a P", "S o P", semantics="analytic")["relation"] == "contradictory"
    assert syllogic.square("synthetic", 3)["pass"]
    assert syllogic.square("analytic", 4)["pass"]
    assert not syllogic.square("synthetic", 3, allow_empty=True)["pass"]


def test_catalog():
    rows = syllogic.catalog(3)
    assert len(rows) == 24
    status = {r["id"]: r["verdict"]["status"] for r in rows}
    assert status["A6"] == "counterexample"
    assert status["A8"] == "counterexample"
    assert all(status["T%02d" % k] == "valid" for k in range(1, 21))


def test_check_proof():
    ok = syllogic.check_proof("1. S sa P -> S se P ; axiom5 S:=S P:=P\n")
    assert ok["ok"] and ok["conclusion"] == "S sa P -> S se P"
    bad = syllogic.check_proof("1. P sa S -> S se P ; axiom5 S:=S P:=P\n")
    assert not bad["ok"] and bad["rejected_line"] == 1
    with pytest.raises(syllogic.ScriptError):
        syllogic.check_proof("1. S sa P ; frobnicate\n")


def test_starb():
    els = syllogic.carrier(2)
    assert len(els) == 16
    for x in els:
        assert syllogic.inf(x, syllogic.fneg(x)).is_standard()
        assert syllogic.fneg(syllogic.fneg(x)) == x
        cases = syllogic.classify_cases(x)
        assert len(cases) == 12
        assert all(c["conclusion_holds"] for c in cases if c["hypothesis_holds"])
    top = syllogic.standard(2, 3)
    assert repr(top) == "*1"
    passed, findings = syllogic.verify_two_squares(2)
    assert passed and findings


def test_verify_paper():
    rep = syllogic.verify_paper()
    assert rep["pass"]
    with pytest.raises(syllogic.BoundError):
        syllogic.verify_paper(99, 2)
