import os

import pytest

import bcx

F1 = "(a+ac)*(b+bc)"
G1 = "2*star(Z)*(dag(Z) + til(Z))"


def test_evaluate():
    assert bcx.evaluate("Z^2", "1 + j")["value"] == "2*j"
    assert bcx.evaluate("e+ * e-", "3")["value"] == "0"
    assert bcx.evaluate("rehyp(Z)", "1+2i+3j+4k")["value"] == "1 + 4*k"


def test_apply():
    assert bcx.apply("d1", F1, raw=True)["result"] == "0"
    assert bcx.apply("d5", F1, raw=True)["result"] == "1"
    assert bcx.apply("dZs^2", "star(Z)")["result"] == "0"


def test_classify():
    report = bcx.classify(F1, raw=True)
    assert report["signature"] == [2, 2, 2]
    assert report["orders"]["d1"] == 1
    assert report["a1"] is None


def test_decompose():
    assert bcx.decompose("conjbasis", G1) == {"1,0,1": "2", "1,1,0": "2"}
    main = bcx.decompose("main", F1, n=2, k=2, raw=True)
    assert main["f"]["1,0"] == "2*a | 2*b"
    assert bcx.decompose("almansi", "a^2*ac^3 | 0", pair="alpha") == {"0": "0", "1": "0", "2": "ac"}


def test_structured_errors():
    with pytest.raises(bcx.BcxError) as e:
        bcx.decompose("rehyp-holo", F1, raw=True)
    assert e.value.kind == "PreconditionViolation"
    assert e.value.details["condition"] == "dZdagger F = 0"
    assert e.value.exit_code == 1

    with pytest.raises(bcx.BcxError) as e:
        bcx.classify("Z +")
    assert e.value.kind == "ParseError"
    assert e.value.details["position"] == 3

    with pytest.raises(bcx.BcxError) as e:
        bcx.verify("nope")
    assert e.value.kind == "UnknownSuite"


def test_json_round_trip():
    f = bcx.function_json(G1)
    assert bcx.canonical(f) == bcx.canonical(G1)
    exact = bcx.evaluate(f, "1 + 2i", exact=True)
    assert exact["function"] == f


def test_verify_and_examples():
    report = bcx.verify("all", trials=5, seed=3)
    assert report["passed"] and report["exit_code"] == 0
    assert [s["name"] for s in report["suites"]] == bcx.suite_names()
    assert bcx.worked_examples()["passed"]


def test_loaded_from_staging_when_requested():
    staged = os.environ.get("BCX_STAGED")
    if staged:
        assert bcx._core.__file__.startswith(staged)
