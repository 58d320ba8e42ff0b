import json
import os
from pathlib import Path

import pytest

import corovm

CORPUS = Path(os.environ.get("COROVM_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))


def test_safety_examples():
    safe = corovm.check(r"\x. catch a. \y. throw a x")
    assert safe == {"use_sets": True, "visible_vars": True, "indexed": True, "term": r"\. catch. \. throw 0 #1"}
    unsafe = corovm.check(r"\x. catch a. \y. throw a y")
    assert not (unsafe["use_sets"] or unsafe["visible_vars"] or unsafe["indexed"])


def test_parse_and_indexed():
    assert corovm.parse(r"(\x. x)  y", "ct") == r"(\x. x) y"
    assert corovm.to_indexed(r"\x. getctx a. \y. setctx a x", "gs") == r"\. get. \. set 0 #0"
    with pytest.raises(corovm.ParseError):
        corovm.parse(r"\x. (x")
    with pytest.raises(corovm.ScopeError, match="y not visible"):
        corovm.to_indexed(r"\x. getctx a. \y. setctx a y", "gs")


def test_compile_and_lift():
    assert corovm.compile(r"\x. getctx a. \y. setctx a x") == r"\. catch. \. throw 0 #1"
    assert corovm.lift(r"\. catch. \. throw 0 #1") == r"\. get. \. set 0 #0"
    with pytest.raises(corovm.TranslationError):
        corovm.lift(r"\. catch. \. throw 0 #0")


def test_run_demo_on_every_machine():
    for machine in ("ct", "gs", "it"):
        r = corovm.run(r"getctx a. setctx a \x. x", machine=machine, trace=True)
        assert r["outcome"] == "final"
        assert r["steps"] == 2
        assert [e["rule"] for e in r["trace"]][-1] == "final"
    omega = corovm.run(r"(\x. x x) \x. x x", machine="it", max_steps=50)
    assert omega["outcome"] == "fuel_exhausted"


def test_bisim():
    r = corovm.bisim(r"getctx a. setctx a \x. x", "composed", 100)
    assert r["outcome"] == "both_halted" and r["step"] == 2 and r["related"]
    for src in corovm.generate(seed=3, size=20, count=25, args=2):
        assert corovm.bisim(src, "composed", 300)["related"]


def test_golden_trace_matches_library():
    golden = (CORPUS / "golden" / "ctx_demo.gs.it.jsonl").read_text().splitlines()
    r = corovm.run(r"getctx a. setctx a \x. x", machine="it", max_steps=200, trace=True)
    assert [json.loads(line) for line in golden] == r["trace"]


def test_generate_is_deterministic():
    assert corovm.generate(7, 24, 5, "gs", 2) == corovm.generate(7, 24, 5, "gs", 2)
    assert corovm.generate(1, 1) == [r"\x0. x0"]
