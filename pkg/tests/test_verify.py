"""Self-check harness: random invariant sweeps and shrinking."""

from __future__ import annotations

import random

import pytest

from graph_essence import docio, verify
from graph_essence.core import AdmissibilityMask, AsymGraph, GeneralGraph, SymGraph

from conftest import document_graph


def test_verification_passes_on_a_fixture(sym_quad):
    report = verify.run_verification(
        sym_quad, AdmissibilityMask.complete(4), trials=6, seed=9
    )
    assert report.ok
    assert report.counterexample is None
    assert report.lines[0] == "verify: kind=symmetric n=4 trials=6 seed=9"
    assert report.lines[-1] == "result: PASS (1 input + 6 random graphs)"
    for name in verify.CHECK_NAMES:
        assert f"check {name}: ok (7 graphs)" in report.lines


@pytest.mark.parametrize(
    "name",
    ["asym_hexagon_partial.json", "sym_hexagon_partial.json", "general_pentagon.json"],
)
def test_verification_passes_masked_and_general_inputs(name):
    graph, mask = document_graph(name)
    report = verify.run_verification(graph, mask, trials=4, seed=0)
    assert report.ok


def test_verification_is_deterministic(asym_pentagon):
    first = verify.run_verification(asym_pentagon, None, trials=10, seed=3)
    second = verify.run_verification(asym_pentagon, None, trials=10, seed=3)
    assert first.ok
    assert first.lines == second.lines


def test_random_graph_kinds():
    rng = random.Random(1)
    assert isinstance(verify.random_graph("asymmetric", 5, rng), AsymGraph)
    assert isinstance(verify.random_graph("symmetric", 5, rng), SymGraph)
    assert isinstance(verify.random_graph("general", 5, rng), GeneralGraph)
    with pytest.raises(ValueError):
        verify.random_graph("mixed", 5, rng)


def test_drop_vertex_relabels(asym_pentagon, general_pentagon):
    smaller = verify.drop_vertex(asym_pentagon, 2)
    assert smaller.n == 4
    assert smaller.arc(0, 1) == asym_pentagon.arc(0, 1)
    assert smaller.arc(2, 3) == asym_pentagon.arc(3, 4)
    gsmall = verify.drop_vertex(general_pentagon, 0)
    assert gsmall.n == 4
    assert gsmall.arc(0, 1) == general_pentagon.arc(1, 2)
    assert gsmall.arc(1, 0) == general_pentagon.arc(2, 1)


def test_shrink_mask_relabels():
    mask = AdmissibilityMask.from_forbidden(5, [(1, 3)])
    small = verify.shrink_mask(mask, 2)
    assert small.n == 4
    assert not small.allows(1, 2)
    assert small.allows(0, 1)


def test_find_violation_is_none_on_valid_graphs(sym_pentagon):
    assert verify.find_violation(sym_pentagon) is None


def test_a_forced_violation_shrinks_to_a_small_counterexample(
    monkeypatch, sym_hexagon
):
    monkeypatch.setitem(verify._CHECKS, "transfer", lambda g, m: "forced")
    report = verify.run_verification(sym_hexagon, None, trials=2, seed=4)
    assert not report.ok
    assert "check transfer: FAIL on input graph: forced" in report.lines
    assert report.lines[-1] == "result: FAIL (seed=4)"
    doc = docio.parse(report.counterexample)
    assert doc.kind == "symmetric"
    assert doc.n == 3
