"""Graph documents: parsing, validation diagnostics, serialization."""

from __future__ import annotations

import random
import re
import textwrap
from fractions import Fraction

import pytest

from graph_essence import docio, verify
from graph_essence.core import AdmissibilityMask, AsymGraph
from graph_essence.errors import DocumentError

from conftest import DOCUMENT_NAMES, document_text

BASE = '{"kind": "symmetric", "n": 3, "complete": false, "edges": [%s]}'


@pytest.mark.parametrize("name", DOCUMENT_NAMES)
def test_packaged_documents_round_trip_byte_exact(name):
    text = document_text(name)
    doc = docio.parse(text)
    assert docio.serialize(doc) == text
    graph, mask = docio.to_graph(doc)
    assert docio.serialize(docio.from_graph(graph, mask)) == text


@pytest.mark.parametrize(
    "text, value",
    [
        ("0", Fraction(0)),
        ("-3", Fraction(-3)),
        ("+7", Fraction(7)),
        ("9/2", Fraction(9, 2)),
        ("-9/6", Fraction(-3, 2)),
        ("4.5", Fraction(9, 2)),
        (" 12 ", Fraction(12)),
    ],
)
def test_parse_weight_literal(text, value):
    assert docio.parse_weight_literal(text) == value


@pytest.mark.parametrize(
    "bad",
    ["", "inf", "-inf", "nan", "1e3", "0x10", "1.2.3", "1/2/3", "a", "--1", "1 / 2"],
)
def test_parse_weight_literal_rejects_inexact_text(bad):
    with pytest.raises(DocumentError):
        docio.parse_weight_literal(bad)


def test_zero_denominators_are_rejected():
    with pytest.raises(DocumentError):
        docio.parse_weight_literal("1/0")


def test_format_weight():
    assert docio.format_weight(Fraction(4)) == "4"
    assert docio.format_weight(Fraction(-9, 2)) == "-9/2"
    assert docio.format_weight(Fraction(6, 4)) == "3/2"


def test_parse_rejects_malformed_documents():
    with pytest.raises(DocumentError, match="invalid JSON"):
        docio.parse("{")
    with pytest.raises(DocumentError, match="JSON object"):
        docio.parse("[]")
    with pytest.raises(DocumentError, match="unknown document keys"):
        docio.parse('{"kind": "symmetric", "n": 3, "edges": [], "extra": 1}')
    with pytest.raises(DocumentError, match="missing"):
        docio.parse('{"kind": "symmetric", "n": 3}')
    with pytest.raises(DocumentError, match="kind"):
        docio.parse('{"kind": "undirected", "n": 3, "edges": []}')
    with pytest.raises(DocumentError, match="n must be"):
        docio.parse('{"kind": "symmetric", "n": 2, "edges": []}')
    with pytest.raises(DocumentError, match="n must be"):
        docio.parse('{"kind": "symmetric", "n": true, "edges": []}')
    with pytest.raises(DocumentError, match="complete"):
        docio.parse('{"kind": "symmetric", "n": 3, "complete": 1, "edges": []}')
    with pytest.raises(DocumentError, match="edges"):
        docio.parse('{"kind": "symmetric", "n": 3, "edges": {}}')


@pytest.mark.parametrize(
    "record, message",
    [
        ("1", "must be an object"),
        ('{"i": 1, "j": 2}', "exactly i, j, w"),
        ('{"i": 1, "j": 2, "w": 1, "x": 2}', "exactly i, j, w"),
        ('{"i": 0, "j": 2, "w": 1}', "must be an integer in 1..3"),
        ('{"i": 1, "j": 4, "w": 1}', "must be an integer in 1..3"),
        ('{"i": true, "j": 2, "w": 1}', "must be an integer"),
        ('{"i": 1, "j": 1, "w": 1}', "self-pair"),
        ('{"i": 1, "j": 2, "w": 1.5}', "floating-point"),
        ('{"i": 1, "j": 2, "w": "inf"}', "not a weight literal"),
        ('{"i": 1, "j": 2, "w": true}', "integer or string literal"),
        ('{"i": 1, "j": 2, "w": null}', "integer or string literal"),
    ],
)
def test_parse_rejects_bad_edge_records(record, message):
    with pytest.raises(DocumentError, match=re.escape(message)):
        docio.parse(BASE % record)


def test_duplicate_pairs_report_line_numbers():
    text = textwrap.dedent(
        """\
        {
          "kind": "symmetric",
          "n": 3,
          "complete": false,
          "edges": [
            {"i": 1, "j": 2, "w": 1},
            {"i": 2, "j": 1, "w": 2}
          ]
        }
        """
    )
    with pytest.raises(DocumentError) as err:
        docio.parse(text)
    assert "edges[1] (line 7)" in str(err.value)
    assert "edges[0] (line 6)" in str(err.value)


def test_asym_pairs_are_direction_exclusive():
    text = (
        '{"kind": "asymmetric", "n": 3, "complete": false, "edges": ['
        '{"i": 1, "j": 2, "w": 1}, {"i": 2, "j": 1, "w": 1}]}'
    )
    with pytest.raises(DocumentError, match="already given"):
        docio.parse(text)


def test_general_documents_need_both_directions():
    text = (
        '{"kind": "general", "n": 3, "complete": false, '
        '"edges": [{"i": 1, "j": 2, "w": 1}]}'
    )
    with pytest.raises(DocumentError, match="both directions"):
        docio.parse(text)


def test_general_duplicate_ordered_arcs_are_rejected():
    text = (
        '{"kind": "general", "n": 3, "complete": false, "edges": ['
        '{"i": 1, "j": 2, "w": 1}, {"i": 2, "j": 1, "w": 2}, '
        '{"i": 1, "j": 2, "w": 3}]}'
    )
    with pytest.raises(DocumentError, match="already given"):
        docio.parse(text)


def test_complete_documents_must_cover_every_pair():
    text = '{"kind": "symmetric", "n": 3, "edges": [{"i": 1, "j": 2, "w": 1}]}'
    with pytest.raises(DocumentError, match="missing"):
        docio.parse(text)


def test_to_graph_fills_missing_pairs():
    text = (
        '{"kind": "symmetric", "n": 3, "complete": false, '
        '"edges": [{"i": 1, "j": 2, "w": 5}]}'
    )
    graph, mask = docio.to_graph(docio.parse(text), fill=Fraction(7))
    assert graph.edge(0, 1) == 5
    assert graph.edge(0, 2) == 7
    assert mask.allows(0, 1)
    assert not mask.allows(0, 2)


def test_to_graph_reads_asymmetric_directions():
    text = (
        '{"kind": "asymmetric", "n": 3, "complete": false, '
        '"edges": [{"i": 3, "j": 1, "w": 4}]}'
    )
    graph, _ = docio.to_graph(docio.parse(text))
    assert graph.arc(2, 0) == 4
    assert graph.arc(0, 2) == -4


def test_from_graph_emits_the_positive_direction():
    g = AsymGraph.from_arcs(3, {(0, 1): -5, (0, 2): 0, (1, 2): 3})
    doc = docio.from_graph(g)
    assert [(r.i, r.j, r.w) for r in doc.edges] == [
        (2, 1, Fraction(5)),
        (1, 3, Fraction(0)),
        (2, 3, Fraction(3)),
    ]


def test_from_graph_interleaves_general_directions(general_pentagon):
    doc = docio.from_graph(general_pentagon)
    assert (doc.edges[0].i, doc.edges[0].j) == (1, 2)
    assert (doc.edges[1].i, doc.edges[1].j) == (2, 1)
    assert len(doc.edges) == 20


def test_from_graph_checks_the_mask_size(sym_quad):
    with pytest.raises(DocumentError):
        docio.from_graph(sym_quad, AdmissibilityMask.complete(5))


def test_serialize_weights_as_ints_or_literal_strings():
    doc = docio.GraphDocument(
        kind="symmetric",
        n=3,
        complete=True,
        edges=(
            docio.EdgeRecord(1, 2, Fraction(4)),
            docio.EdgeRecord(1, 3, Fraction(-9, 2)),
            docio.EdgeRecord(2, 3, Fraction(0)),
        ),
    )
    text = docio.serialize(doc)
    assert '"w": 4' in text
    assert '"w": "-9/2"' in text
    assert text.endswith("\n")
    assert docio.parse(text) == doc


def test_document_validation():
    with pytest.raises(DocumentError):
        docio.GraphDocument(kind="mixed", n=3, complete=True, edges=())
    with pytest.raises(DocumentError):
        docio.GraphDocument(kind="symmetric", n=2, complete=True, edges=())


def test_random_documents_round_trip():
    rng = random.Random(20210)
    kinds = ("asymmetric", "symmetric", "general")
    for trial in range(300):
        kind = kinds[trial % 3]
        n = rng.randrange(3, 8)
        graph = verify.random_graph(kind, n, rng)
        text = docio.serialize(docio.from_graph(graph))
        back, mask = docio.to_graph(docio.parse(text))
        assert back == graph
        assert mask.is_complete
        assert docio.serialize(docio.parse(text)) == text


def test_masked_documents_round_trip():
    rng = random.Random(555)
    for trial in range(100):
        n = rng.randrange(4, 8)
        graph = verify.random_graph("symmetric", n, rng)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        mask = AdmissibilityMask.from_forbidden(n, rng.sample(pairs, 2))
        doc = docio.from_graph(graph, mask)
        assert not doc.complete
        back, back_mask = docio.to_graph(docio.parse(docio.serialize(doc)))
        assert back_mask == mask
        for i, j in mask.allowed:
            assert back.edge(i, j) == graph.edge(i, j)
        for i, j in mask.forbidden():
            assert back.edge(i, j) == 0
