"""Shared fixtures: the packaged example documents, loaded as graphs."""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

import pytest

from graph_essence import docio
from graph_essence.core import four_cycle

DOCUMENT_NAMES = (
    "asym_triangle.json",
    "asym_pentagon.json",
    "asym_hexagon.json",
    "asym_hexagon_partial.json",
    "sym_quad.json",
    "sym_pentagon.json",
    "sym_hexagon.json",
    "sym_hexagon_partial.json",
    "general_pentagon.json",
)


def document_text(name: str) -> str:
    return resources.files("graph_essence.data").joinpath(name).read_text()


def document_path(name: str) -> str:
    return str(resources.files("graph_essence.data").joinpath(name))


def document_graph(name: str):
    """Return (graph, mask) for a packaged document."""
    return docio.to_graph(docio.parse(document_text(name)))


def family_graph(x1, x2, y1, y2, z1, z2):
    """Six-vertex symmetric cyclic graph with three dominant negative edges.

    Built from six four-cycle terms; the pairs {1,2}, {3,4}, {5,6} carry
    the negative sums while the twelve cross edges carry one parameter each.
    """
    terms = (
        (x1, (0, 1, 4, 5)),
        (x2, (0, 1, 5, 4)),
        (y1, (0, 1, 2, 3)),
        (y2, (0, 1, 3, 2)),
        (z1, (2, 3, 4, 5)),
        (z2, (2, 3, 5, 4)),
    )
    total = None
    for coeff, (a, b, c, e) in terms:
        term = four_cycle(6, a, b, c, e).scale(-Fraction(coeff))
        total = term if total is None else total + term
    return total


@pytest.fixture
def asym_triangle():
    return document_graph("asym_triangle.json")[0]


@pytest.fixture
def asym_pentagon():
    return document_graph("asym_pentagon.json")[0]


@pytest.fixture
def asym_hexagon():
    return document_graph("asym_hexagon.json")[0]


@pytest.fixture
def asym_hexagon_partial():
    return document_graph("asym_hexagon_partial.json")


@pytest.fixture
def sym_quad():
    return document_graph("sym_quad.json")[0]


@pytest.fixture
def sym_pentagon():
    return document_graph("sym_pentagon.json")[0]


@pytest.fixture
def sym_hexagon():
    return document_graph("sym_hexagon.json")[0]


@pytest.fixture
def sym_hexagon_partial():
    return document_graph("sym_hexagon_partial.json")


@pytest.fixture
def general_pentagon():
    return document_graph("general_pentagon.json")[0]
