"""Circuit search: exhaustive optimum, greedy walk, sorted-arc heuristic."""

from __future__ import annotations

import pytest

from graph_essence import asym, general, search, sym
from graph_essence.core import (
    AdmissibilityMask,
    AsymGraph,
    Path,
    SymGraph,
    four_cycle,
    path_length,
)
from graph_essence.errors import CapacityError, DomainError, InfeasibleError
from graph_essence.search import SearchSpec

from conftest import family_graph


def test_search_spec_validation():
    with pytest.raises(DomainError):
        SearchSpec("best")
    with pytest.raises(DomainError):
        SearchSpec("shortest", mode="tour")
    with pytest.raises(DomainError):
        SearchSpec("shortest", subset=(0, 1, 2))
    with pytest.raises(DomainError):
        SearchSpec("shortest", mode="closedOverSubset")
    with pytest.raises(DomainError):
        SearchSpec("shortest", mode="closedOverSubset", subset=(0, 1))
    with pytest.raises(DomainError):
        SearchSpec("shortest", mode="closedOverSubset", subset=(0, 1, 1))


def test_exhaustive_longest_on_the_cyclic_pentagon(asym_pentagon):
    d = asym.decompose(asym_pentagon)
    result = search.exhaustive_optimum(d.cyclic, SearchSpec("longest"))
    assert result.path == Path((0, 3, 1, 4, 2), closed=True)
    assert result.length == 11
    assert result.optimal
    reverse = result.path.reverse()
    assert reverse.vertices == (0, 2, 4, 1, 3)
    assert path_length(d.cyclic, reverse) == -11


def test_exhaustive_tie_break_is_lexicographic():
    result = search.exhaustive_optimum(AsymGraph.zero(4), SearchSpec("shortest"))
    assert result.path == Path((0, 1, 2, 3), closed=True)
    assert result.length == 0
    sym_result = search.exhaustive_optimum(SymGraph.zero(4), SearchSpec("shortest"))
    assert sym_result.path == Path((0, 1, 2, 3), closed=True)


def test_symmetric_search_dedupes_reversed_circuits(sym_pentagon):
    d = sym.decompose(sym_pentagon)
    result = search.exhaustive_optimum(d.cyclic, SearchSpec("shortest"))
    assert result.path == Path((0, 1, 3, 4, 2), closed=True)
    assert result.path.vertices[1] < result.path.vertices[-1]
    assert result.length == -36


def test_exhaustive_on_the_general_reduced_graph(general_pentagon):
    gd = general.decompose(general_pentagon)
    result = search.exhaustive_optimum(gd.reduced, SearchSpec("shortest"))
    assert result.path == Path((0, 1, 3, 2, 4), closed=True)
    assert result.length == -12


def test_subset_search(sym_hexagon):
    d = sym.decompose(sym_hexagon)
    spec = SearchSpec("shortest", mode="closedOverSubset", subset=(0, 1, 3, 4))
    result = search.exhaustive_optimum(d.cyclic, spec)
    assert result.path == Path((0, 3, 1, 4), closed=True)
    assert result.length == -8


def test_subset_vertices_must_exist(sym_quad):
    spec = SearchSpec("shortest", mode="closedOverSubset", subset=(0, 1, 9))
    with pytest.raises(DomainError):
        search.exhaustive_optimum(sym_quad, spec)


def test_masked_exhaustive_longest(asym_hexagon_partial):
    graph, mask = asym_hexagon_partial
    d = asym.decompose(graph)
    result = search.exhaustive_optimum(d.cyclic, SearchSpec("longest"), mask=mask)
    assert result.path == Path((0, 1, 3, 5, 4, 2), closed=True)
    assert result.length == 26
    assert path_length(graph, result.path, mask=mask) == 26


def test_masked_exhaustive_can_be_infeasible():
    mask = AdmissibilityMask(4, frozenset({(0, 1), (1, 2), (0, 2), (0, 3)}))
    with pytest.raises(InfeasibleError):
        search.exhaustive_optimum(SymGraph.zero(4), SearchSpec("shortest"), mask=mask)


def test_capacity_guard(sym_pentagon, monkeypatch):
    d = sym.decompose(sym_pentagon)
    monkeypatch.setenv(search.MAX_N_ENV_VAR, "4")
    with pytest.raises(CapacityError):
        search.exhaustive_optimum(d.cyclic, SearchSpec("shortest"))
    monkeypatch.setenv(search.MAX_N_ENV_VAR, "5")
    assert search.exhaustive_optimum(d.cyclic, SearchSpec("shortest")).length == -36
    monkeypatch.setenv(search.MAX_N_ENV_VAR, "zippy")
    with pytest.raises(DomainError):
        search.exhaustive_optimum(d.cyclic, SearchSpec("shortest"))
    monkeypatch.delenv(search.MAX_N_ENV_VAR, raising=False)


def test_capacity_argument_overrides_the_default(sym_pentagon):
    d = sym.decompose(sym_pentagon)
    with pytest.raises(CapacityError):
        search.exhaustive_optimum(d.cyclic, SearchSpec("shortest"), max_vertices=4)
    result = search.exhaustive_optimum(d.cyclic, SearchSpec("shortest"), max_vertices=5)
    assert result.length == -36
    assert search.DEFAULT_MAX_VERTICES == 10
    with pytest.raises(CapacityError):
        search.exhaustive_optimum(SymGraph.zero(11), SearchSpec("shortest"))


def test_greedy_longest_pentagon(asym_pentagon):
    result = search.greedy_neighbor(asym_pentagon, "longest", 0)
    assert result.path == Path((0, 3, 4, 2, 1), closed=True)
    assert result.length == 8
    assert not result.optimal


def test_greedy_longest_on_the_cyclic_hexagon(asym_hexagon):
    d = asym.decompose(asym_hexagon)
    result = search.greedy_neighbor(d.cyclic, "longest", 2)
    assert result.path == Path((2, 1, 3, 0, 5, 4), closed=True)
    assert result.length == 20


def test_greedy_ties_go_to_the_lowest_vertex():
    g = SymGraph.from_edges(
        4, {(0, 1): 1, (0, 2): 1, (0, 3): 5, (1, 2): 5, (1, 3): 1, (2, 3): 1}
    )
    result = search.greedy_neighbor(g, "shortest", 0)
    assert result.path.vertices == (0, 1, 3, 2)
    assert result.length == 4


def test_greedy_validates_arguments(sym_quad):
    with pytest.raises(DomainError):
        search.greedy_neighbor(sym_quad, "best", 0)
    with pytest.raises(DomainError):
        search.greedy_neighbor(sym_quad, "shortest", 9)


def test_greedy_fails_loudly_under_a_tight_mask():
    mask = AdmissibilityMask(4, frozenset({(0, 1), (1, 2), (2, 3)}))
    g = SymGraph.zero(4)
    with pytest.raises(InfeasibleError):
        search.greedy_neighbor(g, "shortest", 0, mask=mask)
    with pytest.raises(InfeasibleError):
        search.greedy_neighbor(g, "shortest", 1, mask=mask)


def test_ascending_edges_order(sym_hexagon):
    d = sym.decompose(sym_hexagon)
    order = search.ascending_edges(d.cyclic)
    assert order[:7] == ((1, 3), (0, 4), (1, 4), (0, 5), (2, 3), (1, 5), (2, 5))
    assert d.cyclic.edge(2, 5) == 0
    assert len(order) == 15


def test_hamiltonian_in_edge_set():
    square = [(0, 1), (1, 2), (2, 3), (0, 3)]
    assert search.hamiltonian_in_edge_set(4, square) == Path((0, 1, 2, 3), closed=True)
    assert search.hamiltonian_in_edge_set(4, square[:3]) is None
    with pytest.raises(DomainError):
        search.hamiltonian_in_edge_set(2, [(0, 1)])
    with pytest.raises(DomainError):
        search.hamiltonian_in_edge_set(4, [(0, 9)])


def test_sorted_arc_search_on_the_hexagon(sym_hexagon):
    d = sym.decompose(sym_hexagon)
    order = search.ascending_edges(d.cyclic)
    assert search.hamiltonian_in_edge_set(6, order[:6]) is None
    assert search.hamiltonian_in_edge_set(6, order[:7]) is not None
    result = search.sorted_arc_search(d.cyclic)
    assert result.path == Path((0, 4, 1, 3, 2, 5), closed=True)
    assert result.length == -11
    assert not result.optimal


def test_sorted_arc_search_is_a_heuristic(sym_hexagon_partial):
    graph, mask = sym_hexagon_partial
    d = sym.decompose(graph)
    result = search.sorted_arc_search(d.cyclic, mask=mask)
    assert result.path == Path((0, 2, 1, 3, 5, 4), closed=True)
    assert result.length == -2
    exact = search.exhaustive_optimum(d.cyclic, SearchSpec("shortest"), mask=mask)
    assert exact.path == Path((0, 2, 1, 5, 3, 4), closed=True)
    assert exact.length == -3
    assert result.length > exact.length


def test_sorted_arc_search_validates_its_input(sym_hexagon):
    with pytest.raises(DomainError):
        search.sorted_arc_search(sym_hexagon)


def test_sorted_arc_search_can_be_infeasible():
    g = four_cycle(4, 0, 1, 2, 3)
    mask = AdmissibilityMask(4, frozenset({(0, 1), (1, 2), (0, 2), (0, 3)}))
    with pytest.raises(InfeasibleError):
        search.sorted_arc_search(g, mask=mask)


def test_family_shortest_can_skip_a_negative_edge():
    g = family_graph(1, 1, 8, 9, 1, 1)
    best = search.exhaustive_optimum(g, SearchSpec("shortest"))
    assert best.length == -34
    assert best.path == Path((0, 1, 4, 2, 3, 5), closed=True)
    used = {frozenset(arc) for arc in best.path.arcs()}
    assert frozenset({4, 5}) not in used
    assert g.edge(4, 5) == -4
