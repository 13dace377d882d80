"""Decomposition of skew-symmetric graphs.

An AsymGraph d is *strongly transitive* when d(i, j) + d(j, k) == d(i, k)
for all triples.  Strongly transitive graphs are exactly the graphs whose
path weights never depend on the route taken, only on the endpoints, so we
call them closed-path independent (cpi): every closed path has weight zero.

Every AsymGraph g splits uniquely as

    g = cpi + cyclic

where cpi(i, j) = s(i) - s(j) for the potential vector s, and the cyclic
remainder has all vertex potentials zero.  The split is orthogonal under
the pair inner product, and every closed path keeps its exact weight when
evaluated on the cyclic part alone.  That makes the cyclic part the right
object to search when optimizing circuits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import (
    ZERO,
    AdmissibilityMask,
    AsymGraph,
    Path,
    Weight,
    WeightLike,
    as_weight,
    path_length,
    three_cycle,
)
from .errors import DomainError, StructureError

__all__ = [
    "AsymDecomposition",
    "ThreeCycleExpansion",
    "potentials",
    "cpi_from_potentials",
    "decompose",
    "is_strongly_transitive",
    "is_cyclic",
    "three_cycle_expansion",
    "connected_path_length_via",
    "sources_and_sinks",
    "complete_incomplete",
]


def potentials(g: AsymGraph) -> tuple[Weight, ...]:
    """Vertex potentials s(j) = (1/n) * sum_k d(j, k).

    The potentials always sum to zero because the arc weights are
    skew-symmetric.
    """
    n = g.n
    out = []
    for j in range(n):
        row = sum((g.arc(j, k) for k in range(n) if k != j), ZERO)
        out.append(row / n)
    return tuple(out)


def cpi_from_potentials(s: Sequence[WeightLike]) -> AsymGraph:
    """The closed-path-independent graph with d(i, j) = s(i) - s(j).

    Any vector works; shifting every entry by a constant gives the same
    graph, and decompose() recovers s normalized to sum zero.
    """
    vals = [as_weight(x) for x in s]
    n = len(vals)
    arcs = {(i, j): vals[i] - vals[j] for i in range(n) for j in range(i + 1, n)}
    return AsymGraph.from_arcs(n, arcs)


@dataclass(frozen=True)
class AsymDecomposition:
    """Result of decompose(): original == cpi + cyclic, exactly."""

    original: AsymGraph
    cpi: AsymGraph
    cyclic: AsymGraph
    potentials: tuple[Weight, ...]


def decompose(g: AsymGraph) -> AsymDecomposition:
    """Split g into its cpi and cyclic components.

    The cpi component is cpi_from_potentials(potentials(g)); the cyclic
    component is the remainder, which has all potentials zero.  Both
    components are exact and the identity g == cpi + cyclic holds with
    no rounding.
    """
    s = potentials(g)
    cpi = cpi_from_potentials(s)
    return AsymDecomposition(original=g, cpi=cpi, cyclic=g - cpi, potentials=s)


def is_strongly_transitive(g: AsymGraph) -> bool:
    """True iff d(i, j) + d(j, k) == d(i, k) for every ordered triple."""
    n = g.n
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                if g.arc(i, j) + g.arc(j, k) != g.arc(i, k):
                    return False
    return True


def is_cyclic(g: AsymGraph) -> bool:
    """True iff every vertex potential is zero."""
    return all(v == 0 for v in potentials(g))


@dataclass(frozen=True)
class ThreeCycleExpansion:
    """A cyclic AsymGraph written as a combination of unit three-cycles
    through one anchor vertex.

    The expansion of g is  g == sum c[(j, k)] * three_cycle(n, anchor, j, k)
    over pairs j < k of non-anchor vertices.  For a cyclic graph the
    coefficient is simply c[(j, k)] = d(j, k); the non-trivial content is
    that the anchored cycles then reproduce the anchor arcs too.
    """

    n: int
    anchor: int
    coeffs: tuple[tuple[tuple[int, int], Weight], ...]

    def as_dict(self) -> dict[tuple[int, int], Weight]:
        return dict(self.coeffs)

    def nonzero(self) -> dict[tuple[int, int], Weight]:
        return {pair: w for pair, w in self.coeffs if w != 0}

    def to_graph(self) -> AsymGraph:
        """Re-sum the expansion; equals the graph it was taken from."""
        acc: dict[tuple[int, int], Weight] = {}

        def add(i: int, j: int, w: Weight) -> None:
            if i < j:
                acc[(i, j)] = acc.get((i, j), ZERO) + w
            else:
                acc[(j, i)] = acc.get((j, i), ZERO) - w

        a = self.anchor
        for (j, k), c in self.coeffs:
            add(a, j, c)
            add(j, k, c)
            add(k, a, c)
        return AsymGraph.from_arcs(self.n, acc, default=ZERO)


def three_cycle_expansion(g: AsymGraph, anchor: int = 0) -> ThreeCycleExpansion:
    """Expand a cyclic graph over the three-cycles anchored at one vertex.

    Raises DomainError if g is not cyclic (some potential nonzero) or the
    anchor is out of range.  The expansion is unique and exact; round-trip
    through ThreeCycleExpansion.to_graph() returns g.
    """
    if not 0 <= anchor < g.n:
        raise DomainError(f"anchor {anchor} out of range for n={g.n}")
    if not is_cyclic(g):
        raise DomainError("three-cycle expansion needs a cyclic graph")
    rest = [v for v in range(g.n) if v != anchor]
    coeffs = tuple(
        ((j, k), g.arc(j, k))
        for idx, j in enumerate(rest)
        for k in rest[idx + 1 :]
    )
    return ThreeCycleExpansion(n=g.n, anchor=anchor, coeffs=coeffs)


def connected_path_length_via(
    d: AsymDecomposition, path: Path, mask: AdmissibilityMask | None = None
) -> Weight:
    """Length of an open path computed from the cyclic part and potentials.

    Equals path_length(d.original, path): the cpi contribution of any open
    walk telescopes to s(first) - s(last).  Only the traversed arcs are
    checked against the mask, so the formula stays valid when the direct
    pair (first, last) is itself inadmissible.
    """
    if path.closed:
        raise DomainError("connected_path_length_via needs an open path")
    body = path_length(d.cyclic, path, mask=mask)
    return body + d.potentials[path.vertices[0]] - d.potentials[path.vertices[-1]]


def sources_and_sinks(g: AsymGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertices whose out-arcs are all strictly positive (sources) or all
    strictly negative (sinks).  A vertex with any zero arc is neither."""
    sources = []
    sinks = []
    for v in range(g.n):
        row = [g.arc(v, k) for k in range(g.n) if k != v]
        if all(w > 0 for w in row):
            sources.append(v)
        elif all(w < 0 for w in row):
            sinks.append(v)
    return tuple(sources), tuple(sinks)


def complete_incomplete(
    arcs: Mapping[tuple[int, int], WeightLike],
    mask: AdmissibilityMask,
    fill: WeightLike = 0,
) -> AsymGraph:
    """Extend weights given on the mask's allowed pairs to a complete graph.

    Every allowed pair must appear exactly once (in either direction);
    forbidden pairs must not appear and receive ``fill``.  Decomposing the
    completed graph gives exact lengths for all admissible closed paths and,
    through connected_path_length_via, for admissible open paths as well.
    """
    seen: set[tuple[int, int]] = set()
    norm: dict[tuple[int, int], Weight] = {}
    for (i, j), w in arcs.items():
        pair = (min(i, j), max(i, j))
        if not mask.allows(i, j):
            raise StructureError(f"pair ({i}, {j}) is outside the mask")
        if pair in seen:
            raise StructureError(f"pair ({i}, {j}) given twice")
        seen.add(pair)
        norm[(i, j)] = as_weight(w)
    missing = [p for p in mask.allowed if p not in seen]
    if missing:
        raise StructureError(f"allowed pairs missing weights: {sorted(missing)}")
    return AsymGraph.from_arcs(mask.n, norm, default=fill)
