"""Decomposition of symmetric graphs.

A SymGraph d is closed-path independent (cpi) when every closed path over
every vertex subset has a length that depends only on which vertices are
visited and how often, never on the visiting order.  That holds exactly
when there are vertex weights omega with

    d(j, k) == omega(j) + omega(k)   for every pair,

so a cpi graph is a "star sum" graph.  Every SymGraph splits uniquely as

    g = cpi + cyclic

where the cyclic remainder has all vertex sums zero.  Two scalars drive
everything:

    S(j)  = sum_k d(j, k)                 per-vertex sum
    T     = (1/(n-1)) * sum_j S(j)        average Hamiltonian circuit length

and omega(j) = (S(j) - T/2) / (n - 2).  Any Hamiltonian circuit's length in
g is T plus its length in the cyclic part, which is why circuit questions
are answered on the cyclic part alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import (
    ZERO,
    AdmissibilityMask,
    Path,
    SymGraph,
    Weight,
    WeightLike,
    as_weight,
    four_cycle,
    path_length,
)
from .errors import DomainError, InvariantError, StructureError

__all__ = [
    "SymDecomposition",
    "FourCycleExpansion",
    "QuadParams",
    "QuadRegion",
    "vertex_sums",
    "average_hamiltonian_length",
    "omega",
    "cpi_from_omega",
    "decompose",
    "is_cpi",
    "is_cyclic",
    "hamiltonian_length_via",
    "subset_path_length_via",
    "four_cycle_expansion",
    "hamiltonian_lower_bound",
    "cpi_triangle_inequality",
    "quad_params",
    "quad_region_predicates",
    "complete_incomplete",
]


def vertex_sums(g: SymGraph) -> tuple[Weight, ...]:
    """S(j) = sum over k of d(j, k)."""
    return tuple(
        sum((g.edge(j, k) for k in range(g.n) if k != j), ZERO) for j in range(g.n)
    )


def average_hamiltonian_length(g: SymGraph) -> Weight:
    """T, the mean length of all Hamiltonian circuits of g.

    Equals sum_j S(j) / (n - 1): every edge lies on the same share of
    circuits, so the mean needs no enumeration.
    """
    return sum(vertex_sums(g), ZERO) / (g.n - 1)


def omega(g: SymGraph) -> tuple[Weight, ...]:
    """The vertex weights of the cpi component.

    omega(j) = (S(j) - T/2) / (n - 2).  They satisfy T == 2 * sum omega.
    """
    sums = vertex_sums(g)
    total = sum(sums, ZERO) / (g.n - 1)
    return tuple((s - total / 2) / (g.n - 2) for s in sums)


def cpi_from_omega(w: Sequence[WeightLike]) -> SymGraph:
    """The cpi graph with edge {i, j} = w(i) + w(j)."""
    vals = [as_weight(x) for x in w]
    n = len(vals)
    edges = {(i, j): vals[i] + vals[j] for i in range(n) for j in range(i + 1, n)}
    return SymGraph.from_edges(n, edges)


@dataclass(frozen=True)
class SymDecomposition:
    """Result of decompose(): original == cpi + cyclic, exactly."""

    original: SymGraph
    cpi: SymGraph
    cyclic: SymGraph
    sums: tuple[Weight, ...]
    total: Weight
    omega: tuple[Weight, ...]


def decompose(g: SymGraph) -> SymDecomposition:
    """Split g into its cpi and cyclic components.

    The cyclic component has every vertex sum equal to zero and is
    orthogonal to the cpi component under the pair inner product.
    """
    sums = vertex_sums(g)
    total = sum(sums, ZERO) / (g.n - 1)
    w = tuple((s - total / 2) / (g.n - 2) for s in sums)
    cpi = cpi_from_omega(w)
    return SymDecomposition(
        original=g, cpi=cpi, cyclic=g - cpi, sums=sums, total=total, omega=w
    )


def is_cpi(g: SymGraph) -> bool:
    """True iff g is closed-path independent, i.e. d(j, k) == omega(j) + omega(k)."""
    w = omega(g)
    return all(val == w[i] + w[j] for (i, j), val in g.pairs())


def is_cyclic(g: SymGraph) -> bool:
    """True iff every vertex sum is zero."""
    return all(s == 0 for s in vertex_sums(g))


def hamiltonian_length_via(
    d: SymDecomposition, path: Path, mask: AdmissibilityMask | None = None
) -> Weight:
    """Length of a Hamiltonian circuit computed as T + cyclic length.

    Equals path_length(d.original, path).  Raises DomainError if the path
    is not a closed tour of all n vertices.
    """
    if not path.is_hamiltonian(d.original.n):
        raise DomainError("hamiltonian_length_via needs a closed tour of all vertices")
    return d.total + path_length(d.cyclic, path, mask=mask)


def subset_path_length_via(
    d: SymDecomposition, path: Path, mask: AdmissibilityMask | None = None
) -> Weight:
    """Length of any walk computed from the cyclic part and omega.

    The cpi contribution of a walk counts omega per arc endpoint: a closed
    walk picks up 2*omega(v) for every occurrence of v, an open walk picks
    up omega once at each end and twice per interior occurrence.  Equals
    path_length(d.original, path) exactly.
    """
    body = path_length(d.cyclic, path, mask=mask)
    w = d.omega
    vs = path.vertices
    if path.closed:
        if len(vs) == 1:
            return body
        return body + 2 * sum((w[v] for v in vs), ZERO)
    ends = w[vs[0]] + w[vs[-1]]
    interior = 2 * sum((w[v] for v in vs[1:-1]), ZERO)
    return body + ends + interior


@dataclass(frozen=True)
class FourCycleExpansion:
    """A cyclic SymGraph written over alternating four-cycles through the
    pair {0, 1} with pivot vertex 2.

    The expansion is

        g == sum a[(j, k)] * four_cycle(n, 0, 1, j, k)    for 2 <= j < k
           + sum b[s]      * four_cycle(n, 0, 1, s, 2)    for 3 <= s

    with n*(n-3)/2 coefficients in total (counting both families), matching
    the dimension of the cyclic subspace.
    """

    n: int
    a_coeffs: tuple[tuple[tuple[int, int], Weight], ...]
    b_coeffs: tuple[tuple[int, Weight], ...]

    def a_dict(self) -> dict[tuple[int, int], Weight]:
        return dict(self.a_coeffs)

    def b_dict(self) -> dict[int, Weight]:
        return dict(self.b_coeffs)

    def to_graph(self) -> SymGraph:
        """Re-sum the expansion; equals the graph it was taken from."""
        total = SymGraph.zero(self.n)
        for (j, k), c in self.a_coeffs:
            if c != 0:
                total = total + four_cycle(self.n, 0, 1, j, k).scale(c)
        for s, c in self.b_coeffs:
            if c != 0:
                total = total + four_cycle(self.n, 0, 1, s, 2).scale(c)
        return total


def four_cycle_expansion(g: SymGraph) -> FourCycleExpansion:
    """Expand a cyclic graph over the anchored four-cycle family.

    Stage one reads off the coefficients of pairs away from the anchor pair
    {0, 1}; stage two clears the remaining arcs at vertices 1 and 2.  The
    final residual vanishes identically for cyclic input; a nonzero
    residual would mean the input was not cyclic and raises DomainError
    before it can happen.  Round-trip through to_graph() is exact.
    """
    if not is_cyclic(g):
        raise DomainError("four-cycle expansion needs a cyclic graph")
    n = g.n
    residual = g
    a_entries: dict[tuple[int, int], Weight] = {}
    for j in range(3, n):
        for k in range(j + 1, n):
            c = residual.edge(j, k)
            a_entries[(j, k)] = c
            if c != 0:
                residual = residual - four_cycle(n, 0, 1, j, k).scale(c)
    b_entries: dict[int, Weight] = {}
    for s in range(n - 1, 2, -1):
        cb = -residual.edge(1, s)
        b_entries[s] = cb
        if cb != 0:
            residual = residual - four_cycle(n, 0, 1, s, 2).scale(cb)
        ca = residual.edge(2, s)
        a_entries[(2, s)] = ca
        if ca != 0:
            residual = residual - four_cycle(n, 0, 1, 2, s).scale(ca)
    if not residual.is_zero():
        raise InvariantError("four-cycle expansion left a nonzero residual")
    a_sorted = tuple(sorted(a_entries.items()))
    b_sorted = tuple(sorted(b_entries.items()))
    return FourCycleExpansion(n=n, a_coeffs=a_sorted, b_coeffs=b_sorted)


def hamiltonian_lower_bound(d: SymDecomposition) -> tuple[Weight, Weight]:
    """Bounds (lower, upper) on the shortest Hamiltonian circuit length.

    Any circuit uses exactly n distinct pairs, so its cyclic length is at
    least the sum of the n smallest cyclic weights; adding T gives the
    lower bound.  The upper bound is T itself, the circuit average.  Both
    bounds are exact rationals; the lower bound is tight whenever the n
    smallest cyclic edges happen to form a circuit.
    """
    g = d.cyclic
    smallest = sorted(g.coords())[: g.n]
    lower = d.total + sum(smallest, ZERO)
    return lower, d.total


def cpi_triangle_inequality(d: SymDecomposition) -> bool:
    """True iff the cpi component satisfies the triangle inequality.

    cpi(i, k) <= cpi(i, j) + cpi(j, k) reduces to 0 <= 2*omega(j), so the
    check is min omega >= 0.
    """
    return min(d.omega) >= 0


@dataclass(frozen=True)
class QuadParams:
    """The two parameters of a cyclic 4-vertex SymGraph.

    With v = d(0, 1) and u = -d(0, 2), zero vertex sums force
    d(2, 3) = v, d(1, 3) = -u, d(0, 3) = d(1, 2) = u - v, and

        g == u * four_cycle(4, 0, 3, 1, 2) + v * four_cycle(4, 0, 1, 2, 3).
    """

    u: Weight
    v: Weight


@dataclass(frozen=True)
class QuadRegion:
    """Placement of a 4-vertex graph relative to the two circuit regions."""

    no_diagonal_crossing: bool
    triangle_inequality: bool


def quad_params(g: SymGraph) -> QuadParams:
    """Read (u, v) off a cyclic 4-vertex graph.

    Raises DomainError unless n == 4 and the graph is cyclic.
    """
    if g.n != 4:
        raise DomainError(f"quad parameters need n=4, got n={g.n}")
    if not is_cyclic(g):
        raise DomainError("quad parameters need a cyclic graph")
    return QuadParams(u=-g.edge(0, 2), v=g.edge(0, 1))


def quad_region_predicates(
    params: QuadParams, w: Sequence[WeightLike]
) -> QuadRegion:
    """Evaluate the two region tests for a 4-vertex graph.

    ``no_diagonal_crossing`` is true when every shortest Hamiltonian circuit
    of the cyclic part is strictly the perimeter 0-1-2-3, i.e. avoids the
    diagonal pairs {0, 2} and {1, 3}: the perimeter scores 2u against
    2(v - u) and -2v for the two diagonal circuits, giving the strict
    conditions -u > v and -u > u - v.  Note the region is open: on its
    boundary some diagonal circuit ties the perimeter.

    ``triangle_inequality`` is true when the full graph with cpi weights
    from ``w`` satisfies the triangle inequality, which reduces to
    min w >= max(-u, v, u - v).
    """
    u, v = params.u, params.v
    vals = [as_weight(x) for x in w]
    if len(vals) != 4:
        raise DomainError(f"need 4 vertex weights, got {len(vals)}")
    ndc = (-u > v) and (-u > u - v)
    tri = min(vals) >= max(-u, v, u - v)
    return QuadRegion(no_diagonal_crossing=ndc, triangle_inequality=tri)


def complete_incomplete(
    edges: Mapping[tuple[int, int], WeightLike],
    mask: AdmissibilityMask,
    fill: WeightLike = 0,
) -> SymGraph:
    """Extend weights given on the mask's allowed pairs to a complete graph.

    Every allowed pair must appear exactly once; forbidden pairs must not
    appear and receive ``fill``.  Lengths of admissible paths in the
    incomplete graph equal their transfer values in the completed
    decomposition, whatever the fill.
    """
    seen: set[tuple[int, int]] = set()
    norm: dict[tuple[int, int], Weight] = {}
    for (i, j), w in edges.items():
        pair = (min(i, j), max(i, j))
        if not mask.allows(i, j):
            raise StructureError(f"pair ({i}, {j}) is outside the mask")
        if pair in seen:
            raise StructureError(f"pair ({i}, {j}) given twice")
        seen.add(pair)
        norm[pair] = as_weight(w)
    missing = [p for p in mask.allowed if p not in seen]
    if missing:
        raise StructureError(f"allowed pairs missing weights: {sorted(missing)}")
    return SymGraph.from_edges(mask.n, norm, default=fill)
