"""Circuit search on graphs, exact and heuristic.

All searches work on whichever graph they are handed.  The intended use is
to hand them the cyclic (or reduced) component of a decomposition: circuit
ranking is identical there and the numbers are smaller, and for symmetric
graphs the sorted-arc heuristic additionally relies on the zero vertex sums
that only the cyclic component has.

Determinism contract: every search breaks ties the same way on every run.
Exhaustive searches return the optimum whose vertex sequence is
lexicographically smallest once rotated to start at the smallest involved
vertex; on symmetric graphs, of the two traversal directions the one whose
second vertex is smaller is kept.  Greedy ties go to the lowest vertex id.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import sym as _sym
from .core import (
    AdmissibilityMask,
    AsymGraph,
    GeneralGraph,
    Path,
    SymGraph,
    Weight,
    path_length,
)
from .errors import CapacityError, DomainError, InfeasibleError

__all__ = [
    "SearchSpec",
    "SearchResult",
    "MAX_N_ENV_VAR",
    "DEFAULT_MAX_VERTICES",
    "exhaustive_optimum",
    "greedy_neighbor",
    "sorted_arc_search",
    "ascending_edges",
    "hamiltonian_in_edge_set",
]

Graph = AsymGraph | SymGraph | GeneralGraph

MAX_N_ENV_VAR = "GRAPH_ESSENCE_MAX_N"
DEFAULT_MAX_VERTICES = 10

OBJECTIVES = ("shortest", "longest")
MODES = ("hamiltonianCircuit", "closedOverSubset")


@dataclass(frozen=True)
class SearchSpec:
    """What to look for: objective plus circuit shape.

    ``mode`` "hamiltonianCircuit" tours every vertex (subset must be None);
    "closedOverSubset" tours exactly the given subset of at least three
    distinct vertices.
    """

    objective: str
    mode: str = "hamiltonianCircuit"
    subset: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.objective not in OBJECTIVES:
            raise DomainError(f"objective must be one of {OBJECTIVES}")
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}")
        if self.mode == "hamiltonianCircuit" and self.subset is not None:
            raise DomainError("hamiltonianCircuit mode takes no subset")
        if self.mode == "closedOverSubset":
            if self.subset is None:
                raise DomainError("closedOverSubset mode needs a subset")
            subset = tuple(self.subset)
            if len(set(subset)) != len(subset):
                raise DomainError("subset vertices must be distinct")
            if len(subset) < 3:
                raise DomainError("subset circuits need at least 3 vertices")
            object.__setattr__(self, "subset", subset)


@dataclass(frozen=True)
class SearchResult:
    """A circuit, its length in the searched graph, and whether the search
    guarantees optimality."""

    path: Path
    length: Weight
    optimal: bool


def _vertex_limit(max_vertices: int | None) -> int:
    if max_vertices is not None:
        return max_vertices
    raw = os.environ.get(MAX_N_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise DomainError(
            f"{MAX_N_ENV_VAR} must be an integer, got {raw!r}"
        ) from None


def exhaustive_optimum(
    g: Graph,
    spec: SearchSpec,
    mask: AdmissibilityMask | None = None,
    max_vertices: int | None = None,
) -> SearchResult:
    """Enumerate every closed tour of the requested shape and return the
    optimum.

    The enumeration is guarded: more involved vertices than the limit
    (``max_vertices`` argument, else the GRAPH_ESSENCE_MAX_N environment
    variable, else 10) raises CapacityError.  If a mask rules out every
    tour, raises InfeasibleError.  The returned result has optimal=True
    and follows the module's tie-break contract.
    """
    if spec.mode == "closedOverSubset":
        vertices = sorted(spec.subset)  # type: ignore[arg-type]
        for v in vertices:
            if not 0 <= v < g.n:
                raise DomainError(f"subset vertex {v} out of range for n={g.n}")
    else:
        vertices = list(range(g.n))
    limit = _vertex_limit(max_vertices)
    if len(vertices) > limit:
        raise CapacityError(
            f"{len(vertices)} vertices exceed the exhaustive limit {limit}; "
            f"raise {MAX_N_ENV_VAR} or pass max_vertices to override"
        )
    symmetric = isinstance(g, SymGraph)
    anchor = vertices[0]
    rest = vertices[1:]
    want_max = spec.objective == "longest"
    best: tuple[Weight, Path] | None = None
    for perm in itertools.permutations(rest):
        if symmetric and len(perm) > 1 and perm[0] > perm[-1]:
            continue  # same circuit as its reversal
        seq = (anchor,) + perm
        if mask is not None and not _tour_admissible(seq, mask):
            continue
        candidate = Path(seq, closed=True)
        length = path_length(g, candidate, mask=None)
        if best is None or (length > best[0] if want_max else length < best[0]):
            best = (length, candidate)
    if best is None:
        raise InfeasibleError("no admissible circuit of the requested shape")
    return SearchResult(path=best[1], length=best[0], optimal=True)


def _tour_admissible(seq: Sequence[int], mask: AdmissibilityMask) -> bool:
    m = len(seq)
    for idx in range(m):
        a, b = seq[idx], seq[(idx + 1) % m]
        if not mask.allows(a, b):
            return False
    return True


def greedy_neighbor(
    g: Graph,
    objective: str,
    start: int,
    mask: AdmissibilityMask | None = None,
) -> SearchResult:
    """Grow a Hamiltonian circuit by always taking the extreme next arc.

    From the current vertex, moves to the unvisited vertex with the
    smallest (objective "shortest") or largest ("longest") arc weight,
    lowest vertex id on ties, then closes the circuit back to ``start``.
    Under a mask the walk can strand or fail to close; both raise
    InfeasibleError.  The result carries optimal=False: the greedy circuit
    routinely misses the optimum.
    """
    if objective not in OBJECTIVES:
        raise DomainError(f"objective must be one of {OBJECTIVES}")
    if not 0 <= start < g.n:
        raise DomainError(f"start vertex {start} out of range for n={g.n}")
    want_max = objective == "longest"
    order = [start]
    visited = {start}
    current = start
    while len(order) < g.n:
        chosen = None
        chosen_w: Weight | None = None
        for v in range(g.n):
            if v in visited:
                continue
            if mask is not None and not mask.allows(current, v):
                continue
            w = g.arc(current, v)
            if chosen_w is None or (w > chosen_w if want_max else w < chosen_w):
                chosen, chosen_w = v, w
        if chosen is None:
            raise InfeasibleError(
                f"greedy walk stranded at vertex {current} with "
                f"{g.n - len(order)} vertices left"
            )
        order.append(chosen)
        visited.add(chosen)
        current = chosen
    if mask is not None and not mask.allows(current, start):
        raise InfeasibleError(
            f"greedy walk cannot close the circuit from {current} to {start}"
        )
    circuit = Path(tuple(order), closed=True)
    return SearchResult(
        path=circuit, length=path_length(g, circuit), optimal=False
    )


def ascending_edges(
    g: SymGraph, mask: AdmissibilityMask | None = None
) -> tuple[tuple[int, int], ...]:
    """Allowed pairs sorted by ascending weight, ties toward the
    lexicographically larger pair.  This is the marking order used by
    sorted_arc_search."""
    pairs = [
        (i, j)
        for (i, j), _ in g.pairs()
        if mask is None or mask.allows(i, j)
    ]
    pairs.sort(key=lambda p: (g.edge(*p), (-p[0], -p[1])))
    return tuple(pairs)


def _circuits_in_adjacency(
    n: int, adj: dict[int, set[int]], dedupe_reverse: bool
) -> Iterator[tuple[int, ...]]:
    # Backtracking anchored at vertex 0, neighbors ascending, so circuits
    # come out in lexicographic sequence order.
    seq = [0]
    visited = [False] * n
    visited[0] = True

    def extend() -> Iterator[tuple[int, ...]]:
        if len(seq) == n:
            if 0 in adj[seq[-1]]:
                if not dedupe_reverse or seq[1] < seq[-1]:
                    yield tuple(seq)
            return
        for v in sorted(adj[seq[-1]]):
            if not visited[v]:
                visited[v] = True
                seq.append(v)
                yield from extend()
                seq.pop()
                visited[v] = False

    if 0 in adj:
        yield from extend()


def hamiltonian_in_edge_set(
    n: int, edges: Iterable[tuple[int, int]]
) -> Path | None:
    """First Hamiltonian circuit using only the given unordered pairs,
    found by lexicographic backtracking from vertex 0; None if the edge
    set has no such circuit."""
    if n < 3:
        raise DomainError(f"need at least 3 vertices, got n={n}")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for (i, j) in edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise DomainError(f"bad edge ({i}, {j}) for n={n}")
        adj[i].add(j)
        adj[j].add(i)
    for seq in _circuits_in_adjacency(n, adj, dedupe_reverse=False):
        return Path(seq, closed=True)
    return None


def sorted_arc_search(
    g: SymGraph, mask: AdmissibilityMask | None = None
) -> SearchResult:
    """Sorted-arc heuristic for short circuits on a zero-vertex-sum graph.

    Marks the n cheapest allowed pairs (ascending_edges order), then keeps
    marking one more pair until the marked set contains a Hamiltonian
    circuit, and returns the shortest circuit inside the marked set by
    exhaustive backtracking.  Zero vertex sums make early negative edges
    plentiful, which is what gives the heuristic its power; input whose
    vertex sums are not all zero raises DomainError.

    The result has optimal=False: the heuristic can terminate before the
    true optimum's edges are all marked.
    """
    if not isinstance(g, SymGraph):
        raise DomainError("sorted_arc_search needs a symmetric graph")
    if not _sym.is_cyclic(g):
        raise DomainError("sorted_arc_search needs zero vertex sums")
    n = g.n
    order = ascending_edges(g, mask)
    marked = list(order[:n])
    cursor = len(marked)
    while hamiltonian_in_edge_set(n, marked) is None:
        if cursor >= len(order):
            raise InfeasibleError(
                "no Hamiltonian circuit within the allowed pairs"
            )
        marked.append(order[cursor])
        cursor += 1
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for (i, j) in marked:
        adj[i].add(j)
        adj[j].add(i)
    best: tuple[Weight, Path] | None = None
    for seq in _circuits_in_adjacency(n, adj, dedupe_reverse=True):
        candidate = Path(seq, closed=True)
        length = path_length(g, candidate)
        if best is None or length < best[0]:
            best = (length, candidate)
    assert best is not None  # the while loop guaranteed a circuit
    return SearchResult(path=best[1], length=best[0], optimal=False)
