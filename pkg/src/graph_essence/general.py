"""Decomposition of general (direction-dependent) graphs.

A GeneralGraph splits per pair into an average and an excess:

    avg{i, j}  = (d(i, j) + d(j, i)) / 2      symmetric part
    exc(i, j)  = (d(i, j) - d(j, i)) / 2      skew-symmetric part

The symmetric part decomposes as in sym.py, the skew part as in asym.py,
and the two cyclic remainders add arcwise into a single *reduced* graph.
Every Hamiltonian circuit of the original has length T + (its length in
the reduced graph), with T taken from the symmetric part, so circuit
optimization runs on the reduced graph alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import asym as _asym
from . import sym as _sym
from .core import (
    ZERO,
    AdmissibilityMask,
    AsymGraph,
    GeneralGraph,
    Path,
    SymGraph,
    Weight,
    path_length,
)
from .errors import DomainError, StructureError

__all__ = [
    "GeneralDecomposition",
    "split",
    "merge",
    "decompose",
    "hamiltonian_length_via",
    "path_length_via",
]


def split(g: GeneralGraph) -> tuple[SymGraph, AsymGraph]:
    """Split into (averages, excesses); merge() reverses exactly."""
    n = g.n
    avg = {}
    exc = {}
    for i in range(n):
        for j in range(i + 1, n):
            forward = g.arc(i, j)
            backward = g.arc(j, i)
            avg[(i, j)] = (forward + backward) / 2
            exc[(i, j)] = (forward - backward) / 2
    return SymGraph.from_edges(n, avg), AsymGraph.from_arcs(n, exc)


def merge(averages: SymGraph, excesses: AsymGraph) -> GeneralGraph:
    """Recombine a symmetric and a skew-symmetric part into one graph."""
    if averages.n != excesses.n:
        raise StructureError(
            f"size mismatch: n={averages.n} vs n={excesses.n}"
        )
    n = averages.n
    arcs = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                arcs[(i, j)] = averages.edge(i, j) + excesses.arc(i, j)
    return GeneralGraph.from_arcs(n, arcs)


@dataclass(frozen=True)
class GeneralDecomposition:
    """Both component decompositions plus their combined reduced graph."""

    original: GeneralGraph
    averages: SymGraph
    excesses: AsymGraph
    sym: _sym.SymDecomposition
    asym: _asym.AsymDecomposition
    reduced: GeneralGraph


def decompose(g: GeneralGraph) -> GeneralDecomposition:
    """Split g and decompose both parts.

    The reduced graph is the arcwise sum of the two cyclic components:
    reduced(i, j) = sym_cyclic{i, j} + asym_cyclic(i, j).
    """
    averages, excesses = split(g)
    sd = _sym.decompose(averages)
    ad = _asym.decompose(excesses)
    reduced = merge(sd.cyclic, ad.cyclic)
    return GeneralDecomposition(
        original=g,
        averages=averages,
        excesses=excesses,
        sym=sd,
        asym=ad,
        reduced=reduced,
    )


def hamiltonian_length_via(
    d: GeneralDecomposition, path: Path, mask: AdmissibilityMask | None = None
) -> Weight:
    """Length of a Hamiltonian circuit computed as T + reduced length.

    Equals path_length(d.original, path).  Raises DomainError if the path
    is not a closed tour of all n vertices.
    """
    if not path.is_hamiltonian(d.original.n):
        raise DomainError("hamiltonian_length_via needs a closed tour of all vertices")
    return d.sym.total + path_length(d.reduced, path, mask=mask)


def path_length_via(
    d: GeneralDecomposition, path: Path, mask: AdmissibilityMask | None = None
) -> Weight:
    """Length of any walk from the reduced graph and the two cpi summaries.

    Closed walks pick up 2*omega(v) per occurrence on top of the reduced
    length (the skew cpi part telescopes away); open walks additionally
    pick up s(first) - s(last) from the skew potentials.  Equals
    path_length(d.original, path) exactly.
    """
    body = path_length(d.reduced, path, mask=mask)
    w = d.sym.omega
    vs = path.vertices
    if path.closed:
        if len(vs) == 1:
            return body
        return body + 2 * sum((w[v] for v in vs), ZERO)
    ends = w[vs[0]] + w[vs[-1]]
    interior = 2 * sum((w[v] for v in vs[1:-1]), ZERO)
    s = d.asym.potentials
    return body + ends + interior + s[vs[0]] - s[vs[-1]]
