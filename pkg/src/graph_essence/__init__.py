"""graph_essence: exact decomposition of weighted complete graphs.

Every graph splits into a closed-path-independent (cpi) component, fixed by
one scalar per vertex, and a cyclic component that carries everything that
makes route order matter.  The split is exact (rational arithmetic), unique
and orthogonal, and circuit questions transfer to the cyclic component:

>>> from graph_essence import SymGraph, sym
>>> g = SymGraph.from_edges(4, {(0, 1): 17, (0, 2): 14, (0, 3): 13,
...                             (1, 2): 17, (1, 3): 12, (2, 3): 17})
>>> d = sym.decompose(g)
>>> d.total                                  # average circuit length
Fraction(60, 1)

Submodules: core (graph types and paths), asym (skew-symmetric weights),
sym (symmetric weights), general (direction-dependent weights), search
(exact and heuristic circuit search), docio (JSON documents), verify
(randomized identity checks), report (CSV/PNG rendering), cli.
"""

from __future__ import annotations

from . import asym, docio, general, search, sym, verify
from .core import (
    AdmissibilityMask,
    AsymGraph,
    GeneralGraph,
    Path,
    SymGraph,
    Weight,
    as_weight,
    cpi_basis_sym,
    exact_rank,
    four_cycle,
    inner_product,
    path_length,
    three_cycle,
)
from .errors import (
    AdmissibilityError,
    CapacityError,
    DocumentError,
    DomainError,
    GraphEssenceError,
    InfeasibleError,
    InvariantError,
    StructureError,
)
from .search import SearchResult, SearchSpec

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityMask",
    "AsymGraph",
    "GeneralGraph",
    "Path",
    "SymGraph",
    "Weight",
    "as_weight",
    "cpi_basis_sym",
    "exact_rank",
    "four_cycle",
    "inner_product",
    "path_length",
    "three_cycle",
    "SearchResult",
    "SearchSpec",
    "GraphEssenceError",
    "DocumentError",
    "StructureError",
    "DomainError",
    "AdmissibilityError",
    "InfeasibleError",
    "CapacityError",
    "InvariantError",
    "asym",
    "sym",
    "general",
    "search",
    "docio",
    "verify",
    "__version__",
]
