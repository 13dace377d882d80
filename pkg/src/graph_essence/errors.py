"""Exception hierarchy shared by the whole package.

Every error raised on purpose derives from GraphEssenceError so callers can
catch the library as a unit.  The CLI maps each subclass to a fixed exit code
(see cli.EXIT_CODES).
"""

from __future__ import annotations

__all__ = [
    "GraphEssenceError",
    "DocumentError",
    "StructureError",
    "DomainError",
    "AdmissibilityError",
    "InfeasibleError",
    "CapacityError",
    "InvariantError",
]


class GraphEssenceError(Exception):
    """Base class for all errors raised by graph_essence."""


class DocumentError(GraphEssenceError):
    """A graph document could not be parsed or fails document validation."""


class StructureError(GraphEssenceError):
    """Objects of incompatible size or kind were combined, or a graph was
    constructed from malformed data."""


class DomainError(GraphEssenceError):
    """An argument violates an operation's precondition (wrong graph class,
    vertex out of range, path of the wrong shape, and so on)."""


class AdmissibilityError(DomainError):
    """A path or search touched a pair forbidden by an admissibility mask."""


class InfeasibleError(GraphEssenceError):
    """No circuit of the requested shape exists under the given mask."""


class CapacityError(GraphEssenceError):
    """An exhaustive search was asked to enumerate beyond the configured
    vertex-count guard."""


class InvariantError(GraphEssenceError):
    """A verification run found a graph violating a library invariant."""
