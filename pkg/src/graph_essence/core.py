"""Core model: exact weights, paths, complete weighted graphs, cycle bases.

Everything in this package works on complete graphs over vertices 0..n-1
(n >= 3) with exact rational weights.  Three graph classes cover the three
weight symmetries:

* AsymGraph     -- skew-symmetric arc weights, d(j,i) == -d(i,j).  Models
                   excess costs (tolls, gradients, one-way penalties).
* SymGraph      -- symmetric edge weights, d(j,i) == d(i,j).  Models
                   distances or other direction-free costs.
* GeneralGraph  -- independent weights per ordered pair.

Weights are fractions.Fraction values so every identity in the package holds
exactly; there is no tolerance anywhere.  All graph objects are immutable and
hashable, and all operations return new objects.

Incomplete data is handled by pairing a complete graph with an
AdmissibilityMask that records which unordered pairs are genuine; path and
search functions reject masked pairs instead of using the filled-in weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import AdmissibilityError, DomainError, StructureError

__all__ = [
    "Weight",
    "WeightLike",
    "as_weight",
    "Path",
    "AsymGraph",
    "SymGraph",
    "GeneralGraph",
    "AdmissibilityMask",
    "three_cycle",
    "four_cycle",
    "cpi_basis_sym",
    "inner_product",
    "path_length",
    "exact_rank",
]

# Exact rational weight.  Fraction normalizes on construction, so equal
# weights always compare equal and hash alike.
Weight = Fraction

WeightLike = Union[Weight, int, str]

ZERO = Weight(0)
ONE = Weight(1)


def as_weight(value: WeightLike) -> Weight:
    """Coerce an int, Fraction or numeric string to an exact Weight.

    Strings may be integers ("-3"), rationals ("9/2") or exact decimals
    ("4.5"); anything else raises DomainError.  Floats are rejected on
    purpose: binary floats would smuggle rounding error into a package
    whose contract is exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not an exact weight literal: {value!r}") from exc
    raise DomainError(f"not an exact weight: {value!r} of type {type(value).__name__}")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise StructureError(f"graphs need at least 3 vertices, got n={n!r}")


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise DomainError(f"vertex {v!r} out of range for n={n}")


def _pair_index(n: int, i: int, j: int) -> int:
    # Row-major position of unordered pair (i, j), i < j, in the upper triangle.
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


@dataclass(frozen=True)
class Path:
    """A walk through vertices, open or closed.

    ``vertices`` lists the visited vertices in order.  Vertices may repeat
    (walks are allowed to revisit), but two consecutive entries must differ
    because there are no self-loops.  A closed path implicitly returns from
    the last vertex to the first, so the first vertex is not repeated at the
    end; a closed path on a single vertex is the empty circuit of length 0.
    """

    vertices: tuple[int, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise DomainError("a path needs at least one vertex")
        for v in vs:
            if not isinstance(v, int) or v < 0:
                raise DomainError(f"bad vertex id {v!r} in path")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise DomainError(f"consecutive repeat of vertex {a} in path")
        if self.closed and len(vs) > 1 and vs[0] == vs[-1]:
            raise DomainError(
                "closed paths must not repeat the start vertex at the end"
            )

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Yield the traversed arcs in order, including the closing arc."""
        vs = self.vertices
        for a, b in zip(vs, vs[1:]):
            yield a, b
        if self.closed and len(vs) > 1:
            yield vs[-1], vs[0]

    def reverse(self) -> "Path":
        """The same walk traversed backwards.

        A closed path keeps its anchor vertex, so the reverse of the circuit
        (a, b, c) is (a, c, b).
        """
        vs = self.vertices
        if self.closed and len(vs) > 1:
            return Path((vs[0],) + tuple(reversed(vs[1:])), closed=True)
        return Path(tuple(reversed(vs)), closed=self.closed)

    def is_hamiltonian(self, n: int) -> bool:
        """True if this is a closed path visiting each of 0..n-1 exactly once."""
        return (
            self.closed
            and len(self.vertices) == n
            and set(self.vertices) == set(range(n))
        )


def _normalize_weights(
    n: int, entries: Iterable[tuple[tuple[int, int], WeightLike]]
) -> list[Weight]:
    values: list[Weight | None] = [None] * (n * (n - 1) // 2)
    seen: dict[int, tuple[int, int]] = {}
    for (i, j), w in entries:
        _check_vertex(n, i)
        _check_vertex(n, j)
        if i == j:
            raise StructureError(f"self-pair ({i}, {i}) is not allowed")
        idx = _pair_index(n, min(i, j), max(i, j))
        if idx in seen:
            raise StructureError(
                f"pair ({i}, {j}) given twice (earlier as {seen[idx]})"
            )
        seen[idx] = (i, j)
        values[idx] = as_weight(w)
    return values  # type: ignore[return-value]


class _TriangleGraph:
    """Shared storage and arithmetic for the two upper-triangle graph kinds."""

    n: int
    weights: tuple[Weight, ...]

    def _validate(self) -> None:
        _check_n(self.n)
        want = self.n * (self.n - 1) // 2
        if len(self.weights) != want:
            raise StructureError(
                f"need {want} pair weights for n={self.n}, got {len(self.weights)}"
            )

    def pairs(self) -> Iterator[tuple[tuple[int, int], Weight]]:
        """Yield ((i, j), weight) for every unordered pair, i < j, in order."""
        for (i, j) in _pairs(self.n):
            yield (i, j), self.weights[_pair_index(self.n, i, j)]

    def coords(self) -> tuple[Weight, ...]:
        """The upper-triangle weight vector, the coordinate form used by
        rank computations and inner products."""
        return self.weights

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.weights)

    def _same_shape(self, other: "_TriangleGraph") -> None:
        if type(self) is not type(other):
            raise StructureError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if self.n != other.n:
            raise StructureError(f"size mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        self._same_shape(other)
        return type(self)(self.n, tuple(a + b for a, b in zip(self.weights, other.weights)))

    def __sub__(self, other):
        self._same_shape(other)
        return type(self)(self.n, tuple(a - b for a, b in zip(self.weights, other.weights)))

    def __neg__(self):
        return type(self)(self.n, tuple(-a for a in self.weights))

    def scale(self, factor: WeightLike):
        """Multiply every weight by a rational factor."""
        c = as_weight(factor)
        return type(self)(self.n, tuple(c * a for a in self.weights))


@dataclass(frozen=True)
class AsymGraph(_TriangleGraph):
    """Complete graph with skew-symmetric arc weights.

    Only the weights d(i, j) for i < j are stored; the accessor applies the
    sign, so arc(j, i) == -arc(i, j) holds by construction and cannot be
    violated by any input.
    """

    n: int
    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        self._validate()

    @classmethod
    def zero(cls, n: int) -> "AsymGraph":
        _check_n(n)
        return cls(n, (ZERO,) * (n * (n - 1) // 2))

    @classmethod
    def from_arcs(
        cls,
        n: int,
        arcs: Mapping[tuple[int, int], WeightLike],
        default: WeightLike | None = None,
    ) -> "AsymGraph":
        """Build from a mapping of ordered pairs to weights.

        Each unordered pair may appear in either direction but only once;
        giving both (i, j) and (j, i) raises StructureError.  Pairs absent
        from the mapping take ``default``, or raise if no default is given.
        """
        _check_n(n)
        entries = []
        for (i, j), w in arcs.items():
            if i < j:
                entries.append(((i, j), as_weight(w)))
            else:
                entries.append(((j, i), -as_weight(w)))
        values = _normalize_weights(n, entries)
        out: list[Weight] = []
        for (i, j) in _pairs(n):
            v = values[_pair_index(n, i, j)]
            if v is None:
                if default is None:
                    raise StructureError(f"missing weight for pair ({i}, {j})")
                v = as_weight(default)
            out.append(v)
        return cls(n, tuple(out))

    def arc(self, i: int, j: int) -> Weight:
        """Weight of the arc from i to j; arc(j, i) is its negative."""
        _check_vertex(self.n, i)
        _check_vertex(self.n, j)
        if i == j:
            raise DomainError(f"no self-arc at vertex {i}")
        if i < j:
            return self.weights[_pair_index(self.n, i, j)]
        return -self.weights[_pair_index(self.n, j, i)]


@dataclass(frozen=True)
class SymGraph(_TriangleGraph):
    """Complete graph with symmetric edge weights."""

    n: int
    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        self._validate()

    @classmethod
    def zero(cls, n: int) -> "SymGraph":
        _check_n(n)
        return cls(n, (ZERO,) * (n * (n - 1) // 2))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Mapping[tuple[int, int], WeightLike],
        default: WeightLike | None = None,
    ) -> "SymGraph":
        """Build from a mapping of unordered pairs (either orientation) to
        weights.  Duplicate pairs raise StructureError; absent pairs take
        ``default`` or raise if no default is given."""
        _check_n(n)
        entries = [((min(i, j), max(i, j)), as_weight(w)) for (i, j), w in edges.items()]
        values = _normalize_weights(n, entries)
        out: list[Weight] = []
        for (i, j) in _pairs(n):
            v = values[_pair_index(n, i, j)]
            if v is None:
                if default is None:
                    raise StructureError(f"missing weight for pair ({i}, {j})")
                v = as_weight(default)
            out.append(v)
        return cls(n, tuple(out))

    def edge(self, i: int, j: int) -> Weight:
        """Weight of the undirected edge {i, j}."""
        _check_vertex(self.n, i)
        _check_vertex(self.n, j)
        if i == j:
            raise DomainError(f"no self-edge at vertex {i}")
        return self.weights[_pair_index(self.n, min(i, j), max(i, j))]

    # Uniform accessor so path_length works across graph kinds.
    arc = edge


@dataclass(frozen=True)
class GeneralGraph:
    """Complete graph with an independent weight for each ordered pair."""

    n: int
    weights: tuple[Weight, ...]  # full n*n row-major matrix, zero diagonal

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        _check_n(self.n)
        if len(self.weights) != self.n * self.n:
            raise StructureError(
                f"need {self.n * self.n} matrix entries for n={self.n}, "
                f"got {len(self.weights)}"
            )
        for v in range(self.n):
            if self.weights[v * self.n + v] != 0:
                raise StructureError(f"diagonal entry at vertex {v} must be zero")

    @classmethod
    def zero(cls, n: int) -> "GeneralGraph":
        _check_n(n)
        return cls(n, (ZERO,) * (n * n))

    @classmethod
    def from_arcs(
        cls,
        n: int,
        arcs: Mapping[tuple[int, int], WeightLike],
        default: WeightLike | None = None,
    ) -> "GeneralGraph":
        """Build from a mapping of ordered pairs to weights.

        Every ordered pair (i, j), i != j, must be present unless ``default``
        fills the gaps.  Unlike AsymGraph.from_arcs, (i, j) and (j, i) are
        distinct entries here.
        """
        _check_n(n)
        cells: list[Weight | None] = [None] * (n * n)
        for (i, j), w in arcs.items():
            _check_vertex(n, i)
            _check_vertex(n, j)
            if i == j:
                raise StructureError(f"self-pair ({i}, {i}) is not allowed")
            if cells[i * n + j] is not None:
                raise StructureError(f"ordered pair ({i}, {j}) given twice")
            cells[i * n + j] = as_weight(w)
        out: list[Weight] = []
        for i in range(n):
            for j in range(n):
                if i == j:
                    out.append(ZERO)
                    continue
                v = cells[i * n + j]
                if v is None:
                    if default is None:
                        raise StructureError(f"missing weight for arc ({i}, {j})")
                    v = as_weight(default)
                out.append(v)
        return cls(n, tuple(out))

    def arc(self, i: int, j: int) -> Weight:
        """Weight of the arc from i to j."""
        _check_vertex(self.n, i)
        _check_vertex(self.n, j)
        if i == j:
            raise DomainError(f"no self-arc at vertex {i}")
        return self.weights[i * self.n + j]

    def arcs(self) -> Iterator[tuple[tuple[int, int], Weight]]:
        """Yield ((i, j), weight) for every ordered pair in row-major order."""
        for i in range(self.n):
            for j in range(self.n):
                if i != j:
                    yield (i, j), self.weights[i * self.n + j]

    def coords(self) -> tuple[Weight, ...]:
        return tuple(w for (_, _), w in self.arcs())

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.weights)

    def _same_shape(self, other: "GeneralGraph") -> None:
        if not isinstance(other, GeneralGraph):
            raise StructureError(
                f"cannot combine GeneralGraph with {type(other).__name__}"
            )
        if self.n != other.n:
            raise StructureError(f"size mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other: "GeneralGraph") -> "GeneralGraph":
        self._same_shape(other)
        return GeneralGraph(
            self.n, tuple(a + b for a, b in zip(self.weights, other.weights))
        )

    def __sub__(self, other: "GeneralGraph") -> "GeneralGraph":
        self._same_shape(other)
        return GeneralGraph(
            self.n, tuple(a - b for a, b in zip(self.weights, other.weights))
        )

    def __neg__(self) -> "GeneralGraph":
        return GeneralGraph(self.n, tuple(-a for a in self.weights))

    def scale(self, factor: WeightLike) -> "GeneralGraph":
        c = as_weight(factor)
        return GeneralGraph(self.n, tuple(c * a for a in self.weights))


Graph = Union[AsymGraph, SymGraph, GeneralGraph]


@dataclass(frozen=True)
class AdmissibilityMask:
    """The set of unordered pairs that really exist in an incomplete graph.

    The decomposition always runs on a completed graph; the mask is what
    remembers which pairs were filled in.  Path evaluation and searches
    treat pairs outside ``allowed`` as untraversable.
    """

    n: int
    allowed: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        _check_n(self.n)
        norm = set()
        for (i, j) in self.allowed:
            _check_vertex(self.n, i)
            _check_vertex(self.n, j)
            if i == j:
                raise StructureError(f"self-pair ({i}, {i}) in mask")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "allowed", frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> "AdmissibilityMask":
        return cls(n, frozenset(_pairs(n)))

    @classmethod
    def from_forbidden(
        cls, n: int, forbidden: Iterable[tuple[int, int]]
    ) -> "AdmissibilityMask":
        bad = {(min(i, j), max(i, j)) for (i, j) in forbidden}
        return cls(n, frozenset(p for p in _pairs(n) if p not in bad))

    def allows(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.allowed

    def forbidden(self) -> tuple[tuple[int, int], ...]:
        """The masked-out pairs, sorted."""
        return tuple(p for p in _pairs(self.n) if p not in self.allowed)

    @property
    def is_complete(self) -> bool:
        return len(self.allowed) == self.n * (self.n - 1) // 2


def three_cycle(n: int, i: int, j: int, k: int) -> AsymGraph:
    """Unit three-cycle c(i, j, k): arcs i->j, j->k, k->i of weight 1,
    every other pair 0.  The anchored family c(0, j, k) spans the cyclic
    subspace of AsymGraph."""
    _check_n(n)
    if len({i, j, k}) != 3:
        raise DomainError(f"three-cycle needs distinct vertices, got ({i}, {j}, {k})")
    arcs = {(i, j): ONE, (j, k): ONE, (k, i): ONE}
    return AsymGraph.from_arcs(n, arcs, default=ZERO)


def four_cycle(n: int, i: int, j: int, k: int, s: int) -> SymGraph:
    """Alternating four-cycle b(i, j, k, s): +1 on {i, j} and {k, s},
    -1 on {j, k} and {s, i}, every other pair 0.  These span the cyclic
    subspace of SymGraph."""
    _check_n(n)
    if len({i, j, k, s}) != 4:
        raise DomainError(
            f"four-cycle needs distinct vertices, got ({i}, {j}, {k}, {s})"
        )
    edges = {(i, j): ONE, (j, k): -ONE, (k, s): ONE, (s, i): -ONE}
    return SymGraph.from_edges(n, edges, default=ZERO)


def cpi_basis_sym(n: int, j: int) -> SymGraph:
    """Star of ones at vertex j: edge {j, k} = 1 for every k != j.  The n
    stars span the closed-path-independent subspace of SymGraph."""
    _check_n(n)
    _check_vertex(n, j)
    edges = {(j, k): ONE for k in range(n) if k != j}
    return SymGraph.from_edges(n, edges, default=ZERO)


def inner_product(a: AsymGraph | SymGraph, b: AsymGraph | SymGraph) -> Weight:
    """Sum over unordered pairs of the products of stored weights.

    Defined for two graphs of the same kind and size.  The cpi and cyclic
    components produced by the decompositions are orthogonal under this
    product.
    """
    if type(a) is not type(b) or not isinstance(a, (AsymGraph, SymGraph)):
        raise StructureError(
            f"inner product needs two graphs of one triangle kind, "
            f"got {type(a).__name__} and {type(b).__name__}"
        )
    if a.n != b.n:
        raise StructureError(f"size mismatch: n={a.n} vs n={b.n}")
    return sum((x * y for x, y in zip(a.coords(), b.coords())), ZERO)


def path_length(
    graph: Graph, path: Path, mask: AdmissibilityMask | None = None
) -> Weight:
    """Total weight along a path, including the closing arc when closed.

    Raises DomainError if the path leaves 0..n-1 and AdmissibilityError if
    it traverses a pair outside ``mask``.  A single-vertex closed path has
    length 0.
    """
    n = graph.n
    if mask is not None and mask.n != n:
        raise StructureError(f"mask size {mask.n} does not match graph size {n}")
    for v in path.vertices:
        _check_vertex(n, v)
    total = ZERO
    for a, b in path.arcs():
        if mask is not None and not mask.allows(a, b):
            raise AdmissibilityError(f"pair ({a}, {b}) is not admissible")
        total += graph.arc(a, b)
    return total


def exact_rank(rows: Sequence[Sequence[WeightLike]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    mat = [[as_weight(x) for x in row] for row in rows]
    if not mat:
        return 0
    cols = len(mat[0])
    for row in mat:
        if len(row) != cols:
            raise DomainError("ragged matrix")
    rank = 0
    col = 0
    while rank < len(mat) and col < cols:
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        head = mat[rank][col]
        mat[rank] = [x / head for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank
