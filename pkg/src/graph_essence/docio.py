"""Graph documents: the JSON exchange format used by the CLI.

A document looks like

    {
      "kind": "symmetric",
      "n": 4,
      "complete": true,
      "edges": [
        {"i": 1, "j": 2, "w": 17},
        {"i": 1, "j": 3, "w": "9/2"}
      ]
    }

Vertices are 1-based in documents and 0-based in the library.  Weights are
JSON integers or exact literal strings: integer ("-3"), rational ("9/2") or
decimal ("4.5").  JSON floats are rejected so no binary rounding can sneak
in, and "inf" is never accepted; masked pairs are simply absent and the
document says ``"complete": false``.

Kind-specific edge rules:

* asymmetric: each unordered pair appears at most once, in either
  direction; the canonical form stores the traversal direction with the
  positive weight.
* symmetric: each unordered pair appears at most once.
* general: present pairs carry both directions as separate records.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .core import AdmissibilityMask, AsymGraph, GeneralGraph, SymGraph, Weight
from . import asym as _asym
from . import sym as _sym
from .errors import DocumentError

__all__ = [
    "EdgeRecord",
    "GraphDocument",
    "KINDS",
    "parse_weight_literal",
    "format_weight",
    "parse",
    "serialize",
    "to_graph",
    "from_graph",
]

KINDS = ("asymmetric", "symmetric", "general")

_WEIGHT_RE = re.compile(r"^[+-]?(\d+(\.\d+)?|\d+/\d+)$")


def parse_weight_literal(text: str) -> Weight:
    """Parse an exact weight literal: integer, rational p/q, or decimal."""
    s = text.strip()
    if not _WEIGHT_RE.match(s):
        raise DocumentError(f"not a weight literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise DocumentError(f"zero denominator in weight literal: {text!r}") from None


def format_weight(w: Weight) -> str:
    """Canonical text for a weight: plain integer, else p/q."""
    if w.denominator == 1:
        return str(w.numerator)
    return f"{w.numerator}/{w.denominator}"


@dataclass(frozen=True)
class EdgeRecord:
    """One document edge: 1-based endpoints and an exact weight."""

    i: int
    j: int
    w: Weight


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph document; see the module docstring for the format."""

    kind: str
    n: int
    complete: bool
    edges: tuple[EdgeRecord, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DocumentError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if type(self.n) is not int or self.n < 3:
            raise DocumentError(f"n must be an integer >= 3, got {self.n!r}")
        object.__setattr__(self, "edges", tuple(self.edges))


def _edge_record_lines(text: str) -> list[int]:
    """Line number (1-based) of each object inside the "edges" array.

    Tracks strings and nesting by hand so that braces inside string values
    cannot confuse the count.  Used only to make duplicate-pair errors point
    at the right line.
    """
    lines: list[int] = []
    line = 1
    pos = 0
    in_string = False
    escaped = False
    after_edges_key = False
    array_depth = 0
    in_edges_array = False
    object_depth = 0
    key_buf = ""
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
        if in_string:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
                if key_buf == "edges":
                    after_edges_key = True
                key_buf = ""
            else:
                key_buf += ch
            pos += 1
            continue
        if ch == '"':
            in_string = True
            key_buf = ""
        elif ch == "[":
            if after_edges_key and not in_edges_array:
                in_edges_array = True
                array_depth = 1
                after_edges_key = False
            elif in_edges_array:
                array_depth += 1
        elif ch == "]":
            if in_edges_array:
                array_depth -= 1
                if array_depth == 0:
                    in_edges_array = False
        elif ch == "{":
            if in_edges_array:
                if object_depth == 0:
                    lines.append(line)
                object_depth += 1
        elif ch == "}":
            if in_edges_array and object_depth > 0:
                object_depth -= 1
        elif not ch.isspace() and ch not in ":,":
            # Some other token follows the "edges" key; disarm.
            after_edges_key = False
        pos += 1
    return lines


def _record_weight(raw: object, where: str) -> Weight:
    if type(raw) is int:
        return Fraction(raw)
    if isinstance(raw, float):
        raise DocumentError(
            f"{where}: floating-point weights are not exact; "
            f"write the weight as an integer or a string literal"
        )
    if isinstance(raw, str):
        try:
            return parse_weight_literal(raw)
        except DocumentError as exc:
            raise DocumentError(f"{where}: {exc}") from None
    raise DocumentError(f"{where}: weight must be an integer or string literal")


def parse(text: str) -> GraphDocument:
    """Parse and validate a document from JSON text.

    Raises DocumentError with a line reference for malformed JSON, bad
    fields, out-of-range vertices, inexact weights, duplicate pairs, and
    pairs missing from a document that claims to be complete.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(data) - {"kind", "n", "edges", "complete"}
    if unknown:
        raise DocumentError(f"unknown document keys: {sorted(unknown)}")
    for key in ("kind", "n", "edges"):
        if key not in data:
            raise DocumentError(f"document is missing the {key!r} key")
    kind = data["kind"]
    if kind not in KINDS:
        raise DocumentError(f"kind must be one of {KINDS}, got {kind!r}")
    n = data["n"]
    if type(n) is not int or n < 3:
        raise DocumentError(f"n must be an integer >= 3, got {n!r}")
    complete = data.get("complete", True)
    if type(complete) is not bool:
        raise DocumentError(f"complete must be true or false, got {complete!r}")
    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise DocumentError("edges must be an array of records")
    lines = _edge_record_lines(text)
    records = []
    for idx, raw in enumerate(raw_edges):
        where = f"edges[{idx}]"
        if idx < len(lines):
            where += f" (line {lines[idx]})"
        if not isinstance(raw, dict):
            raise DocumentError(f"{where}: edge record must be an object")
        if set(raw) != {"i", "j", "w"}:
            raise DocumentError(f"{where}: edge record needs exactly i, j, w")
        i, j = raw["i"], raw["j"]
        for name, v in (("i", i), ("j", j)):
            if type(v) is not int or not 1 <= v <= n:
                raise DocumentError(
                    f"{where}: {name} must be an integer in 1..{n}, got {v!r}"
                )
        if i == j:
            raise DocumentError(f"{where}: self-pair ({i}, {j}) is not allowed")
        records.append(EdgeRecord(i=i, j=j, w=_record_weight(raw["w"], where)))
    doc = GraphDocument(kind=kind, n=n, complete=complete, edges=tuple(records))
    _validate_pairs(doc, lines)
    return doc


def _validate_pairs(doc: GraphDocument, lines: list[int] | None = None) -> None:
    def where(idx: int) -> str:
        tag = f"edges[{idx}]"
        if lines is not None and idx < len(lines):
            tag += f" (line {lines[idx]})"
        return tag

    n = doc.n
    if doc.kind == "general":
        seen_ordered: dict[tuple[int, int], int] = {}
        for idx, rec in enumerate(doc.edges):
            key = (rec.i, rec.j)
            if key in seen_ordered:
                raise DocumentError(
                    f"{where(idx)}: arc ({rec.i}, {rec.j}) already given "
                    f"at {where(seen_ordered[key])}"
                )
            seen_ordered[key] = idx
        halves = {(min(i, j), max(i, j)) for (i, j) in seen_ordered}
        for (i, j) in sorted(halves):
            if (i, j) not in seen_ordered or (j, i) not in seen_ordered:
                raise DocumentError(
                    f"general documents need both directions of pair "
                    f"({i}, {j}); only one is present"
                )
        present = halves
    else:
        seen: dict[tuple[int, int], int] = {}
        for idx, rec in enumerate(doc.edges):
            key = (min(rec.i, rec.j), max(rec.i, rec.j))
            if key in seen:
                raise DocumentError(
                    f"{where(idx)}: pair ({rec.i}, {rec.j}) already given "
                    f"at {where(seen[key])}"
                )
            seen[key] = idx
        present = set(seen)
    if doc.complete:
        missing = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if (i, j) not in present
        ]
        if missing:
            raise DocumentError(
                f"document claims to be complete but pairs are missing: "
                f"{missing[:5]}{' ...' if len(missing) > 5 else ''}"
            )


def serialize(doc: GraphDocument) -> str:
    """Render a document back to JSON text.

    The output is deterministic: fixed key order, two-space indent, weights
    as JSON integers when integral and "p/q" strings otherwise, and a
    trailing newline.  serialize(parse(s)) == s for text produced here.
    """
    edges = []
    for rec in doc.edges:
        if rec.w.denominator == 1:
            w: object = rec.w.numerator
        else:
            w = format_weight(rec.w)
        edges.append({"i": rec.i, "j": rec.j, "w": w})
    body = {"kind": doc.kind, "n": doc.n, "complete": doc.complete, "edges": edges}
    return json.dumps(body, indent=2) + "\n"


def to_graph(
    doc: GraphDocument, fill: Weight | int = 0
) -> tuple[AsymGraph | SymGraph | GeneralGraph, AdmissibilityMask]:
    """Build the (completed) graph and its admissibility mask.

    Pairs absent from an incomplete document get the ``fill`` weight and are
    excluded from the mask; complete documents get the complete mask.
    """
    _validate_pairs(doc)
    n = doc.n
    if doc.kind == "general":
        pair_set = {(min(r.i, r.j) - 1, max(r.i, r.j) - 1) for r in doc.edges}
        mask = AdmissibilityMask(n, frozenset(pair_set))
        arcs = {(r.i - 1, r.j - 1): r.w for r in doc.edges}
        graph: AsymGraph | SymGraph | GeneralGraph = GeneralGraph.from_arcs(
            n, arcs, default=fill
        )
        return graph, mask
    pair_set = {(min(r.i, r.j) - 1, max(r.i, r.j) - 1) for r in doc.edges}
    mask = AdmissibilityMask(n, frozenset(pair_set))
    if doc.kind == "asymmetric":
        arcs = {(r.i - 1, r.j - 1): r.w for r in doc.edges}
        return _asym.complete_incomplete(arcs, mask, fill=fill), mask
    edges = {(r.i - 1, r.j - 1): r.w for r in doc.edges}
    return _sym.complete_incomplete(edges, mask, fill=fill), mask


def from_graph(
    graph: AsymGraph | SymGraph | GeneralGraph,
    mask: AdmissibilityMask | None = None,
) -> GraphDocument:
    """Render a graph (optionally masked) as a canonical document.

    Canonical edge order is ascending by unordered pair; asymmetric records
    take the direction that makes the weight non-negative, and general
    records emit the (i, j) direction immediately followed by (j, i).
    """
    n = graph.n
    if mask is not None and mask.n != n:
        raise DocumentError(f"mask size {mask.n} does not match graph size {n}")
    complete = mask is None or mask.is_complete

    def allowed(i: int, j: int) -> bool:
        return mask is None or mask.allows(i, j)

    records: list[EdgeRecord] = []
    if isinstance(graph, AsymGraph):
        kind = "asymmetric"
        for (i, j), w in graph.pairs():
            if not allowed(i, j):
                continue
            if w < 0:
                records.append(EdgeRecord(i=j + 1, j=i + 1, w=-w))
            else:
                records.append(EdgeRecord(i=i + 1, j=j + 1, w=w))
    elif isinstance(graph, SymGraph):
        kind = "symmetric"
        for (i, j), w in graph.pairs():
            if allowed(i, j):
                records.append(EdgeRecord(i=i + 1, j=j + 1, w=w))
    elif isinstance(graph, GeneralGraph):
        kind = "general"
        for i in range(n):
            for j in range(i + 1, n):
                if allowed(i, j):
                    records.append(EdgeRecord(i=i + 1, j=j + 1, w=graph.arc(i, j)))
                    records.append(EdgeRecord(i=j + 1, j=i + 1, w=graph.arc(j, i)))
    else:
        raise DocumentError(f"cannot serialize {type(graph).__name__}")
    return GraphDocument(kind=kind, n=n, complete=complete, edges=tuple(records))
