"""Randomized self-verification of the decomposition identities.

The verify command re-derives the package's core identities on a given
graph plus a batch of seeded random graphs of the same kind and size:

* reconstruction: cpi + cyclic == original (per part for general graphs)
* orthogonality: the cpi and cyclic components have zero inner product
* signatures: potentials/vertex sums of components are what they claim
* expansion: cycle expansions round-trip to the graph they came from
* transfer: sampled open and closed walks keep their exact length when
  evaluated through the decomposition instead of the original

Everything is exact and deterministic: same document, same --trials and
--seed give byte-identical output.  On a violation the failing graph is
shrunk by dropping vertices while the violation persists and printed as a
document, so a bug report is immediately reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import asym as _asym
from . import docio as _docio
from . import general as _general
from . import sym as _sym
from .core import (
    AdmissibilityMask,
    AsymGraph,
    GeneralGraph,
    Path,
    SymGraph,
    Weight,
    inner_product,
    path_length,
)

__all__ = [
    "VerificationReport",
    "CHECK_NAMES",
    "random_graph",
    "drop_vertex",
    "shrink_mask",
    "find_violation",
    "shrink",
    "run_verification",
]

Graph = AsymGraph | SymGraph | GeneralGraph

CHECK_NAMES = (
    "reconstruction",
    "orthogonality",
    "signatures",
    "expansion",
    "transfer",
)

_SAMPLED_WALKS = 12


def random_graph(kind: str, n: int, rng: random.Random) -> Graph:
    """A random complete graph with small exact weights (some fractional)."""

    def weight() -> Weight:
        num = rng.randrange(-12, 13)
        den = rng.choice([1, 1, 1, 2, 4])
        return Fraction(num, den)

    pairs = {(i, j): weight() for i in range(n) for j in range(i + 1, n)}
    if kind == "asymmetric":
        return AsymGraph.from_arcs(n, pairs)
    if kind == "symmetric":
        return SymGraph.from_edges(n, pairs)
    if kind == "general":
        arcs = {}
        for i in range(n):
            for j in range(n):
                if i != j:
                    arcs[(i, j)] = weight()
        return GeneralGraph.from_arcs(n, arcs)
    raise ValueError(f"unknown kind {kind!r}")


def _kind_of(graph: Graph) -> str:
    if isinstance(graph, AsymGraph):
        return "asymmetric"
    if isinstance(graph, SymGraph):
        return "symmetric"
    return "general"


def _check_reconstruction(graph: Graph, mask: AdmissibilityMask | None) -> str | None:
    if isinstance(graph, AsymGraph):
        d = _asym.decompose(graph)
        if d.cpi + d.cyclic != graph:
            return "cpi + cyclic != original"
    elif isinstance(graph, SymGraph):
        d = _sym.decompose(graph)
        if d.cpi + d.cyclic != graph:
            return "cpi + cyclic != original"
    else:
        gd = _general.decompose(graph)
        if _general.merge(gd.averages, gd.excesses) != graph:
            return "averages + excesses != original"
        if _general.merge(gd.sym.cyclic, gd.asym.cyclic) != gd.reduced:
            return "reduced != sym cyclic + asym cyclic"
    return None


def _check_orthogonality(graph: Graph, mask: AdmissibilityMask | None) -> str | None:
    if isinstance(graph, AsymGraph):
        d = _asym.decompose(graph)
        if inner_product(d.cpi, d.cyclic) != 0:
            return "cpi and cyclic are not orthogonal"
    elif isinstance(graph, SymGraph):
        d = _sym.decompose(graph)
        if inner_product(d.cpi, d.cyclic) != 0:
            return "cpi and cyclic are not orthogonal"
    else:
        gd = _general.decompose(graph)
        if inner_product(gd.sym.cpi, gd.sym.cyclic) != 0:
            return "symmetric components are not orthogonal"
        if inner_product(gd.asym.cpi, gd.asym.cyclic) != 0:
            return "skew components are not orthogonal"
    return None


def _check_signatures(graph: Graph, mask: AdmissibilityMask | None) -> str | None:
    if isinstance(graph, AsymGraph):
        d = _asym.decompose(graph)
        if sum(d.potentials) != 0:
            return "potentials do not sum to zero"
        if not _asym.is_cyclic(d.cyclic):
            return "cyclic component has a nonzero potential"
        if not _asym.is_strongly_transitive(d.cpi):
            return "cpi component is not strongly transitive"
    elif isinstance(graph, SymGraph):
        d = _sym.decompose(graph)
        if not _sym.is_cyclic(d.cyclic):
            return "cyclic component has a nonzero vertex sum"
        if not _sym.is_cpi(d.cpi):
            return "cpi component is not a star sum"
        if d.total != 2 * sum(d.omega):
            return "T != 2 * sum(omega)"
    else:
        gd = _general.decompose(graph)
        for part_name, part in (("symmetric", gd.averages), ("skew", gd.excesses)):
            sub = _check_signatures(part, None)
            if sub is not None:
                return f"{part_name} part: {sub}"
    return None


def _check_expansion(graph: Graph, mask: AdmissibilityMask | None) -> str | None:
    if isinstance(graph, AsymGraph):
        cyc = _asym.decompose(graph).cyclic
        if _asym.three_cycle_expansion(cyc).to_graph() != cyc:
            return "three-cycle expansion does not round-trip"
    elif isinstance(graph, SymGraph):
        cyc = _sym.decompose(graph).cyclic
        if _sym.four_cycle_expansion(cyc).to_graph() != cyc:
            return "four-cycle expansion does not round-trip"
    else:
        gd = _general.decompose(graph)
        if _asym.three_cycle_expansion(gd.asym.cyclic).to_graph() != gd.asym.cyclic:
            return "skew part: three-cycle expansion does not round-trip"
        if _sym.four_cycle_expansion(gd.sym.cyclic).to_graph() != gd.sym.cyclic:
            return "symmetric part: four-cycle expansion does not round-trip"
    return None


def _random_walk(
    n: int,
    mask: AdmissibilityMask | None,
    rng: random.Random,
    closed: bool,
) -> Path | None:
    for _ in range(40):
        length = rng.randrange(2, n + 3)
        walk = [rng.randrange(n)]
        ok = True
        for _ in range(length):
            options = [
                v
                for v in range(n)
                if v != walk[-1] and (mask is None or mask.allows(walk[-1], v))
            ]
            if not ok or not options:
                ok = False
                break
            walk.append(rng.choice(options))
        if not ok:
            continue
        if closed:
            if walk[0] == walk[-1] or (
                mask is not None and not mask.allows(walk[-1], walk[0])
            ):
                continue
            return Path(tuple(walk), closed=True)
        return Path(tuple(walk), closed=False)
    return None


def _check_transfer(graph: Graph, mask: AdmissibilityMask | None) -> str | None:
    rng = random.Random(0xC1C)
    n = graph.n
    if isinstance(graph, AsymGraph):
        d = _asym.decompose(graph)
        for _ in range(_SAMPLED_WALKS):
            closed = _random_walk(n, mask, rng, closed=True)
            if closed is not None and path_length(
                d.cyclic, closed, mask
            ) != path_length(graph, closed, mask):
                return f"closed walk {closed.vertices} changed length on cyclic part"
            open_walk = _random_walk(n, mask, rng, closed=False)
            if open_walk is not None and _asym.connected_path_length_via(
                d, open_walk, mask
            ) != path_length(graph, open_walk, mask):
                return f"open walk {open_walk.vertices} transfer mismatch"
    elif isinstance(graph, SymGraph):
        d = _sym.decompose(graph)
        for _ in range(_SAMPLED_WALKS):
            for closed in (True, False):
                walk = _random_walk(n, mask, rng, closed=closed)
                if walk is not None and _sym.subset_path_length_via(
                    d, walk, mask
                ) != path_length(graph, walk, mask):
                    return f"walk {walk.vertices} transfer mismatch"
    else:
        gd = _general.decompose(graph)
        for _ in range(_SAMPLED_WALKS):
            for closed in (True, False):
                walk = _random_walk(n, mask, rng, closed=closed)
                if walk is not None and _general.path_length_via(
                    gd, walk, mask
                ) != path_length(graph, walk, mask):
                    return f"walk {walk.vertices} transfer mismatch"
    return None


_CHECKS = {
    "reconstruction": _check_reconstruction,
    "orthogonality": _check_orthogonality,
    "signatures": _check_signatures,
    "expansion": _check_expansion,
    "transfer": _check_transfer,
}


def find_violation(
    graph: Graph, mask: AdmissibilityMask | None = None
) -> tuple[str, str] | None:
    """Run every check; return (check name, detail) for the first failure."""
    for name in CHECK_NAMES:
        detail = _CHECKS[name](graph, mask)
        if detail is not None:
            return name, detail
    return None


def drop_vertex(graph: Graph, v: int) -> Graph:
    """The induced graph without vertex v, remaining vertices relabeled."""
    n = graph.n
    keep = [u for u in range(n) if u != v]
    relabel = {u: idx for idx, u in enumerate(keep)}
    if isinstance(graph, GeneralGraph):
        arcs = {
            (relabel[i], relabel[j]): graph.arc(i, j)
            for i in keep
            for j in keep
            if i != j
        }
        return GeneralGraph.from_arcs(n - 1, arcs)
    pairs = {
        (relabel[i], relabel[j]): graph.arc(i, j)
        for idx, i in enumerate(keep)
        for j in keep[idx + 1 :]
    }
    if isinstance(graph, AsymGraph):
        return AsymGraph.from_arcs(n - 1, pairs)
    return SymGraph.from_edges(n - 1, pairs)


def shrink_mask(mask: AdmissibilityMask, v: int) -> AdmissibilityMask:
    """The mask induced on the vertices other than v, relabeled."""
    keep = [u for u in range(mask.n) if u != v]
    relabel = {u: idx for idx, u in enumerate(keep)}
    allowed = frozenset(
        (relabel[i], relabel[j])
        for (i, j) in mask.allowed
        if i != v and j != v
    )
    return AdmissibilityMask(mask.n - 1, allowed)


def shrink(
    graph: Graph, mask: AdmissibilityMask | None, check: str
) -> tuple[Graph, AdmissibilityMask | None]:
    """Drop vertices while the named check keeps failing."""
    fn = _CHECKS[check]
    current, cur_mask = graph, mask
    progress = True
    while progress and current.n > 3:
        progress = False
        for v in range(current.n):
            candidate = drop_vertex(current, v)
            cand_mask = None if cur_mask is None else shrink_mask(cur_mask, v)
            if fn(candidate, cand_mask) is not None:
                current, cur_mask = candidate, cand_mask
                progress = True
                break
    return current, cur_mask


@dataclass
class VerificationReport:
    """Outcome of a verification run: printable lines plus pass/fail."""

    lines: list[str]
    ok: bool
    counterexample: str | None


def run_verification(
    graph: Graph,
    mask: AdmissibilityMask | None,
    trials: int,
    seed: int,
) -> VerificationReport:
    """Check the given graph and ``trials`` seeded random peers.

    Random peers are complete graphs of the same kind and vertex count.
    Output is deterministic for fixed inputs, trials and seed.
    """
    kind = _kind_of(graph)
    rng = random.Random(seed)
    subjects: list[tuple[Graph, AdmissibilityMask | None, str]] = [
        (graph, mask, "input graph")
    ]
    for t in range(trials):
        subjects.append((random_graph(kind, graph.n, rng), None, f"random graph #{t}"))
    lines = [f"verify: kind={kind} n={graph.n} trials={trials} seed={seed}"]
    for name in CHECK_NAMES:
        fn = _CHECKS[name]
        for subject, subject_mask, label in subjects:
            detail = fn(subject, subject_mask)
            if detail is not None:
                lines.append(f"check {name}: FAIL on {label}: {detail}")
                small, small_mask = shrink(subject, subject_mask, name)
                doc = _docio.from_graph(small, small_mask)
                lines.append(f"result: FAIL (seed={seed})")
                return VerificationReport(
                    lines=lines,
                    ok=False,
                    counterexample=_docio.serialize(doc),
                )
        lines.append(f"check {name}: ok ({len(subjects)} graphs)")
    lines.append(f"result: PASS (1 input + {trials} random graphs)")
    return VerificationReport(lines=lines, ok=True, counterexample=None)
