"""Command line interface.

    graph-essence decompose FILE [--json | --table]
    graph-essence analyze FILE --objective shortest|longest
                   [--subset 1,2,4,5] [--exact | --greedy | --sorted-arc]
                   [--start K] [--json]
    graph-essence expand FILE [--anchor K] [--json]
    graph-essence bound FILE [--json]
    graph-essence verify FILE [--trials N] [--seed S]
    graph-essence report FILE --out-dir DIR [--stem NAME]

FILE is a graph document (see docio).  Searches run on the cyclic component
(the reduced graph for general documents) and lengths are reported both for
the component and, via the transfer identities, for the original graph.

Exit codes: 0 success, 2 document/usage parse error, 3 domain or structure
error, 4 no admissible circuit, 5 enumeration capacity exceeded, 6 invariant
violation found by verify.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FilePath

from . import asym as _asym
from . import docio as _docio
from . import general as _general
from . import sym as _sym
from .core import AdmissibilityMask, AsymGraph, GeneralGraph, Path, SymGraph
from .docio import format_weight
from .errors import (
    CapacityError,
    DocumentError,
    DomainError,
    GraphEssenceError,
    InfeasibleError,
    InvariantError,
    StructureError,
)
from .report import render_report
from .search import SearchSpec, exhaustive_optimum, greedy_neighbor, sorted_arc_search
from .verify import run_verification

__all__ = ["main"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_INFEASIBLE = 4
EXIT_CAPACITY = 5
EXIT_INVARIANT = 6


def _exit_code(exc: GraphEssenceError) -> int:
    if isinstance(exc, DocumentError):
        return EXIT_PARSE
    if isinstance(exc, CapacityError):
        return EXIT_CAPACITY
    if isinstance(exc, InfeasibleError):
        return EXIT_INFEASIBLE
    if isinstance(exc, InvariantError):
        return EXIT_INVARIANT
    if isinstance(exc, (DomainError, StructureError)):
        return EXIT_DOMAIN
    return EXIT_DOMAIN


def _weights_line(values) -> str:
    return ", ".join(format_weight(w) for w in values)


def _circuit_text(path: Path) -> str:
    names = [f"V{v + 1}" for v in path.vertices]
    if path.closed:
        names.append(names[0])
    return " -> ".join(names)


def _load(file_arg: str):
    try:
        text = FilePath(file_arg).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {file_arg}: {exc}") from None
    doc = _docio.parse(text)
    graph, mask = _docio.to_graph(doc)
    return doc, graph, mask


def _forbidden_1based(mask: AdmissibilityMask) -> list[list[int]]:
    return [[i + 1, j + 1] for (i, j) in mask.forbidden()]


def _cmd_decompose(args) -> int:
    doc, graph, mask = _load(args.file)
    if isinstance(graph, AsymGraph):
        d = _asym.decompose(graph)
        sources, sinks = _asym.sources_and_sinks(graph)
        if args.json:
            pairs = []
            for (i, j), w in graph.pairs():
                ok = mask.allows(i, j)
                pairs.append({
                    "i": i + 1,
                    "j": j + 1,
                    "original": format_weight(w) if ok else None,
                    "cpi": format_weight(d.cpi.arc(i, j)),
                    "cyclic": format_weight(d.cyclic.arc(i, j)),
                    "admissible": ok,
                })
            print(json.dumps({
                "kind": "asymmetric",
                "n": graph.n,
                "complete": mask.is_complete,
                "forbidden": _forbidden_1based(mask),
                "potentials": [format_weight(s) for s in d.potentials],
                "sources": [v + 1 for v in sources],
                "sinks": [v + 1 for v in sinks],
                "arcs": pairs,
            }, indent=2))
            return EXIT_OK
        print(f"kind: asymmetric  n: {graph.n}  complete: "
              f"{'yes' if mask.is_complete else 'no'}")
        print(f"potentials = {_weights_line(d.potentials)}")
        print(f"sources = {', '.join(f'V{v + 1}' for v in sources) or '-'}  "
              f"sinks = {', '.join(f'V{v + 1}' for v in sinks) or '-'}")
        print(f"{'arc':<10}{'original':>12}{'cpi':>12}{'cyclic':>12}")
        for (i, j), w in graph.pairs():
            ok = mask.allows(i, j)
            print(f"{f'{i + 1}->{j + 1}':<10}"
                  f"{format_weight(w) if ok else '-':>12}"
                  f"{format_weight(d.cpi.arc(i, j)):>12}"
                  f"{format_weight(d.cyclic.arc(i, j)) if ok else 'inf':>12}")
        return EXIT_OK
    if isinstance(graph, SymGraph):
        d = _sym.decompose(graph)
        if args.json:
            pairs = []
            for (i, j), w in graph.pairs():
                ok = mask.allows(i, j)
                pairs.append({
                    "i": i + 1,
                    "j": j + 1,
                    "original": format_weight(w) if ok else None,
                    "cpi": format_weight(d.cpi.edge(i, j)),
                    "cyclic": format_weight(d.cyclic.edge(i, j)),
                    "admissible": ok,
                })
            print(json.dumps({
                "kind": "symmetric",
                "n": graph.n,
                "complete": mask.is_complete,
                "forbidden": _forbidden_1based(mask),
                "T": format_weight(d.total),
                "S": [format_weight(s) for s in d.sums],
                "omega": [format_weight(w) for w in d.omega],
                "pairs": pairs,
            }, indent=2))
            return EXIT_OK
        print(f"kind: symmetric  n: {graph.n}  complete: "
              f"{'yes' if mask.is_complete else 'no'}")
        print(f"T = {format_weight(d.total)}")
        print(f"S = {_weights_line(d.sums)}")
        print(f"omega = {_weights_line(d.omega)}")
        print(f"{'pair':<10}{'original':>12}{'cpi':>12}{'cyclic':>12}")
        for (i, j), w in graph.pairs():
            ok = mask.allows(i, j)
            print(f"{f'{i + 1}-{j + 1}':<10}"
                  f"{format_weight(w) if ok else '-':>12}"
                  f"{format_weight(d.cpi.edge(i, j)):>12}"
                  f"{format_weight(d.cyclic.edge(i, j)) if ok else 'inf':>12}")
        return EXIT_OK
    gd = _general.decompose(graph)
    if args.json:
        arcs = []
        for i in range(graph.n):
            for j in range(graph.n):
                if i == j:
                    continue
                ok = mask.allows(i, j)
                arcs.append({
                    "i": i + 1,
                    "j": j + 1,
                    "original": format_weight(graph.arc(i, j)) if ok else None,
                    "average": format_weight(gd.averages.edge(i, j)),
                    "excess": format_weight(gd.excesses.arc(i, j)),
                    "reduced": format_weight(gd.reduced.arc(i, j)),
                    "admissible": ok,
                })
        print(json.dumps({
            "kind": "general",
            "n": graph.n,
            "complete": mask.is_complete,
            "forbidden": _forbidden_1based(mask),
            "T": format_weight(gd.sym.total),
            "omega": [format_weight(w) for w in gd.sym.omega],
            "potentials": [format_weight(s) for s in gd.asym.potentials],
            "arcs": arcs,
        }, indent=2))
        return EXIT_OK
    print(f"kind: general  n: {graph.n}  complete: "
          f"{'yes' if mask.is_complete else 'no'}")
    print(f"T = {format_weight(gd.sym.total)}")
    print(f"omega = {_weights_line(gd.sym.omega)}")
    print(f"potentials = {_weights_line(gd.asym.potentials)}")
    print(f"{'arc':<10}{'original':>12}{'average':>12}{'excess':>12}{'reduced':>12}")
    for i in range(graph.n):
        for j in range(graph.n):
            if i == j:
                continue
            ok = mask.allows(i, j)
            print(f"{f'{i + 1}->{j + 1}':<10}"
                  f"{format_weight(graph.arc(i, j)) if ok else '-':>12}"
                  f"{format_weight(gd.averages.edge(i, j)):>12}"
                  f"{format_weight(gd.excesses.arc(i, j)):>12}"
                  f"{format_weight(gd.reduced.arc(i, j)) if ok else 'inf':>12}")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    doc, graph, mask = _load(args.file)
    if isinstance(graph, AsymGraph):
        d = _asym.decompose(graph)
        component = d.cyclic
    elif isinstance(graph, SymGraph):
        ds = _sym.decompose(graph)
        component = ds.cyclic
    else:
        dg = _general.decompose(graph)
        component = dg.reduced

    subset0 = None
    if args.subset is not None:
        subset0 = tuple(v - 1 for v in args.subset)

    if args.greedy:
        if subset0 is not None:
            raise DomainError("--greedy searches full circuits; drop --subset")
        solver = "greedy"
        result = greedy_neighbor(
            component, args.objective, args.start - 1, mask=mask
        )
    elif args.sorted_arc:
        if subset0 is not None:
            raise DomainError("--sorted-arc searches full circuits; drop --subset")
        if not isinstance(component, SymGraph):
            raise DomainError("--sorted-arc needs a symmetric document")
        if args.objective != "shortest":
            raise DomainError("--sorted-arc searches short circuits only")
        solver = "sorted-arc"
        result = sorted_arc_search(component, mask=mask)
    else:
        solver = "exact"
        spec = SearchSpec(
            objective=args.objective,
            mode="hamiltonianCircuit" if subset0 is None else "closedOverSubset",
            subset=subset0,
        )
        result = exhaustive_optimum(component, spec, mask=mask)

    # Transfer the component length back to the original graph.
    if isinstance(graph, AsymGraph):
        original_length = result.length
    elif isinstance(graph, SymGraph):
        original_length = _sym.subset_path_length_via(ds, result.path, mask=mask)
    else:
        original_length = _general.path_length_via(dg, result.path, mask=mask)

    if args.json:
        print(json.dumps({
            "solver": solver,
            "objective": args.objective,
            "subset": None if args.subset is None else list(args.subset),
            "circuit": [v + 1 for v in result.path.vertices],
            "closed": result.path.closed,
            "componentLength": format_weight(result.length),
            "originalLength": format_weight(original_length),
            "optimal": result.optimal,
        }, indent=2))
        return EXIT_OK
    print(f"solver: {solver}  objective: {args.objective}"
          + (f"  subset: {{{', '.join(f'V{v}' for v in args.subset)}}}"
             if args.subset else ""))
    print(f"circuit: {_circuit_text(result.path)}")
    print(f"component length = {format_weight(result.length)}")
    print(f"original length = {format_weight(original_length)}")
    print(f"optimal: {'yes' if result.optimal else 'no'}")
    return EXIT_OK


def _cmd_expand(args) -> int:
    doc, graph, mask = _load(args.file)
    anchor0 = args.anchor - 1
    out: dict[str, object] = {}
    lines: list[str] = []
    if isinstance(graph, (AsymGraph, GeneralGraph)):
        cyc = (
            _asym.decompose(graph).cyclic
            if isinstance(graph, AsymGraph)
            else _general.decompose(graph).asym.cyclic
        )
        exp = _asym.three_cycle_expansion(cyc, anchor=anchor0)
        entries = [
            {"pair": [j + 1, k + 1], "coefficient": format_weight(c)}
            for (j, k), c in exp.coeffs
        ]
        out["threeCycle"] = {"anchor": args.anchor, "coefficients": entries}
        lines.append(f"three-cycle expansion, anchor V{args.anchor}")
        nonzero = exp.nonzero()
        for (j, k), c in sorted(nonzero.items()):
            lines.append(f"  c({j + 1},{k + 1}) = {format_weight(c)}")
        lines.append(
            f"  {len(nonzero)} nonzero of {len(exp.coeffs)} coefficients"
        )
    if isinstance(graph, (SymGraph, GeneralGraph)):
        cyc = (
            _sym.decompose(graph).cyclic
            if isinstance(graph, SymGraph)
            else _general.decompose(graph).sym.cyclic
        )
        exp4 = _sym.four_cycle_expansion(cyc)
        out["fourCycle"] = {
            "a": [
                {"pair": [j + 1, k + 1], "coefficient": format_weight(c)}
                for (j, k), c in exp4.a_coeffs
            ],
            "b": [
                {"vertex": s + 1, "coefficient": format_weight(c)}
                for s, c in exp4.b_coeffs
            ],
        }
        lines.append("four-cycle expansion over pair {1,2} with pivot 3")
        for (j, k), c in exp4.a_coeffs:
            if c != 0:
                lines.append(f"  a({j + 1},{k + 1}) = {format_weight(c)}")
        for s, c in exp4.b_coeffs:
            if c != 0:
                lines.append(f"  b({s + 1}) = {format_weight(c)}")
        total = len(exp4.a_coeffs) + len(exp4.b_coeffs)
        lines.append(f"  {total} coefficients = n(n-3)/2")
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _cmd_bound(args) -> int:
    doc, graph, mask = _load(args.file)
    if not isinstance(graph, SymGraph):
        raise DomainError("bound needs a symmetric document")
    if not mask.is_complete:
        raise DomainError("bound needs a complete graph; masked circuits "
                          "can exceed the circuit average")
    d = _sym.decompose(graph)
    lower, upper = _sym.hamiltonian_lower_bound(d)
    if args.json:
        print(json.dumps({
            "T": format_weight(d.total),
            "lower": format_weight(lower),
            "upper": format_weight(upper),
        }, indent=2))
        return EXIT_OK
    print(f"T = {format_weight(d.total)}")
    print(f"shortest Hamiltonian circuit lies in [{format_weight(lower)}, "
          f"{format_weight(upper)}]")
    return EXIT_OK


def _cmd_verify(args) -> int:
    doc, graph, mask = _load(args.file)
    if args.trials < 0:
        raise DomainError("--trials must be >= 0")
    report = run_verification(graph, mask, trials=args.trials, seed=args.seed)
    print("\n".join(report.lines))
    if not report.ok:
        print("counterexample document:")
        sys.stdout.write(report.counterexample or "")
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_report(args) -> int:
    doc, graph, mask = _load(args.file)
    written = render_report(graph, mask, args.out_dir, stem=args.stem)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _subset_arg(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"subset must be comma-separated integers, got {text!r}"
        ) from None
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graph-essence",
        description="Decompose weighted graphs and analyze circuits on the "
                    "cyclic component.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="print the decomposition")
    p.add_argument("file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", action="store_true", help="default")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("analyze", help="search circuits on the cyclic part")
    p.add_argument("file")
    p.add_argument("--objective", required=True, choices=("shortest", "longest"))
    p.add_argument("--subset", type=_subset_arg,
                   help="comma-separated 1-based vertices, exact solver only")
    solver = p.add_mutually_exclusive_group()
    solver.add_argument("--exact", action="store_true", help="default")
    solver.add_argument("--greedy", action="store_true")
    solver.add_argument("--sorted-arc", dest="sorted_arc", action="store_true")
    p.add_argument("--start", type=int, default=1,
                   help="1-based start vertex for --greedy")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("expand", help="print the cycle expansion of the "
                                      "cyclic component")
    p.add_argument("file")
    p.add_argument("--anchor", type=int, default=1,
                   help="1-based anchor vertex for the three-cycle expansion")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("bound", help="bounds on the shortest Hamiltonian "
                                     "circuit of a symmetric graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_bound)

    p = sub.add_parser("verify", help="re-check the decomposition identities "
                                      "on the input and random graphs")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("report", help="write CSV tables and a PNG figure")
    p.add_argument("file")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--stem", default="report")
    p.set_defaults(fn=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphEssenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
