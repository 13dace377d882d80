"""Render a decomposition to CSV tables and a PNG figure.

Writes three files into the output directory: <stem>.csv with one row per
pair (or ordered arc for general graphs), <stem>_summary.csv with the
vertex scalars, and <stem>.png with the component panels laid out on a
circle.  Masked pairs are left out of the drawing and flagged in the CSV.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path as FilePath

from . import asym as _asym
from . import general as _general
from . import sym as _sym
from .core import AdmissibilityMask, AsymGraph, GeneralGraph, SymGraph
from .docio import format_weight

__all__ = ["render_report"]

Graph = AsymGraph | SymGraph | GeneralGraph


def _positions(n: int) -> list[tuple[float, float]]:
    return [
        (math.cos(2 * math.pi * k / n - math.pi / 2),
         math.sin(2 * math.pi * k / n - math.pi / 2))
        for k in range(n)
    ]


def _draw_panel(ax, graph: Graph, mask: AdmissibilityMask | None, title: str) -> None:
    n = graph.n
    pos = _positions(n)
    directed = isinstance(graph, AsymGraph)
    both_ways = isinstance(graph, GeneralGraph)
    for i in range(n):
        for j in range(i + 1, n):
            if mask is not None and not mask.allows(i, j):
                continue
            (x1, y1), (x2, y2) = pos[i], pos[j]
            if directed and graph.arc(i, j) < 0:
                # Arrow in the positive traversal direction.
                (x1, y1), (x2, y2) = (x2, y2), (x1, y1)
                label = format_weight(graph.arc(j, i))
            elif both_ways:
                label = f"{format_weight(graph.arc(i, j))} / {format_weight(graph.arc(j, i))}"
            else:
                label = format_weight(graph.arc(i, j))
            if directed or both_ways:
                ax.annotate(
                    "",
                    xy=(x2, y2),
                    xytext=(x1, y1),
                    arrowprops=dict(arrowstyle="-|>", color="#555555", lw=0.9),
                )
            else:
                ax.plot([x1, x2], [y1, y2], color="#555555", lw=0.9)
            mx, my = 0.42 * x1 + 0.58 * x2, 0.42 * y1 + 0.58 * y2
            ax.text(mx, my, label, fontsize=7, ha="center", va="center",
                    bbox=dict(boxstyle="round,pad=0.12", fc="white", ec="none", alpha=0.85))
    for v, (x, y) in enumerate(pos):
        ax.plot(x, y, "o", color="#1f4e79", markersize=14, zorder=3)
        ax.text(x, y, f"V{v + 1}", color="white", fontsize=7,
                ha="center", va="center", zorder=4)
    ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.axis("off")


def _panels(graph: Graph) -> list[tuple[str, Graph]]:
    if isinstance(graph, AsymGraph):
        d = _asym.decompose(graph)
        return [("original", d.original), ("cpi", d.cpi), ("cyclic", d.cyclic)]
    if isinstance(graph, SymGraph):
        d = _sym.decompose(graph)
        return [("original", d.original), ("cpi", d.cpi), ("cyclic", d.cyclic)]
    gd = _general.decompose(graph)
    return [
        ("original (i->j / j->i)", gd.original),
        ("averages", gd.averages),
        ("excesses", gd.excesses),
        ("reduced (i->j / j->i)", gd.reduced),
    ]


def _write_edge_csv(path: FilePath, graph: Graph, mask: AdmissibilityMask | None) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if isinstance(graph, GeneralGraph):
            gd = _general.decompose(graph)
            writer.writerow(["arc", "original", "average", "excess", "reduced", "admissible"])
            for i in range(graph.n):
                for j in range(graph.n):
                    if i == j:
                        continue
                    ok = mask is None or mask.allows(i, j)
                    writer.writerow([
                        f"{i + 1}->{j + 1}",
                        format_weight(graph.arc(i, j)),
                        format_weight(gd.averages.edge(i, j)),
                        format_weight(gd.excesses.arc(i, j)),
                        format_weight(gd.reduced.arc(i, j)),
                        "yes" if ok else "no",
                    ])
            return
        if isinstance(graph, AsymGraph):
            d = _asym.decompose(graph)
            head = "arc"
        else:
            d = _sym.decompose(graph)
            head = "pair"
        writer.writerow([head, "original", "cpi", "cyclic", "admissible"])
        for (i, j), _ in graph.pairs():
            ok = mask is None or mask.allows(i, j)
            tag = f"{i + 1}->{j + 1}" if isinstance(graph, AsymGraph) else f"{i + 1}-{j + 1}"
            writer.writerow([
                tag,
                format_weight(graph.arc(i, j)),
                format_weight(d.cpi.arc(i, j)),
                format_weight(d.cyclic.arc(i, j)),
                "yes" if ok else "no",
            ])


def _write_summary_csv(path: FilePath, graph: Graph) -> None:
    rows: list[list[str]] = [["quantity", "value"]]
    rows.append(["n", str(graph.n)])
    if isinstance(graph, AsymGraph):
        rows.append(["kind", "asymmetric"])
        for v, s in enumerate(_asym.potentials(graph)):
            rows.append([f"potential_{v + 1}", format_weight(s)])
    elif isinstance(graph, SymGraph):
        d = _sym.decompose(graph)
        rows.append(["kind", "symmetric"])
        rows.append(["T", format_weight(d.total)])
        for v, s in enumerate(d.sums):
            rows.append([f"S_{v + 1}", format_weight(s)])
        for v, w in enumerate(d.omega):
            rows.append([f"omega_{v + 1}", format_weight(w)])
    else:
        gd = _general.decompose(graph)
        rows.append(["kind", "general"])
        rows.append(["T", format_weight(gd.sym.total)])
        for v, w in enumerate(gd.sym.omega):
            rows.append([f"omega_{v + 1}", format_weight(w)])
        for v, s in enumerate(gd.asym.potentials):
            rows.append([f"potential_{v + 1}", format_weight(s)])
    with open(path, "w", newline="") as fh:
        csv.writer(fh).writerows(rows)


def render_report(
    graph: Graph,
    mask: AdmissibilityMask | None,
    out_dir: str | FilePath,
    stem: str = "report",
) -> list[FilePath]:
    """Write <stem>.csv, <stem>_summary.csv and <stem>.png into out_dir.

    Returns the written paths.  The figure shows one panel per component
    with vertices on a circle; components are drawn from the completed
    graph, masked pairs omitted from the original panel.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = FilePath(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    edge_csv = out / f"{stem}.csv"
    summary_csv = out / f"{stem}_summary.csv"
    png = out / f"{stem}.png"

    _write_edge_csv(edge_csv, graph, mask)
    _write_summary_csv(summary_csv, graph)

    panels = _panels(graph)
    fig, axes = plt.subplots(
        1, len(panels), figsize=(3.4 * len(panels), 3.6), dpi=150
    )
    for ax, (title, component) in zip(axes, panels):
        # Mask applies to the original panel only; components always exist.
        panel_mask = mask if title.startswith("original") else None
        _draw_panel(ax, component, panel_mask, title)
    fig.suptitle(f"decomposition, n={graph.n}", fontsize=10)
    fig.tight_layout()
    fig.savefig(png)
    plt.close(fig)
    return [edge_csv, summary_csv, png]
