"""Chart rendering for table reports.

Uses the non-interactive Agg backend so report runs work headless; graph
drawings themselves are delegated to DOT output, these figures chart the
numeric tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .extremal import ClassResult, ExtremalTable, max_edges_with_bridges


def save_table_figure(table: ExtremalTable, path: str) -> None:
    """Two panels: the s/t/f/g columns against k, and the census maximum
    edge count per exact cut-edge count against the closed form."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ks = [r.k for r in table.rows]
    plotted = False
    for label, values, marker in (
        ("s", [r.s for r in table.rows], "o"),
        ("t", [r.t for r in table.rows], "s"),
        ("f", [r.f for r in table.rows], "^"),
        ("g", [r.g for r in table.rows], "v"),
    ):
        pts = [(k, v) for k, v in zip(ks, values) if v is not None]
        if pts:
            ax1.plot([p[0] for p in pts], [p[1] for p in pts], marker=marker, label=label)
            plotted = True
    ax1.set_xlabel("k")
    ax1.set_ylabel("edges")
    ax1.set_title(f"extremal edge counts, n={table.n}")
    if plotted:
        ax1.legend()

    bks = sorted(table.bridge_max)
    census = [table.bridge_max[k][0] if table.bridge_max[k] else None for k in bks]
    formula = [max_edges_with_bridges(table.n, k) for k in bks]
    attained = [(k, v) for k, v in zip(bks, census) if v is not None]
    ax2.plot(bks, formula, "--", color="gray", label="bound")
    if attained:
        ax2.bar([p[0] for p in attained], [p[1] for p in attained], label="census max")
    ax2.set_xlabel("cut edges")
    ax2.set_ylabel("max edges")
    ax2.set_title("edge maximum by cut-edge count")
    ax2.legend()

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_census_figure(n: int, results: tuple[ClassResult, ...], path: str) -> None:
    """Scatter of solved values against edge counts over the whole census,
    point size scaled by the number of classes at each (edges, value)."""
    counts: dict[tuple[int, int], int] = {}
    for r in results:
        if r.value is not None:
            counts[(r.m, r.value)] = counts.get((r.m, r.value), 0) + 1
    fig, ax = plt.subplots(figsize=(6, 4))
    if counts:
        xs = [p[0] for p in counts]
        ys = [p[1] for p in counts]
        sizes = [20 + 12 * counts[p] for p in counts]
        ax.scatter(xs, ys, s=sizes, alpha=0.6)
    ax.set_xlabel("edges")
    ax.set_ylabel("conflict-free connection number")
    ax.set_title(f"census profile, n={n} ({len(results)} classes)")
    ax.yaxis.get_major_locator().set_params(integer=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
