"""Edge colorings and the conflict-free connection verifier.

A path is conflict-free when some color appears on exactly one of its edges.
A colored graph is conflict-free connected when every vertex pair is joined
by at least one conflict-free path.  The verifier decides this by direct
path enumeration, so it is the ground truth the constructive colorings and
the exact solver are checked against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .graphs import (
    DEFAULT_PATH_CAP,
    Graph,
    Path,
    block_decomposition,
    enumerate_simple_paths,
    require_connected,
)

# tab20; DOT color attributes cycle through it, labels carry the true color
PALETTE = (
    "#1f77b4", "#aec7e8", "#ff7f0e", "#ffbb78", "#2ca02c",
    "#98df8a", "#d62728", "#ff9896", "#9467bd", "#c5b0d5",
    "#8c564b", "#c49c94", "#e377c2", "#f7b6d2", "#7f7f7f",
    "#c7c7c7", "#bcbd22", "#dbdb8d", "#17becf", "#9edae5",
)


@dataclass(frozen=True)
class EdgeColoring:
    """colors[eid] is the color (>= 1) of edge eid."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        for c in self.colors:
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"colors must be integers >= 1, got {c!r}")

    @property
    def k(self) -> int:
        """Number of distinct colors used."""
        return len(set(self.colors))

    def canonical(self) -> "EdgeColoring":
        """Relabel colors to first-use order 1..k."""
        remap: dict[int, int] = {}
        out = []
        for c in self.colors:
            if c not in remap:
                remap[c] = len(remap) + 1
            out.append(remap[c])
        return EdgeColoring(tuple(out))


@dataclass(frozen=True)
class ConnectivityReport:
    """Verifier outcome.  ``witness`` maps every vertex pair to a
    conflict-free path when ok; otherwise ``failure_pair`` is the first pair
    (in lexicographic order) with no conflict-free path."""

    ok: bool
    witness: dict[tuple[int, int], Path] | None
    failure_pair: tuple[int, int] | None


def is_conflict_free_path(path: Path, coloring: EdgeColoring) -> bool:
    """True when some color appears exactly once along the path."""
    for eid in path.edges:
        if eid >= len(coloring.colors):
            raise ValueError(f"edge {eid} has no color")
    counts = Counter(coloring.colors[eid] for eid in path.edges)
    return any(c == 1 for c in counts.values())


def is_conflict_free_connected(
    g: Graph, coloring: EdgeColoring, cap: int = DEFAULT_PATH_CAP
) -> ConnectivityReport:
    """Check every vertex pair for a conflict-free path.

    Pairs are scanned in lexicographic order; per pair, paths are taken in
    enumeration order and the first conflict-free one is recorded as the
    witness.  The scan short-circuits on the first pair that fails.
    """
    if len(coloring.colors) != g.m:
        raise ValueError(
            f"coloring has {len(coloring.colors)} entries for {g.m} edges"
        )
    witness: dict[tuple[int, int], Path] = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            found = None
            for path in enumerate_simple_paths(g, u, v, cap=cap):
                if is_conflict_free_path(path, coloring):
                    found = path
                    break
            if found is None:
                return ConnectivityReport(False, None, (u, v))
            witness[(u, v)] = found
    return ConnectivityReport(True, witness, None)


def bridge_block_coloring(g: Graph, verify: bool = True) -> EdgeColoring:
    """Constructive coloring with at most max(2, #bridges) colors.

    Each 2-connected block gets color 1 on its lowest-indexed edge and color
    2 elsewhere; bridges, in edge-id order, get the distinct colors
    1..#bridges.  Any path crossing a bridge colored >= 3 is conflict-free
    through that bridge alone; crossings that use only bridges 1 and 2, and
    pairs inside a component, fall back on the sparse color-1 edges.  The
    result is re-checked by the verifier, not assumed correct.
    """
    require_connected(g)
    if g.m == 0:
        return EdgeColoring(())
    decomp = block_decomposition(g)
    colors = [0] * g.m
    for block in decomp.blocks:
        lowest = min(block)
        for eid in block:
            colors[eid] = 1 if eid == lowest else 2
    for i, eid in enumerate(sorted(decomp.bridges), start=1):
        colors[eid] = i
    out = EdgeColoring(tuple(colors)).canonical()
    if verify:
        report = is_conflict_free_connected(g, out)
        if not report.ok:
            raise RuntimeError(
                f"constructed coloring failed verification at pair {report.failure_pair}"
            )
    return out


def ruler_path_coloring(n: int) -> EdgeColoring:
    """Coloring of the n-vertex path using exactly ceil(log2 n) colors.

    Edge i (1-based along the path) gets color 1 + (2-adic valuation of i).
    In any integer interval the highest power of two occurs once, so every
    contiguous subpath carries a unique maximal color and is conflict-free.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    colors = []
    for i in range(1, n):
        v = 0
        while i % 2 == 0:
            i //= 2
            v += 1
        colors.append(1 + v)
    return EdgeColoring(tuple(colors))


# --- coloring file format -------------------------------------------------

def format_coloring(coloring: EdgeColoring) -> str:
    """m lines of ``edge_index color`` (0-based edge ids, 1-based colors)."""
    return "".join(f"{i} {c}\n" for i, c in enumerate(coloring.colors))


def parse_coloring(text: str, m: int) -> EdgeColoring:
    colors: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'edge_index color'")
        try:
            eid, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field") from None
        if not 0 <= eid < m:
            raise ValueError(f"line {lineno}: edge index {eid} out of range 0..{m - 1}")
        if eid in colors:
            raise ValueError(f"line {lineno}: edge {eid} colored twice")
        if c < 1:
            raise ValueError(f"line {lineno}: colors are 1-based, got {c}")
        colors[eid] = c
    missing = [i for i in range(m) if i not in colors]
    if missing:
        raise ValueError(f"edges without a color: {missing}")
    return EdgeColoring(tuple(colors[i] for i in range(m)))


def to_dot(g: Graph, coloring: EdgeColoring | None = None) -> str:
    """DOT export for rendering by external tools; edge color attributes are
    drawn from a fixed palette and the numeric color goes in the label."""
    if coloring is not None and len(coloring.colors) != g.m:
        raise ValueError("coloring does not match the graph")
    lines = ["graph G {", "  node [shape=circle];"]
    for eid, (u, v) in enumerate(g.edges):
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = coloring.colors[eid]
            hexcolor = PALETTE[(c - 1) % len(PALETTE)]
            lines.append(f'  {u} -- {v} [label="{c}", color="{hexcolor}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def colors_used(coloring: EdgeColoring) -> tuple[int, ...]:
    return tuple(sorted(set(coloring.colors)))


def coloring_from_map(assignment: Iterable[tuple[int, int]], m: int) -> EdgeColoring:
    """Build a coloring from (edge_id, color) pairs covering all m edges."""
    colors = [0] * m
    for eid, c in assignment:
        colors[eid] = c
    return EdgeColoring(tuple(colors))
