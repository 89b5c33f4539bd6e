"""Immutable simple graphs with indexed edges, plus the structure queries
(connectivity, bridges, blocks, simple-path enumeration) the coloring code
builds on.

Vertices are 0..n-1.  Edges are stored normalized (u < v) in input order and
are referred to everywhere by their position in ``Graph.edges`` (the edge id).
All traversals use sorted adjacency, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

DEFAULT_PATH_CAP = 10**6


class GraphFormatError(ValueError):
    """Raised on malformed graph files; the message carries the line number."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph."""


class PathCapExceeded(RuntimeError):
    """Raised when simple-path enumeration exceeds its path cap."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph order must be >= 1, got {self.n}")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, edge_id), sorted by neighbor."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_ids(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_ids

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of (u, v); KeyError if absent."""
        return self.edge_ids[(min(u, v), max(u, v))]

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under the vertex map old -> perm[old]; edges re-sorted, so
        edge ids are not preserved."""
        p = tuple(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        mapped = sorted(tuple(sorted((p[u], p[v]))) for u, v in self.edges)
        return Graph(self.n, tuple(mapped))


@dataclass(frozen=True)
class Path:
    """A simple path as a vertex sequence plus the matching edge-id sequence."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("vertex/edge length mismatch")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path revisits a vertex")

    @classmethod
    def from_vertices(cls, g: Graph, vertices: Iterable[int]) -> "Path":
        vs = tuple(vertices)
        eids = tuple(g.edge_id(a, b) for a, b in zip(vs, vs[1:]))
        return cls(vs, eids)

    def join(self, other: "Path") -> "Path":
        """Concatenate at a shared endpoint: self ends where other starts."""
        if self.vertices[-1] != other.vertices[0]:
            raise ValueError("paths do not share an endpoint")
        return Path(self.vertices + other.vertices[1:], self.edges + other.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BlockDecomposition:
    """Bridges, the 2-edge-connected blocks, and the bridgeless components.

    ``blocks`` are the multi-edge biconnected components (as edge-id sets);
    together with ``bridges`` they partition the edge set.  ``component_of``
    maps each vertex to its component index after deleting all bridges,
    numbered in order of smallest member vertex.
    """

    bridges: frozenset[int]
    blocks: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w, _ in g.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph on {g.n} vertices is not connected")


def find_bridges(g: Graph) -> frozenset[int]:
    """Edge ids of all bridges, by one low-link DFS per component."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, edge id used to enter it)
        frames = [(root, -1)]
        iters = [iter(g.adjacency[root])]
        while frames:
            v, pe = frames[-1]
            moved = False
            for w, eid in iters[-1]:
                if eid == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, eid))
                    iters.append(iter(g.adjacency[w]))
                    moved = True
                    break
                if disc[w] < low[v]:
                    low[v] = disc[w]
            if not moved:
                frames.pop()
                iters.pop()
                if frames:
                    parent = frames[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > disc[parent]:
                        bridges.add(pe)
    return frozenset(bridges)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components by DFS with an edge stack; single-edge
    components are exactly the bridges."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    estack: list[int] = []
    raw_blocks: list[frozenset[int]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        frames = [(root, -1)]
        iters = [iter(g.adjacency[root])]
        while frames:
            v, pe = frames[-1]
            moved = False
            for w, eid in iters[-1]:
                if eid == pe:
                    continue
                if disc[w] == -1:
                    estack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, eid))
                    iters.append(iter(g.adjacency[w]))
                    moved = True
                    break
                if disc[w] < disc[v]:
                    # back edge to an ancestor
                    estack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not moved:
                frames.pop()
                iters.pop()
                if frames:
                    parent = frames[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] >= disc[parent]:
                        # the edges above pe on the stack form one block
                        block = []
                        while True:
                            top = estack.pop()
                            block.append(top)
                            if top == pe:
                                break
                        raw_blocks.append(frozenset(block))
    bridges = frozenset(e for b in raw_blocks for e in b if len(b) == 1)
    blocks = tuple(sorted((b for b in raw_blocks if len(b) > 1), key=min))

    comp = [-1] * n
    next_comp = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        comp[start] = next_comp
        stack = [start]
        while stack:
            v = stack.pop()
            for w, eid in g.adjacency[v]:
                if eid not in bridges and comp[w] == -1:
                    comp[w] = next_comp
                    stack.append(w)
        next_comp += 1
    return BlockDecomposition(bridges, blocks, tuple(comp))


def enumerate_simple_paths(
    g: Graph,
    u: int,
    v: int,
    cap: int = DEFAULT_PATH_CAP,
    within: frozenset[int] | None = None,
) -> Iterator[Path]:
    """Yield every simple u-v path exactly once, in depth-first order over
    sorted adjacency.

    ``within`` restricts the search to the given edge ids.  Raises
    PathCapExceeded when more than ``cap`` paths exist.
    """
    if u == v:
        raise ValueError("endpoints must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"endpoints ({u}, {v}) out of range for n={g.n}")
    adj = g.adjacency
    verts = [u]
    eids: list[int] = []
    on_path = bytearray(g.n)
    on_path[u] = 1
    iters = [iter(adj[u])]
    count = 0
    while iters:
        step = next(iters[-1], None)
        if step is None:
            iters.pop()
            on_path[verts.pop()] = 0
            if eids:
                eids.pop()
            continue
        w, eid = step
        if within is not None and eid not in within:
            continue
        if on_path[w]:
            continue
        if w == v:
            count += 1
            if count > cap:
                raise PathCapExceeded(
                    f"more than {cap} simple paths between {u} and {v}"
                )
            yield Path(tuple(verts) + (w,), tuple(eids) + (eid,))
            continue
        verts.append(w)
        eids.append(eid)
        on_path[w] = 1
        iters.append(iter(adj[w]))


def path_through_edge(
    g: Graph, u: int, v: int, e: int | tuple[int, int]
) -> Path:
    """A simple u-v path whose edge sequence contains e.

    Requires u, v and e to lie in a common 2-connected block; that block
    guarantees such a path exists.  The first one in enumeration order is
    returned.
    """
    eid = e if isinstance(e, int) else g.edge_id(*e)
    if not (0 <= eid < g.m):
        raise ValueError(f"edge id {eid} out of range")
    decomp = block_decomposition(g)
    home = None
    for block in decomp.blocks:
        if eid in block:
            home = block
            break
    if home is None:
        raise ValueError(f"edge {g.edges[eid]} is a bridge, not inside a 2-connected block")
    block_vertices = {x for b in home for x in g.edges[b]}
    if u not in block_vertices or v not in block_vertices:
        raise ValueError(
            f"vertices {u} and {v} do not both lie in the block containing {g.edges[eid]}"
        )
    if u == v:
        raise ValueError("endpoints must be distinct")
    for path in enumerate_simple_paths(g, u, v, within=home):
        if eid in path.edges:
            return path
    raise RuntimeError("no path through the edge; block structure is inconsistent")


# --- named families -------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 with n-1 pendant neighbors."""
    if n < 2:
        raise ValueError("a star needs at least 2 vertices")
    return Graph(n, tuple((0, i) for i in range(1, n)))


# --- file format ----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format: a header line ``n m`` followed by m
    lines ``u v``.  Blank lines and ``#`` comments are ignored.  Vertex labels
    must be integers in 0..n-1; anything else is rejected with the offending
    line number."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two fields, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field in {raw!r}") from None
        if header is None:
            if a < 1:
                raise GraphFormatError(f"line {lineno}: graph order must be >= 1, got {a}")
            if b < 0:
                raise GraphFormatError(f"line {lineno}: edge count must be >= 0, got {b}")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"line {lineno}: more than the declared {m} edges")
        if a == b:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(
                f"line {lineno}: vertex out of range 0..{n - 1} in {raw!r}"
            )
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("empty input: missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges but found {len(edges)}")
    return Graph(n, tuple(edges))


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
