"""Exhaustive enumeration of small connected graphs, with isomorphism
dedup by canonical form.

The canonical form of a graph is the lexicographically minimal adjacency
matrix over all vertex permutations, encoded as an integer key: upper
triangle read row by row, edge (0,1) in the most significant bit.  Class
representatives are therefore themselves in canonical form.

Representatives are produced by augmenting the (n-1)-vertex classes with one
new vertex joined to every nonempty neighborhood subset (every connected
graph has a non-cut vertex, so this reaches every class), then deduplicating
by canonical key.  The permutation sweep is vectorized with numpy; a full
scan of all labeled graphs would give the same classes but is far slower.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from random import Random
from typing import Iterator

import numpy as np

from .graphs import Graph, is_connected

MAX_CENSUS_N = 8


def _edge_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def _edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: k for k, e in enumerate(_edge_list(n))}


def mask_of(g: Graph) -> int:
    """Bitmask of a graph's edge set in the canonical-key packing."""
    m = g.n * (g.n - 1) // 2
    idx = _edge_index(g.n)
    mask = 0
    for e in g.edges:
        mask |= 1 << (m - 1 - idx[e])
    return mask


def graph_from_mask(n: int, mask: int) -> Graph:
    m = n * (n - 1) // 2
    edges = tuple(
        e for k, e in enumerate(_edge_list(n)) if (mask >> (m - 1 - k)) & 1
    )
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _perm_sources(n: int) -> np.ndarray:
    """(n!, m) array: row p maps each edge slot to its source slot under
    relabeling by the p-th permutation."""
    edges = _edge_list(n)
    idx = _edge_index(n)
    rows = []
    for p in itertools.permutations(range(n)):
        rows.append([idx[tuple(sorted((p[a], p[b])))] for a, b in edges])
    return np.array(rows, dtype=np.int16)


def _canonical_keys(n: int, masks: list[int]) -> np.ndarray:
    """Canonical key for each mask, via a chunked sweep of all permutations."""
    if n == 1:
        return np.zeros(len(masks), dtype=np.int64)
    m = n * (n - 1) // 2
    perms = _perm_sources(n)
    weights = (1 << (m - 1 - np.arange(m, dtype=np.int64))).astype(np.int64)
    bits = np.zeros((len(masks), m), dtype=np.uint8)
    for i, mask in enumerate(masks):
        for k in range(m):
            bits[i, k] = (mask >> (m - 1 - k)) & 1
    best = np.full(len(masks), 1 << m, dtype=np.int64)
    # keep each (graphs x perms x m) block near ~100 MB
    g_chunk = max(1, min(len(masks), 8192))
    p_chunk = max(1, min(len(perms), (100 * 2**20) // (g_chunk * m) or 1))
    for gs in range(0, len(masks), g_chunk):
        block = bits[gs : gs + g_chunk]
        for ps in range(0, len(perms), p_chunk):
            images = block[:, perms[ps : ps + p_chunk]]
            keys = np.tensordot(images, weights, axes=([2], [0]))
            np.minimum(
                best[gs : gs + g_chunk], keys.min(axis=1), out=best[gs : gs + g_chunk]
            )
    return best


def canonical_key(g: Graph) -> int:
    """Integer encoding of the lexicographically minimal adjacency matrix."""
    if g.n > MAX_CENSUS_N:
        raise ValueError(f"canonical form supported up to n={MAX_CENSUS_N}")
    return int(_canonical_keys(g.n, [mask_of(g)])[0])


def canonical_form(g: Graph) -> Graph:
    return graph_from_mask(g.n, canonical_key(g))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_key(a) == canonical_key(b)


@lru_cache(maxsize=None)
def connected_graph_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on n
    vertices, in canonical form, ordered by canonical key."""
    if not (1 <= n <= MAX_CENSUS_N):
        raise ValueError(f"census supported for 1 <= n <= {MAX_CENSUS_N}")
    if n == 1:
        return (Graph(1, ()),)
    candidates = []
    idx = _edge_index(n)
    m = n * (n - 1) // 2
    for rep in connected_graph_classes(n - 1):
        base = 0
        for e in rep.edges:
            base |= 1 << (m - 1 - idx[e])
        for subset in range(1, 1 << (n - 1)):
            mask = base
            for s in range(n - 1):
                if (subset >> s) & 1:
                    mask |= 1 << (m - 1 - idx[(s, n - 1)])
            candidates.append(mask)
    keys = sorted(set(int(k) for k in _canonical_keys(n, candidates)))
    return tuple(graph_from_mask(n, k) for k in keys)


@lru_cache(maxsize=None)
def tree_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    if not (1 <= n <= MAX_CENSUS_N):
        raise ValueError(f"census supported for 1 <= n <= {MAX_CENSUS_N}")
    if n == 1:
        return (Graph(1, ()),)
    candidates = []
    idx = _edge_index(n)
    m = n * (n - 1) // 2
    for rep in tree_classes(n - 1):
        base = 0
        for e in rep.edges:
            base |= 1 << (m - 1 - idx[e])
        for v in range(n - 1):
            candidates.append(base | 1 << (m - 1 - idx[(v, n - 1)]))
    keys = sorted(set(int(k) for k in _canonical_keys(n, candidates)))
    return tuple(graph_from_mask(n, k) for k in keys)


def _mask_connected(n: int, mask: int, adj_template: list[int]) -> bool:
    m = n * (n - 1) // 2
    adj = adj_template[:]  # adjacency bitsets
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> (m - 1 - k)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    reach = 1
    while True:
        nxt = reach
        r = reach
        v = 0
        while r:
            if r & 1:
                nxt |= adj[v]
            r >>= 1
            v += 1
        if nxt == reach:
            break
        reach = nxt
    return reach == (1 << n) - 1


def generate_connected_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Yield connected graphs on n vertices.

    Without dedup: every labeled connected graph, by ascending edge bitmask.
    With dedup: one representative per isomorphism class (see
    connected_graph_classes).
    """
    if not (1 <= n <= MAX_CENSUS_N):
        raise ValueError(f"census supported for 1 <= n <= {MAX_CENSUS_N}")
    if dedup:
        yield from connected_graph_classes(n)
        return
    if n == 1:
        yield Graph(1, ())
        return
    m = n * (n - 1) // 2
    template = [0] * n
    for mask in range(1 << m):
        if _mask_connected(n, mask, template):
            yield graph_from_mask(n, mask)


def random_connected_graph(rng: Random, n: int) -> Graph:
    """Random connected graph: a random attachment tree plus each remaining
    pair independently with a random density."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    p = rng.uniform(0.0, 0.6)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < p:
                edges.add((i, j))
    g = Graph(n, tuple(sorted(edges)))
    assert is_connected(g)
    return g
