"""Graph core: parsing, connectivity, bridges, blocks, path enumeration."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfcgraph.census import connected_graph_classes, random_connected_graph
from cfcgraph.graphs import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    Path,
    PathCapExceeded,
    block_decomposition,
    complete_graph,
    cycle_graph,
    enumerate_simple_paths,
    find_bridges,
    format_graph,
    is_connected,
    parse_graph,
    path_graph,
    path_through_edge,
    require_connected,
    star_graph,
)


def bfs_reachable(n: int, edges, start: int = 0) -> set[int]:
    """Independent reachability oracle on an edge list."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def oracle_bridges(g: Graph) -> set[int]:
    """An edge is a bridge iff deleting it breaks reachability."""
    out = set()
    for eid, (a, b) in enumerate(g.edges):
        rest = [e for i, e in enumerate(g.edges) if i != eid]
        if b not in bfs_reachable(g.n, rest, start=a):
            out.add(eid)
    return out


# --- construction and normalization --------------------------------------

def test_edge_endpoints_normalized_ids_keep_input_order():
    g = Graph(4, ((3, 2), (1, 0), (0, 2)))
    assert g.edges == ((2, 3), (0, 1), (0, 2))
    assert g.m == 3
    assert g.edge_id(2, 0) == 2
    assert g.has_edge(3, 2) and not g.has_edge(1, 2)


def test_rejects_self_loops_duplicates_and_range():
    with pytest.raises(ValueError):
        Graph(3, ((0, 0),))
    with pytest.raises(ValueError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Graph(3, ((0, 3),))


def test_degree_and_adjacency():
    g = star_graph(5)
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))
    assert [w for w, _ in g.adjacency[0]] == [1, 2, 3, 4]


def test_relabel_keeps_structure():
    g = path_graph(4)
    h = g.relabel((3, 2, 1, 0))
    assert h.edges == ((0, 1), (1, 2), (2, 3))
    with pytest.raises(ValueError):
        g.relabel((0, 0, 1, 2))


# --- file format ----------------------------------------------------------

def test_parse_p3_and_c3():
    p3 = parse_graph("3 2\n0 1\n1 2")
    assert p3.edges == ((0, 1), (1, 2))
    c3 = parse_graph("3 3\n0 1\n1 2\n0 2")
    assert c3.m == 3


def test_parse_accepts_comments_and_blank_lines():
    g = parse_graph("# a triangle\n3 3\n\n0 1  # first\n1 2\n0 2\n")
    assert g.m == 3


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("3\n0 1", "line 1"),
        ("3 2\n0 1\n0 1", "line 3"),
        ("3 1\n0 0", "line 2"),
        ("3 1\n0 5", "line 2"),
        ("3 2\n0 1", "declared 2 edges"),
        ("3 1\n0 1\n1 2", "line 3"),
        ("x 1\n0 1", "line 1"),
    ],
)
def test_parse_errors_carry_line_numbers(text, fragment):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert fragment in str(err.value)


def test_format_parse_roundtrip():
    for g in [path_graph(5), complete_graph(4), star_graph(6)]:
        assert parse_graph(format_graph(g)) == g


# --- connectivity ---------------------------------------------------------

def test_is_connected_examples():
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(4, ((0, 1), (2, 3))))
    assert is_connected(Graph(1, ()))


def test_require_connected_raises():
    with pytest.raises(DisconnectedGraphError):
        require_connected(Graph(4, ((0, 1), (2, 3))))


# --- bridges and blocks ---------------------------------------------------

def test_bridges_on_named_families():
    for n in range(2, 8):
        assert find_bridges(path_graph(n)) == frozenset(range(n - 1))
    for n in range(3, 8):
        assert find_bridges(cycle_graph(n)) == frozenset()
    assert find_bridges(complete_graph(5)) == frozenset()


def test_bridges_match_deletion_oracle_on_census():
    for n in range(2, 6):
        for g in connected_graph_classes(n):
            assert set(find_bridges(g)) == oracle_bridges(g), g.edges


def test_bridges_match_deletion_oracle_random():
    rng = random.Random(7)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 9))
        assert set(find_bridges(g)) == oracle_bridges(g), g.edges


def test_two_triangles_joined_by_an_edge():
    g = Graph(6, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))
    d = block_decomposition(g)
    assert d.bridges == frozenset({g.edge_id(2, 3)})
    assert sorted(sorted(b) for b in d.blocks) == [[0, 1, 2], [4, 5, 6]]


def test_k4_single_block():
    d = block_decomposition(complete_graph(4))
    assert d.bridges == frozenset()
    assert [sorted(b) for b in d.blocks] == [[0, 1, 2, 3, 4, 5]]


def test_star_structure():
    d = block_decomposition(star_graph(5))
    assert len(d.bridges) == 4
    assert d.blocks == ()
    assert len(set(d.component_of)) == 5


def test_block_partition_invariant():
    # bridges and block edge-sets partition the edge set, on every class
    for n in range(2, 7):
        for g in connected_graph_classes(n):
            d = block_decomposition(g)
            seen = set(d.bridges)
            for b in d.blocks:
                assert not (seen & set(b))
                seen |= set(b)
            assert seen == set(range(g.m))
            assert d.bridges == find_bridges(g)
            for eid in range(g.m):
                a, b = g.edges[eid]
                same = d.component_of[a] == d.component_of[b]
                assert same == (eid not in d.bridges)


# --- path enumeration -----------------------------------------------------

def oracle_paths(g: Graph, u: int, v: int) -> set[tuple[int, ...]]:
    """All simple u-v vertex sequences by brute force over permutations."""
    others = [x for x in range(g.n) if x not in (u, v)]
    found = set()
    for r in range(len(others) + 1):
        for mid in itertools.permutations(others, r):
            seq = (u, *mid, v)
            if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                found.add(seq)
    return found


def test_unique_path_in_tree():
    paths = list(enumerate_simple_paths(path_graph(4), 0, 3))
    assert len(paths) == 1
    assert paths[0].vertices == (0, 1, 2, 3)
    assert paths[0].edges == (0, 1, 2)


def test_two_arcs_in_cycle():
    g = cycle_graph(5)
    for u in range(5):
        for v in range(u + 1, 5):
            assert len(list(enumerate_simple_paths(g, u, v))) == 2


def test_k4_has_five_paths_per_pair():
    g = complete_graph(4)
    paths = list(enumerate_simple_paths(g, 0, 1))
    assert len(paths) == 5
    assert {p.vertices for p in paths} == oracle_paths(g, 0, 1)
    lengths = sorted(len(p) for p in paths)
    assert lengths == [1, 2, 2, 3, 3]


def test_paths_match_oracle_on_census():
    for n in range(2, 6):
        for g in connected_graph_classes(n):
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    got = [p.vertices for p in enumerate_simple_paths(g, u, v)]
                    assert len(got) == len(set(got))
                    assert set(got) == oracle_paths(g, u, v)


def test_path_edges_are_consistent():
    for p in enumerate_simple_paths(complete_graph(5), 0, 4):
        g = complete_graph(5)
        for (a, b), eid in zip(zip(p.vertices, p.vertices[1:]), p.edges):
            assert g.edge_id(a, b) == eid


def test_cap_triggers_only_beyond_the_cap():
    g = cycle_graph(4)
    assert len(list(enumerate_simple_paths(g, 0, 2, cap=2))) == 2
    with pytest.raises(PathCapExceeded):
        list(enumerate_simple_paths(g, 0, 2, cap=1))


def test_path_endpoint_validation():
    with pytest.raises(ValueError):
        list(enumerate_simple_paths(path_graph(3), 1, 1))
    with pytest.raises(ValueError):
        list(enumerate_simple_paths(path_graph(3), 0, 7))


# --- path through a required edge ----------------------------------------

def test_path_through_edge_on_c4():
    g = cycle_graph(4)
    p = path_through_edge(g, 0, 1, (2, 3))
    assert p.vertices == (0, 3, 2, 1)


def test_path_through_edge_on_k4():
    g = complete_graph(4)
    p = path_through_edge(g, 0, 1, (2, 3))
    assert p.vertices in {(0, 2, 3, 1), (0, 3, 2, 1)}
    assert g.edge_id(2, 3) in p.edges


def test_path_through_edge_on_c5_long_arc():
    g = cycle_graph(5)
    p = path_through_edge(g, 0, 2, (3, 4))
    assert p.vertices == (0, 4, 3, 2)


def test_path_through_edge_rejects_bridges_and_outsiders():
    g = Graph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4)))
    with pytest.raises(ValueError):
        path_through_edge(g, 0, 4, (2, 3))
    with pytest.raises(ValueError):
        path_through_edge(g, 0, 4, (0, 1))


def test_path_through_edge_exists_across_census_blocks():
    # inside any 2-connected block, every vertex pair reaches through
    # every block edge
    for n in range(3, 6):
        for g in connected_graph_classes(n):
            d = block_decomposition(g)
            for block in d.blocks:
                vertices = sorted({x for eid in block for x in g.edges[eid]})
                for u, v in itertools.combinations(vertices, 2):
                    for eid in block:
                        p = path_through_edge(g, u, v, eid)
                        assert eid in p.edges
                        assert p.vertices[0] == u and p.vertices[-1] == v


# --- Path objects ---------------------------------------------------------

def test_path_from_vertices():
    g = path_graph(4)
    p = Path.from_vertices(g, (0, 1, 2))
    assert p.edges == (0, 1)
    with pytest.raises(KeyError):
        Path.from_vertices(g, (0, 2))


def test_path_join():
    g = path_graph(5)
    a = Path.from_vertices(g, (0, 1, 2))
    b = Path.from_vertices(g, (2, 3, 4))
    assert a.join(b).vertices == (0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        a.join(Path.from_vertices(g, (3, 4)))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=2, max_value=9))
def test_random_graphs_are_connected_and_bridges_agree(seed, n):
    g = random_connected_graph(random.Random(seed), n)
    assert g.n == n
    assert is_connected(g)
    assert set(find_bridges(g)) == oracle_bridges(g)
