"""Verifier, constructive coloring, ruler coloring, file format, DOT."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfcgraph.census import connected_graph_classes, random_connected_graph
from cfcgraph.coloring import (
    EdgeColoring,
    bridge_block_coloring,
    coloring_from_map,
    colors_used,
    format_coloring,
    is_conflict_free_connected,
    is_conflict_free_path,
    parse_coloring,
    ruler_path_coloring,
    to_dot,
)
from cfcgraph.graphs import (
    Graph,
    Path,
    complete_graph,
    cycle_graph,
    find_bridges,
    path_graph,
    star_graph,
)


def path_on(g: Graph, *vertices: int) -> Path:
    return Path.from_vertices(g, vertices)


# --- conflict-free path predicate ----------------------------------------

def test_single_color_twice_is_not_conflict_free():
    g = path_graph(3)
    assert not is_conflict_free_path(path_on(g, 0, 1, 2), EdgeColoring((1, 1)))


def test_one_color_once_is_conflict_free():
    g = path_graph(4)
    assert is_conflict_free_path(path_on(g, 0, 1, 2, 3), EdgeColoring((1, 2, 1)))


def test_single_edge_path_is_conflict_free():
    g = path_graph(2)
    assert is_conflict_free_path(path_on(g, 0, 1), EdgeColoring((1,)))


def test_missing_color_raises():
    g = path_graph(3)
    with pytest.raises(ValueError):
        is_conflict_free_path(path_on(g, 0, 1, 2), EdgeColoring((1,)))


# --- verifier -------------------------------------------------------------

def test_k4_all_one_color_is_ok():
    rep = is_conflict_free_connected(complete_graph(4), EdgeColoring((1,) * 6))
    assert rep.ok
    assert rep.failure_pair is None
    assert len(rep.witness) == 6
    for (u, v), p in rep.witness.items():
        assert (p.vertices[0], p.vertices[-1]) == (u, v)


def test_p3_monochromatic_fails_at_the_endpoints():
    rep = is_conflict_free_connected(path_graph(3), EdgeColoring((1, 1)))
    assert not rep.ok
    assert rep.witness is None
    assert rep.failure_pair == (0, 2)


def test_c4_with_one_special_edge_is_ok():
    rep = is_conflict_free_connected(cycle_graph(4), EdgeColoring((1, 2, 2, 2)))
    assert rep.ok


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        is_conflict_free_connected(path_graph(3), EdgeColoring((1,)))


def test_witness_paths_are_conflict_free():
    g = cycle_graph(6)
    coloring = bridge_block_coloring(g)
    rep = is_conflict_free_connected(g, coloring)
    for p in rep.witness.values():
        assert is_conflict_free_path(p, coloring)


# --- EdgeColoring ---------------------------------------------------------

def test_colors_must_be_positive_integers():
    with pytest.raises(ValueError):
        EdgeColoring((0, 1))
    with pytest.raises(ValueError):
        EdgeColoring((1, -2))


def test_k_counts_distinct_colors():
    assert EdgeColoring((4, 4, 9)).k == 2


def test_canonical_relabels_to_first_use_order():
    assert EdgeColoring((5, 3, 5, 1)).canonical().colors == (1, 2, 1, 3)
    c = EdgeColoring((1, 2, 1, 3))
    assert c.canonical() == c


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=12))
def test_canonical_is_idempotent_and_preserves_k(colors):
    c = EdgeColoring(tuple(colors))
    canon = c.canonical()
    assert canon.k == c.k
    assert canon.canonical() == canon
    assert max(canon.colors) == canon.k


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_verifier_is_invariant_under_color_permutation(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(2, 6))
    colors = tuple(rng.randint(1, 3) for _ in range(g.m))
    perm = {1: 2, 2: 3, 3: 1}
    a = is_conflict_free_connected(g, EdgeColoring(colors))
    b = is_conflict_free_connected(g, EdgeColoring(tuple(perm[c] for c in colors)))
    assert a.ok == b.ok
    assert a.failure_pair == b.failure_pair


# --- constructive bridge/block coloring -----------------------------------

def test_cycle_uses_two_colors():
    c = bridge_block_coloring(cycle_graph(5))
    assert colors_used(c) == (1, 2)
    assert is_conflict_free_connected(cycle_graph(5), c).ok


def test_star_uses_one_color_per_bridge():
    c = bridge_block_coloring(star_graph(5))
    assert sorted(c.colors) == [1, 2, 3, 4]


def test_two_triangles_with_a_bridge():
    g = Graph(6, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))
    c = bridge_block_coloring(g)
    assert c.k == 2
    eid = g.edge_id(2, 3)
    block_a = sorted(c.colors[g.edge_id(a, b)] for a, b in [(0, 1), (0, 2), (1, 2)])
    assert block_a == [1, 2, 2]
    assert c.colors[eid] == 1


def test_single_edge_graph():
    c = bridge_block_coloring(path_graph(2))
    assert c.colors == (1,)


def test_respects_bound_on_small_census():
    for n in range(2, 7):
        for g in connected_graph_classes(n):
            c = bridge_block_coloring(g)
            assert c.k <= max(2, len(find_bridges(g)))


# --- ruler coloring -------------------------------------------------------

def test_ruler_small_values():
    assert ruler_path_coloring(2).colors == (1,)
    assert ruler_path_coloring(4).colors == (1, 2, 1)
    assert ruler_path_coloring(5).colors == (1, 2, 1, 3)


def test_ruler_color_count_is_log2_ceiling():
    for n in range(2, 130):
        c = ruler_path_coloring(n)
        assert c.k == (n - 1).bit_length()


def test_ruler_is_a_prefix_sequence():
    big = ruler_path_coloring(200).colors
    for n in range(2, 200):
        assert ruler_path_coloring(n).colors == big[: n - 1]


def test_ruler_verifies_on_moderate_paths():
    for n in (2, 3, 5, 8, 16, 33):
        g = path_graph(n)
        assert is_conflict_free_connected(g, ruler_path_coloring(n)).ok


def test_ruler_needs_at_least_two_vertices():
    with pytest.raises(ValueError):
        ruler_path_coloring(1)


# --- coloring file format and DOT ----------------------------------------

def test_coloring_roundtrip():
    c = EdgeColoring((1, 2, 1, 3))
    assert parse_coloring(format_coloring(c), 4) == c


def test_parse_coloring_accepts_comments_any_order():
    text = "# optimal\n2 1\n0 1\n1 2\n"
    assert parse_coloring(text, 3).colors == (1, 2, 1)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("0 1\n0 2\n", "line 2"),
        ("0 1 9\n", "line 1"),
        ("5 1\n", "line 1"),
        ("0 0\n", "line 1"),
        ("0 1\n", "without a color"),
    ],
)
def test_parse_coloring_errors(text, fragment):
    with pytest.raises(ValueError) as err:
        parse_coloring(text, 2)
    assert fragment in str(err.value)


def test_coloring_from_map():
    c = coloring_from_map([(1, 2), (0, 1)], 2)
    assert c.colors == (1, 2)
    with pytest.raises(ValueError):
        coloring_from_map([(0, 1)], 2)


def test_dot_output_mentions_every_edge_and_color():
    g = cycle_graph(4)
    c = EdgeColoring((1, 2, 2, 2))
    dot = to_dot(g, c)
    assert dot.startswith("graph G {")
    for u, v in g.edges:
        assert f"{u} -- {v}" in dot
    assert 'label="1"' in dot and 'label="2"' in dot
    plain = to_dot(g)
    assert "label" not in plain
    with pytest.raises(ValueError):
        to_dot(g, EdgeColoring((1,)))
