import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oddcolor.graph import (Graph, Graph6Error, GraphError, degree_profile, encode_graph6, girth,
                            parse_graph6, read_graph6_lines)


def complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_decode_e_q_tilde_o_against_networkx():
    # edge list frozen from networkx.from_graph6_bytes(b"E?~o")
    g = parse_graph6("E?~o")
    assert g.n == 6
    assert g.edges() == [(0, 4), (0, 5), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)]


def test_trivial_graph6_values():
    g = parse_graph6("@")
    assert (g.n, g.num_edges) == (1, 0)
    g = parse_graph6("D??")
    assert (g.n, g.num_edges) == (5, 0)


def test_header_and_lines():
    gs = read_graph6_lines([">>graph6<<C~", "", "Bw"])
    assert [h.n for h in gs] == [4, 3]
    assert gs[0] == complete(4)


@given(graphs(max_n=12))
def test_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


@settings(max_examples=60)
@given(graphs(max_n=12))
def test_encoding_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    assert encode_graph6(g) == nx.to_graph6_bytes(nxg, header=False).decode().strip()


def test_long_size_prefix():
    g = Graph.from_edges(70, [(i, i + 1) for i in range(69)])
    text = encode_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g


@pytest.mark.parametrize("text, offset", [
    ("D?\x07", 2),      # non-printable
    ("D?", 2),          # too few bytes
    ("D???", 3),        # trailing garbage
    ("~", 1),           # truncated long prefix
    ("", 0),
])
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert str(offset) in str(info.value)


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph([[0]])            # loop
    with pytest.raises(GraphError):
        Graph([[1], []])        # asymmetric
    with pytest.raises(GraphError):
        Graph([[1, 1], [0, 0]])  # multi-edge


def test_girth_examples():
    from oddcolor.generators import torus_grid
    assert girth(complete(7)) == 3
    assert girth(torus_grid(4, 4).graph) == 4
    assert girth(Graph.from_edges(3, [(0, 1), (1, 2)])) == math.inf


@settings(max_examples=80)
@given(graphs(max_n=10))
def test_girth_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    assert girth(g) == nx.girth(nxg)


def test_degree_profile():
    from oddcolor.generators import torus_grid
    assert degree_profile(complete(7)).counts == {6: 7}
    assert degree_profile(torus_grid(4, 4).graph).counts == {4: 16}
    star = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    assert degree_profile(star).counts == {5: 1, 1: 5}
