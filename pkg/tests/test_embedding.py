import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oddcolor.embedding import (EmbeddingError, RotationSystem, euler_characteristic, face_listing,
                                format_rot, incidences, parse_rot, trace_faces)
from oddcolor.generators import cycle_plane, graph_from_networkx, k7_torus, torus_grid, two_squares_at_vertex


def test_c4_sphere():
    rs = cycle_plane(4)
    assert [f.degree for f in rs.faces] == [4, 4]
    assert euler_characteristic(rs) == 2


def test_grid44_torus():
    rs = torus_grid(4, 4)
    assert len(rs.faces) == 16
    assert {f.degree for f in rs.faces} == {4}
    assert euler_characteristic(rs) == 0


def test_k7_torus_triangulation():
    rs = k7_torus()
    assert len(rs.faces) == 14
    assert {f.degree for f in rs.faces} == {3}
    assert euler_characteristic(rs) == 0


def test_corner_multiplicity_at_cut_vertex():
    rs = two_squares_at_vertex()
    inc = incidences(rs)
    # vertex 0 meets the outer 8-face twice
    assert sorted(rs.faces[f].degree for f in inc.vertex_faces[0]) == [4, 4, 8, 8]
    assert euler_characteristic(rs) == 2


def test_rotation_validation():
    with pytest.raises(EmbeddingError):
        RotationSystem.from_rotation([[1], [0, 0]])
    g = torus_grid(4, 4).graph
    with pytest.raises(EmbeddingError):
        RotationSystem(g, [list(g.neighbors(v))[:-1] for v in range(g.n)])


def test_no_edges_rejected():
    with pytest.raises(EmbeddingError):
        trace_faces(RotationSystem.from_rotation([[]]))


def test_disconnected_euler_rejected():
    rs = RotationSystem.from_rotation([[1], [0], [3], [2]])
    with pytest.raises(EmbeddingError):
        euler_characteristic(rs)


def test_rot_round_trip_and_comments():
    rs = torus_grid(4, 5)
    text = "# grid\n\n" + format_rot(rs)
    again = parse_rot(text.splitlines())
    assert again.rotation == rs.rotation


@pytest.mark.parametrize("bad", ["0 1 2", "x: 1", "0: 1\n0: 1", "0: -1"])
def test_rot_errors(bad):
    with pytest.raises(EmbeddingError):
        parse_rot(bad.splitlines())


def test_face_listing_format():
    assert face_listing(cycle_plane(4))[0] == "face 0 (deg 4): 0 1 2 3"


@st.composite
def random_embeddings(draw):
    n = draw(st.integers(3, 9))
    p = draw(st.floats(0.3, 0.9))
    seed = draw(st.integers(0, 10**6))
    nxg = nx.gnp_random_graph(n, p, seed=seed)
    if not nx.is_connected(nxg) or nxg.number_of_edges() == 0:
        nxg = nx.path_graph(n)
    g = graph_from_networkx(nxg)
    rng = random.Random(seed)
    rot = []
    for v in range(g.n):
        nb = list(g.neighbors(v))
        rng.shuffle(nb)
        rot.append(nb)
    return RotationSystem(g, rot)


@settings(max_examples=100)
@given(random_embeddings())
def test_tracing_invariants(rs):
    g = rs.graph
    faces = rs.faces
    assert sum(f.degree for f in faces) == 2 * g.num_edges
    assert len(faces.face_of_dart) == 2 * g.num_edges
    chi = euler_characteristic(rs)
    assert chi <= 2 and chi % 2 == 0
    inc = incidences(rs)
    for v in range(g.n):
        assert len(inc.vertex_faces[v]) == g.degree(v)
