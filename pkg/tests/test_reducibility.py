from fractions import Fraction

import networkx as nx
import pytest

from oddcolor.coloring import check_odd
from oddcolor.generators import (cubic_corpus, graph_from_networkx, k2t_corpus, poor_fixture, subdivide,
                                 subdivided_grids, torus_grid, two_path_fixture, twelve_vertex_fixture)
from oddcolor.graph import Graph
from oddcolor.reducibility import (FACE45, FACE4040, NBR53, NO3V, PATH4F, TOOL1, TOOL2, TOOL3, VERT12,
                                   apply_surgery, find_configurations, run_lemma_harness, run_pipeline)


@pytest.fixture(scope="module")
def petersen():
    return graph_from_networkx(nx.petersen_graph())


def test_petersen_no3v_matches(petersen):
    matches = find_configurations(petersen, NO3V)
    assert len(matches) == 10
    red = apply_surgery(petersen, matches[0])
    assert red.graph.n == 9
    assert sorted(red.graph.degree(v) for v in range(9)) == [2, 2, 2] + [3] * 6


def test_p4_tool1_single_match():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert [m.describe() for m in find_configurations(p4, TOOL1)] == ["v=1 u=2 v'=0 u'=3"]


def test_tool2_split():
    rs = subdivide(torus_grid(4, 5), Fraction(1, 4), 0)
    m = find_configurations(rs, TOOL2)[0]
    red = apply_surgery(rs, m)
    u, v = m["u"], m["v"]
    w = rs.graph.n
    assert red.graph.n == w + 1
    assert not red.graph.has_edge(u, v)
    assert set(red.graph.neighbors(w)) == {u, v}


def test_4040_surgery_shape():
    g = torus_grid(4, 4)
    matches = find_configurations(g, FACE4040)
    assert len(matches) == 16
    red = apply_surgery(g, matches[0])
    assert (red.graph.n, red.graph.num_edges) == (16 - 2 + 6, 32 - 7 + 12)
    paths = [s for s in red.surgeries if s.kind == "add-2-path"]
    assert len(paths) == 6
    assert all(red.graph.degree(s.produced[0]) == 2 for s in paths)


def test_petersen_harness(petersen):
    s = run_lemma_harness([("petersen", petersen)], NO3V, trials=10, seed=0)
    assert (s.passed, s.failed, s.scripted) == (10, 0, 10)


def test_grid_4040_harness():
    s = run_lemma_harness([("grid4x4", torus_grid(4, 4))], FACE4040)
    assert (s.matched, s.passed) == (16, 16)
    assert all(r.extension.method == "search" for _, r in s.reports)


def test_scripted_lemmas_small():
    cases = [
        (TOOL1, subdivided_grids([(4, 4)], Fraction(1, 2), range(2), rounds=2)),
        (TOOL2, subdivided_grids([(4, 5)], Fraction(1, 4), range(2))),
        (FACE45, k2t_corpus(range(2, 7))),
        (NO3V, cubic_corpus()[:3]),
    ]
    for lemma, corpus in cases:
        s = run_lemma_harness([(e.name, e.source) for e in corpus], lemma)
        assert s.matched > 0
        assert s.passed == s.matched == s.scripted, s.line()


def test_fixture_lemmas():
    assert run_lemma_harness([("tp", two_path_fixture())], PATH4F).passed == 1
    s = run_lemma_harness([("tp", two_path_fixture()), ("pf", poor_fixture())], NBR53)
    assert s.failed == 0 and s.passed >= 1


def test_twelve_vertex_detection_only():
    rs = twelve_vertex_fixture()
    (m,) = find_configurations(rs, VERT12)
    rep = run_pipeline(rs, m)
    assert rep.status == "detected"
    assert rep.note.startswith("v0=0 ")


def test_lifted_colorings_are_verified(petersen):
    m = find_configurations(petersen, NO3V)[3]
    rep = run_pipeline(petersen, m)
    assert rep.verified and check_odd(petersen, rep.extension.colors)


def test_tool3_parity_gap():
    # a 4-vertex whose neighbors use two colors twice each has no odd color,
    # however few colors are forbidden around it
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert not check_odd(star, [3, 1, 1, 2, 2])


def test_tool3_failures_write_reproducers(tmp_path):
    corpus = subdivided_grids([(4, 5)], Fraction(1, 4), [0])
    s = run_lemma_harness([(e.name, e.source) for e in corpus], TOOL3, reproducer_dir=tmp_path)
    assert s.failed >= 1
    stems = {p.stem for p in tmp_path.iterdir()}
    for stem in stems:
        assert {p.suffix for p in tmp_path.glob(stem + ".*")} == {".g6", ".rot", ".match", ".oracle"}
