import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oddcolor.coloring import (Coloring, ColoringError, check_odd, format_coloring, is_odd_coloring,
                               min_odd_color, odd_color_set, parse_coloring)
from oddcolor.graph import Graph


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def naive_odd(g, colors):
    """Reference predicate written straight from the definition."""
    if any(colors[u] == colors[v] for u, v in g.edges()):
        return False
    for v in range(g.n):
        if g.degree(v) == 0:
            continue
        counts = Counter(colors[u] for u in g.neighbors(v))
        if not any(c % 2 for c in counts.values()):
            return False
    return True


def test_k2():
    assert is_odd_coloring(Graph.from_edges(2, [(0, 1)]), Coloring.of([1, 2])).passed


def test_c4_1212_fails_everywhere():
    rep = is_odd_coloring(cycle(4), Coloring.of([1, 2, 1, 2]))
    assert not rep.passed
    assert rep.violations == [0, 1, 2, 3]
    assert rep.proper_violations == []


def test_c6_123123():
    assert is_odd_coloring(cycle(6), Coloring.of([1, 2, 3, 1, 2, 3])).passed


def test_improper_reported():
    rep = is_odd_coloring(cycle(3), Coloring.of([1, 1, 2]))
    assert rep.proper_violations == [(0, 1)]


def test_isolated_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    c = Coloring.of([1, 2, 1])
    assert is_odd_coloring(g, c).passed
    with pytest.raises(ColoringError):
        odd_color_set(g, c, 2)


def test_odd_set_and_min():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    c = Coloring.of([1, 2, 2, 3])
    assert odd_color_set(g, c, 0) == {3}
    assert min_odd_color(g, c.colors, 0) == 3


def test_coloring_validation():
    with pytest.raises(ColoringError):
        Coloring((1, 4), 3)
    with pytest.raises(ColoringError):
        Coloring((0, 1), 3)


def test_cycles_exhaustive():
    # on a cycle parity reduces to: proper and the two neighbors differ
    for n in range(3, 10):
        g = cycle(n)
        for colors in itertools.product((1, 2, 3), repeat=n):
            expect = all(colors[i] != colors[(i + 1) % n] and colors[i - 1] != colors[(i + 1) % n]
                         for i in range(n))
            assert is_odd_coloring(g, Coloring(colors, 3)).passed == expect


@st.composite
def colored_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    colors = draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    return Graph.from_edges(n, edges), colors


@given(colored_graphs())
def test_predicate_matches_reference(gc):
    g, colors = gc
    assert is_odd_coloring(g, Coloring(tuple(colors), 4)).passed == naive_odd(g, colors)
    assert check_odd(g, colors) == naive_odd(g, colors)


def test_coloring_file_round_trip():
    c = Coloring.of([1, 2, 3, 1])
    assert parse_coloring(format_coloring(c).splitlines(), 4, 3) == c


@pytest.mark.parametrize("text", ["0 1\n0 2", "0 1\n2 1", "0 a", "0 1 2"])
def test_coloring_file_errors(text):
    with pytest.raises(ColoringError):
        parse_coloring(text.splitlines(), 3)
