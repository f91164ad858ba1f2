from fractions import Fraction

import pytest

from oddcolor.embedding import euler_characteristic, format_rot
from oddcolor.generators import GeneratorError, subdivide, torus_grid
from oddcolor.graph import girth


@pytest.mark.parametrize("m, n", [(4, 4), (4, 5)])
def test_torus_grid_counts(m, n):
    rs = torus_grid(m, n)
    assert (rs.graph.n, rs.graph.num_edges, len(rs.faces)) == (m * n, 2 * m * n, m * n)
    assert euler_characteristic(rs) == 0
    assert girth(rs.graph) == 4


def test_triangle_free_rejects_3():
    with pytest.raises(GeneratorError):
        torus_grid(3, 3, triangle_free=True)
    assert girth(torus_grid(3, 3).graph) == 3
    with pytest.raises(GeneratorError):
        torus_grid(2, 5)


def test_subdivide_zero_is_identity():
    rs = torus_grid(4, 4)
    assert subdivide(rs, 0, seed=5).rotation == rs.rotation


def test_subdivide_all_gives_8_faces():
    rs = subdivide(torus_grid(4, 4), 1, seed=0)
    assert {f.degree for f in rs.faces} == {8}
    assert len(rs.faces) == 16 and euler_characteristic(rs) == 0


def test_subdivide_golden(data):
    rs = subdivide(torus_grid(4, 4), Fraction(1, 4), seed=7)
    assert format_rot(rs) == (data / "grid44-q7.rot").read_text()
    assert rs.graph.n == 16 + 8


@pytest.mark.parametrize("seed", range(5))
def test_subdivide_keeps_euler_and_girth(seed):
    base = torus_grid(4, 5)
    rs = subdivide(base, Fraction(1, 3), seed)
    assert euler_characteristic(rs) == 0
    assert girth(rs.graph) >= girth(base.graph)


def test_subdivide_fraction_range():
    with pytest.raises(GeneratorError):
        subdivide(torus_grid(4, 4), Fraction(3, 2), 0)
