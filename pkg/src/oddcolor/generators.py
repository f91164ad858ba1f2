"""Corpus generators: torus grids, subdivisions and small fixture embeddings."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .embedding import RotationSystem
from .graph import Graph


class GeneratorError(ValueError):
    pass


def torus_grid(m: int, n: int, triangle_free: bool = False) -> RotationSystem:
    """C_m x C_n on the torus; vertex (i, j) has id i*n + j and rotation N, E, S, W."""
    if m < 3 or n < 3:
        raise GeneratorError("torus grid needs m, n >= 3")
    if triangle_free and 3 in (m, n):
        raise GeneratorError("C_3 factor creates triangles")
    vid = lambda i, j: (i % m) * n + (j % n)
    rotation = []
    for i in range(m):
        for j in range(n):
            rotation.append([vid(i - 1, j), vid(i, j + 1), vid(i + 1, j), vid(i, j - 1)])
    return RotationSystem.from_rotation(rotation)


def subdivide_edges(rs: RotationSystem, edges) -> RotationSystem:
    """Put a new 2-vertex on each listed edge, in place inside both rotations.

    New vertices get ids n, n+1, ... in the order the edges are listed.
    """
    rotation = [list(r) for r in rs.rotation]
    for u, v in edges:
        w = len(rotation)
        rotation[u][rotation[u].index(v)] = w
        rotation[v][rotation[v].index(u)] = w
        rotation.append([u, v])
    return RotationSystem.from_rotation(rotation)


def subdivide(rs: RotationSystem, fraction: Fraction | str | float, seed: int = 0) -> RotationSystem:
    """Subdivide floor(fraction * |E|) edges chosen by a seeded RNG."""
    fraction = Fraction(fraction)
    if not 0 <= fraction <= 1:
        raise GeneratorError("fraction must lie in [0, 1]")
    edges = rs.graph.edges()
    count = int(fraction * len(edges))
    chosen = sorted(random.Random(seed).sample(edges, count))
    return subdivide_edges(rs, chosen)


def k7_torus() -> RotationSystem:
    """The triangular embedding of K_7 on the torus: rotation at i is i+1, i+3, i+2, i+6, i+4, i+5."""
    steps = (1, 3, 2, 6, 4, 5)
    return RotationSystem.from_rotation([[(i + s) % 7 for s in steps] for i in range(7)])


def cycle_plane(n: int = 4) -> RotationSystem:
    return RotationSystem.from_rotation([[(i - 1) % n, (i + 1) % n] for i in range(n)])


def two_squares_at_vertex() -> RotationSystem:
    """Two 4-cycles 0-1-2-3 and 0-4-5-6 glued at vertex 0, embedded in the plane."""
    return RotationSystem.from_rotation([
        [1, 3, 4, 6], [2, 0], [3, 1], [0, 2], [5, 0], [6, 4], [0, 5],
    ])


def k2t_plane(t: int) -> RotationSystem:
    """K_{2,t}: hubs 0 and 1 joined by t paths through 2-vertices 2..t+1.

    All t faces are 4-faces [0, w_i, 1, w_{i+1}], so every 2-vertex is bad.
    """
    if t < 2:
        raise GeneratorError("K_{2,t} fixture needs t >= 2")
    ws = list(range(2, t + 2))
    return RotationSystem.from_rotation([ws, ws[::-1], *([[0, 1]] * t)])


def plane_from_coordinates(points, edges) -> RotationSystem:
    """Rotation system of a straight-line drawing; neighbors ordered clockwise."""
    nbrs: list[list[int]] = [[] for _ in points]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def angle(v, u):
        (x0, y0), (x1, y1) = points[v], points[u]
        return math.atan2(y1 - y0, x1 - x0)

    return RotationSystem.from_rotation(
        [sorted(ns, key=lambda u: -angle(v, u)) for v, ns in enumerate(nbrs)]
    )


def semi_bad_fixture() -> RotationSystem:
    """Hubs 0, 1 joined by 2-paths through 2, 3, 4 and by the path 0-5-6-1.

    Vertex 3 sits between two 4-faces (bad); vertices 2 and 4 each sit
    between a 4-face and a 5-face through 5 and 6 (semi-bad).
    """
    points = [(0, 1), (0, -1), (-2, 0), (-1, 0), (1, 0), (2, 0.5), (2, -0.5)]
    edges = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 6), (6, 1)]
    return plane_from_coordinates(points, edges)


def poor_fixture() -> RotationSystem:
    """A plane graph in which the 5_3-vertex 1 is poor to the 4-vertex 0.

    The two faces at edge 0-1 are 4-faces through the 2-vertices 4 and 5
    respectively, each with no other 2-vertex.
    """
    # 0=u 1=v 2=a 3=c 4=w1 5=w2 6=w3 7=x 8=b
    points = [(0, 0), (-2, 0), (0, 2), (0, -1), (-1, 1), (-1, -1), (-2, 2), (-2, -3), (2, 0)]
    edges = [
        (0, 1), (0, 2), (0, 8), (0, 3),
        (1, 4), (4, 2), (1, 5), (5, 3), (1, 6), (6, 2), (1, 7), (7, 3),
        (2, 8), (3, 8), (7, 8),
    ]
    return plane_from_coordinates(points, edges)


def two_path_fixture() -> RotationSystem:
    """2-vertex 2 between the 5_3-vertices 0 and 1, with 4-faces on both sides.

    The 4-faces are [0 2 1 3] and [1 2 0 4]; hubs 9 and 10 collect the other
    2-neighbors of 0 and 1.
    """
    # 0=u 1=v 2=w 3=x 4=y 5,6=p 7,8=q 9=h 10=h'
    points = [(-1, 0), (1, 0), (0, 0), (0, 2), (0, -2),
              (-2, 0.5), (-2, -0.5), (2, 0.5), (2, -0.5), (-3, 0), (3, 0)]
    edges = [
        (0, 2), (2, 1), (0, 3), (0, 4), (1, 3), (1, 4),
        (0, 5), (5, 9), (0, 6), (6, 9), (1, 7), (7, 10), (1, 8), (8, 10),
        (9, 3), (9, 4), (10, 3), (10, 4),
    ]
    return plane_from_coordinates(points, edges)


def twelve_vertex_fixture() -> RotationSystem:
    """A 12-vertex 0 whose twelve neighbors are 5_3-vertices poor to it.

    Ring vertices 1..12 surround 0; 2-vertex 12+i joins ring vertices i and
    i+1, 2-vertex 24+i joins ring vertex i to the outer hub 37.
    """
    k = 12
    ring = [1 + i for i in range(k)]
    between = [13 + i for i in range(k)]
    spokes = [25 + i for i in range(k)]
    hub = 37
    step = 2 * math.pi / k
    points = [(0.0, 0.0)]
    points += [(2 * math.cos(i * step), 2 * math.sin(i * step)) for i in range(k)]
    points += [(2.6 * math.cos((i + 0.5) * step), 2.6 * math.sin((i + 0.5) * step)) for i in range(k)]
    points += [(3 * math.cos((i - 0.2) * step), 3 * math.sin((i - 0.2) * step)) for i in range(k)]
    nbrs: dict[int, list[int]] = {v: [] for v in range(hub + 1)}
    edges = [(0, r) for r in ring]
    for i in range(k):
        edges += [(ring[i], between[i]), (between[i], ring[(i + 1) % k]),
                  (ring[i], spokes[i]), (spokes[i], hub), (ring[i], hub)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def direction(v, u):
        # the hub sits at infinity: edges to it leave radially outward
        if u == hub:
            return math.atan2(points[v][1], points[v][0])
        return math.atan2(points[u][1] - points[v][1], points[u][0] - points[v][0])

    rotation = [sorted(nbrs[v], key=lambda u: -direction(v, u)) for v in range(hub)]
    # clockwise around the point at infinity is counterclockwise seen from the origin
    rotation.append(sorted(nbrs[hub], key=lambda u: direction(u, hub)))
    return RotationSystem.from_rotation(rotation)


def graph_from_networkx(nxg) -> Graph:
    import networkx as nx

    nxg = nx.convert_node_labels_to_integers(nxg, ordering="sorted")
    return Graph.from_edges(nxg.number_of_nodes(), nxg.edges())


# -- named corpora ---------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    source: object  # Graph or RotationSystem
    provenance: str


CUBIC_NX = ("petersen_graph", "dodecahedral_graph", "desargues_graph", "heawood_graph",
            "moebius_kantor_graph", "cubical_graph", "pappus_graph", "frucht_graph",
            "truncated_tetrahedron_graph")


def cubic_corpus() -> list[CorpusEntry]:
    """Small named cubic graphs; every vertex is a 3-vertex."""
    import networkx as nx

    return [CorpusEntry(name.removesuffix("_graph"), graph_from_networkx(getattr(nx, name)()), f"networkx.{name}")
            for name in CUBIC_NX]


def torus_grids(sizes=(4, 5, 6)) -> list[CorpusEntry]:
    return [CorpusEntry(f"grid{m}x{n}", torus_grid(m, n), f"torus_grid({m},{n})")
            for m in sizes for n in sizes if m <= n]


def subdivided_grids(sizes, fraction, seeds, rounds: int = 1) -> list[CorpusEntry]:
    """Grids subdivided ``rounds`` times at ``fraction``; round r uses seed s + 100*r."""
    out = []
    fraction = Fraction(fraction)
    for m, n in sizes:
        for s in seeds:
            rs = torus_grid(m, n)
            for r in range(rounds):
                rs = subdivide(rs, fraction, s + 100 * r)
            out.append(CorpusEntry(f"grid{m}x{n}-{fraction}x{rounds}-s{s}", rs,
                                   f"subdivide^{rounds}(torus_grid({m},{n}), {fraction}, seed {s})"))
    return out


def k2t_corpus(ts=range(2, 15)) -> list[CorpusEntry]:
    return [CorpusEntry(f"k2,{t}", k2t_plane(t), f"k2t_plane({t})") for t in ts]
