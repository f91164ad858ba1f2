"""Vertex and face classes used by the discharging rules, and structural screens.

Convenience is only meaningful for vertices of degree at least 4.  Vertices of
degree 0, 1 and 3 carry the role ``non-convenient`` in the class table but are
never treated as non-convenient senders or recipients by the rules or screens;
``VertexClass.non_convenient`` encodes that stricter predicate.
"""
from __future__ import annotations

from dataclasses import dataclass

from .embedding import RotationSystem, incidences
from .graph import Graph

TWO_VERTEX = "two-vertex"
CONVENIENT = "convenient"
NON_CONVENIENT = "non-convenient"

BAD = "bad"
SEMI_BAD = "semi-bad"
NON_BAD = "non-bad"


@dataclass(frozen=True)
class VertexClass:
    degree: int
    two_neighbors: int
    convenient: bool
    role: str

    @property
    def non_convenient(self) -> bool:
        """A 4+-vertex that is not convenient."""
        return self.degree >= 4 and not self.convenient

    @property
    def label(self) -> str:
        return f"{self.degree}_{self.two_neighbors}"


@dataclass(frozen=True)
class TwoVertexBadness:
    kind: str
    four_faces: int


@dataclass(frozen=True)
class FaceClass:
    degree: int
    two_vertices: int
    degree_vector: tuple[int, ...]
    vertices: tuple[int, ...]
    labels: tuple[str, ...]

    @property
    def label(self) -> str:
        return f"{self.degree}_{self.two_vertices}"


@dataclass(frozen=True)
class PoorRelation:
    poor: int
    beneficiary: int
    faces: tuple[int, int]


@dataclass(frozen=True)
class ScreenMatch:
    screen: str
    vertices: tuple[int, ...]
    faces: tuple[int, ...] = ()
    detail: str = ""


def classify_vertices(g: Graph) -> dict[int, VertexClass]:
    out = {}
    for v in range(g.n):
        d = g.degree(v)
        twos = sum(1 for u in g.neighbors(v) if g.degree(u) == 2)
        convenient = d >= 4 and (d % 2 == 1 or twos > 0)
        if d == 2:
            role = TWO_VERTEX
        elif convenient:
            role = CONVENIENT
        else:
            role = NON_CONVENIENT
        out[v] = VertexClass(d, twos, convenient, role)
    return out


def classify_two_vertices(rs: RotationSystem) -> dict[int, TwoVertexBadness]:
    """Badness of each 2-vertex, counting 4-face corners with multiplicity."""
    g = rs.graph
    faces = rs.faces
    inc = incidences(rs)
    out = {}
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        fours = sum(1 for f in inc.vertex_faces[v] if faces[f].degree == 4)
        kind = BAD if fours == 2 else SEMI_BAD if fours == 1 else NON_BAD
        out[v] = TwoVertexBadness(kind, fours)
    return out


def classify_faces(rs: RotationSystem, vclass: dict[int, VertexClass] | None = None) -> dict[int, FaceClass]:
    g = rs.graph
    vclass = vclass or classify_vertices(g)
    out = {}
    for f in rs.faces:
        verts = f.vertices
        twos = len({v for v in verts if g.degree(v) == 2})
        out[f.id] = FaceClass(
            f.degree,
            twos,
            tuple(g.degree(v) for v in verts),
            verts,
            tuple(vclass[v].label for v in verts),
        )
    return out


def edge_faces(rs: RotationSystem, u: int, v: int) -> tuple[int, int]:
    """Faces of the darts (u, v) and (v, u); they coincide when one face meets uv twice."""
    fod = rs.faces.face_of_dart
    return fod[(u, v)], fod[(v, u)]


def poor_relations(rs: RotationSystem, vclass: dict[int, VertexClass] | None = None,
                   fclass: dict[int, FaceClass] | None = None) -> list[PoorRelation]:
    g = rs.graph
    vclass = vclass or classify_vertices(g)
    fclass = fclass or classify_faces(rs, vclass)
    out = []
    for v in range(g.n):
        if vclass[v].label != "5_3":
            continue
        for u in sorted(g.neighbors(v)):
            if not vclass[u].non_convenient:
                continue
            f1, f2 = edge_faces(rs, v, u)
            if all(fclass[f].label == "4_1" for f in (f1, f2)):
                out.append(PoorRelation(v, u, (f1, f2)))
    return out


# -- counterexample-shape screens ---------------------------------------------

def screen_adjacent_two_vertices(g: Graph) -> list[ScreenMatch]:
    return [ScreenMatch("adjacent-2-vertices", (u, v)) for u, v in g.edges()
            if g.degree(u) == 2 and g.degree(v) == 2]


def screen_adjacent_convenient(g: Graph, vclass=None) -> list[ScreenMatch]:
    vclass = vclass or classify_vertices(g)
    return [ScreenMatch("adjacent-convenient", (u, v)) for u, v in g.edges()
            if vclass[u].convenient and vclass[v].convenient]


def screen_crowded_low_vertex(g: Graph, vclass=None) -> list[ScreenMatch]:
    """k-vertices, 4 <= k <= 6, with more than 2k-7 neighbors that are 2-vertices or convenient."""
    vclass = vclass or classify_vertices(g)
    out = []
    for v in range(g.n):
        k = g.degree(v)
        if not 4 <= k <= 6:
            continue
        special = sorted(u for u in g.neighbors(v) if g.degree(u) == 2 or vclass[u].convenient)
        if len(special) > 2 * k - 7:
            out.append(ScreenMatch("crowded-k-vertex", (v, *special),
                                   detail=f"{len(special)} > {2 * k - 7}"))
    return out


def screen_small_face_two_vertices(rs: RotationSystem, fclass=None) -> list[ScreenMatch]:
    fclass = fclass or classify_faces(rs)
    out = []
    for fid, fc in fclass.items():
        if fc.degree in (4, 5) and fc.two_vertices >= 2:
            twos = tuple(sorted({v for v in fc.vertices if rs.graph.degree(v) == 2}))
            out.append(ScreenMatch("small-face-two-2-vertices", twos, (fid,), detail=fc.label))
    return out


def is_4040_face(fc: FaceClass) -> bool:
    return fc.degree == 4 and len(set(fc.vertices)) == 4 and all(lab == "4_0" for lab in fc.labels)


def screen_4040_faces(rs: RotationSystem, fclass=None) -> list[ScreenMatch]:
    fclass = fclass or classify_faces(rs)
    return [ScreenMatch("4040-face", fc.vertices, (fid,)) for fid, fc in fclass.items()
            if is_4040_face(fc)]


def run_screens(rs: RotationSystem) -> list[ScreenMatch]:
    g = rs.graph
    vclass = classify_vertices(g)
    fclass = classify_faces(rs, vclass)
    return (
        screen_adjacent_two_vertices(g)
        + screen_adjacent_convenient(g, vclass)
        + screen_crowded_low_vertex(g, vclass)
        + screen_small_face_two_vertices(rs, fclass)
        + screen_4040_faces(rs, fclass)
    )
