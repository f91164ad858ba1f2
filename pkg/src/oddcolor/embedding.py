"""Rotation systems, face tracing and the ``.rot`` embedding format.

A dart is an ordered pair ``(u, v)`` for an edge uv.  The face containing a
dart is found by repeatedly stepping from ``(u, v)`` to ``(v, w)`` where ``w``
follows ``u`` in the cyclic rotation at ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, GraphError

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    pass


class RotationSystem:
    """A graph together with a cyclic (clockwise) neighbor order at each vertex."""

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]):
        if len(rotation) != graph.n:
            raise EmbeddingError(f"rotation has {len(rotation)} entries for {graph.n} vertices")
        rot = tuple(tuple(r) for r in rotation)
        for v, r in enumerate(rot):
            if len(r) != graph.degree(v) or set(r) != graph.neighbor_set(v):
                raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbors")
        self.graph = graph
        self.rotation = rot
        # position of each neighbor inside the rotation, for successor lookups
        self._pos = tuple({u: i for i, u in enumerate(r)} for r in rot)

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]]) -> "RotationSystem":
        """Build graph and embedding from the rotation lists alone."""
        try:
            graph = Graph(rotation)
        except GraphError as exc:
            raise EmbeddingError(str(exc)) from exc
        return cls(graph, rotation)

    def successor(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        return (v, self.successor(v, u))

    @cached_property
    def faces(self) -> "FaceSet":
        return trace_faces(self)

    def __repr__(self) -> str:
        return f"RotationSystem(n={self.graph.n}, m={self.graph.num_edges})"


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Boundary walk vertices, repeated where the walk revisits a vertex."""
        return tuple(d[0] for d in self.darts)


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]
    face_of_dart: dict[Dart, int]

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __getitem__(self, i: int) -> Face:
        return self.faces[i]


@dataclass(frozen=True)
class Corner:
    vertex: int
    face: int
    incoming: Dart
    outgoing: Dart


@dataclass(frozen=True)
class Incidences:
    corners: tuple[Corner, ...]
    vertex_faces: tuple[tuple[int, ...], ...]
    face_vertices: tuple[tuple[int, ...], ...]


def trace_faces(rs: RotationSystem) -> FaceSet:
    """Trace every face; face ids follow the order of each walk's smallest dart."""
    g = rs.graph
    if g.num_edges == 0:
        raise EmbeddingError("face tracing needs at least one edge")
    darts = sorted((u, v) for u in range(g.n) for v in g.neighbors(u))
    face_of: dict[Dart, int] = {}
    faces = []
    for start in darts:
        if start in face_of:
            continue
        fid = len(faces)
        walk = []
        d = start
        while d not in face_of:
            face_of[d] = fid
            walk.append(d)
            d = rs.next_dart(d)
        if d != start:
            raise EmbeddingError(f"face walk from {start} does not close")
        faces.append(Face(fid, tuple(walk)))
    return FaceSet(tuple(faces), face_of)


def euler_characteristic(rs: RotationSystem) -> int:
    g = rs.graph
    if not g.is_connected():
        raise EmbeddingError("Euler characteristic needs a connected graph")
    return g.n - g.num_edges + len(rs.faces)


def incidences(rs: RotationSystem) -> Incidences:
    vertex_faces: list[list[int]] = [[] for _ in range(rs.graph.n)]
    face_vertices = []
    corners = []
    for face in rs.faces:
        k = face.degree
        for i, d in enumerate(face.darts):
            nxt = face.darts[(i + 1) % k]
            corners.append(Corner(d[1], face.id, d, nxt))
            vertex_faces[d[1]].append(face.id)
        face_vertices.append(face.vertices)
    return Incidences(
        tuple(corners),
        tuple(tuple(sorted(fs)) for fs in vertex_faces),
        tuple(face_vertices),
    )


def face_listing(rs: RotationSystem) -> list[str]:
    return [
        f"face {f.id} (deg {f.degree}): " + " ".join(map(str, f.vertices))
        for f in rs.faces
    ]


# -- .rot files ---------------------------------------------------------------

def parse_rot(lines: Iterable[str]) -> RotationSystem:
    """Parse ``v: n1 n2 ... nk`` lines (clockwise order).

    Vertices never mentioned anywhere are not allowed to hide gaps: the vertex
    count is one more than the largest id seen and unlisted ids are isolated.
    """
    entries: dict[int, list[int]] = {}
    top = -1
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise EmbeddingError(f"line {lineno}: expected 'v: n1 n2 ...'")
        try:
            v = int(head)
            nbrs = [int(t) for t in tail.split()]
        except ValueError:
            raise EmbeddingError(f"line {lineno}: non-integer vertex id") from None
        if v < 0 or any(u < 0 for u in nbrs):
            raise EmbeddingError(f"line {lineno}: negative vertex id")
        if v in entries:
            raise EmbeddingError(f"line {lineno}: vertex {v} listed twice")
        entries[v] = nbrs
        top = max([top, v, *nbrs])
    rotation = [entries.get(v, []) for v in range(top + 1)]
    return RotationSystem.from_rotation(rotation)


def format_rot(rs: RotationSystem) -> str:
    return "".join(
        f"{v}: {' '.join(map(str, r))}\n" for v, r in enumerate(rs.rotation)
    )
