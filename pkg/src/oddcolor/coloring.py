"""Colorings and the odd-coloring predicate."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Colors for vertices ``0..n-1``, each in ``1..k``."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1:
            raise ColoringError("palette size must be at least 1")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ColoringError(f"vertex {v} has color {c} outside 1..{self.k}")

    @classmethod
    def of(cls, colors: Sequence[int], k: int | None = None) -> "Coloring":
        colors = tuple(colors)
        return cls(colors, k if k is not None else max(colors, default=1))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)


@dataclass
class OddReport:
    per_vertex: dict[int, frozenset[int]]
    violations: list[int] = field(default_factory=list)
    proper_violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.proper_violations

    def __bool__(self) -> bool:
        return self.passed


def _odd_colors(colors: Sequence[int], nbrs: Iterable[int]) -> frozenset[int]:
    counts = Counter(colors[u] for u in nbrs)
    return frozenset(c for c, m in counts.items() if m % 2)


def odd_color_set(g: Graph, c: Coloring, v: int) -> frozenset[int]:
    """Colors appearing an odd number of times around ``v``."""
    if g.degree(v) == 0:
        raise ColoringError(f"vertex {v} is isolated; its odd-color set is undefined")
    return _odd_colors(c.colors, g.neighbors(v))


def min_odd_color(g: Graph, colors: Sequence[int], v: int) -> int | None:
    """Smallest odd color at ``v`` (the representative used for c_o), or None."""
    odd = _odd_colors(colors, g.neighbors(v))
    return min(odd) if odd else None


def is_odd_coloring(g: Graph, c: Coloring) -> OddReport:
    if len(c) != g.n:
        raise ColoringError(f"coloring covers {len(c)} vertices, graph has {g.n}")
    per_vertex = {}
    violations = []
    for v in range(g.n):
        if g.degree(v) == 0:
            continue
        odd = _odd_colors(c.colors, g.neighbors(v))
        per_vertex[v] = odd
        if not odd:
            violations.append(v)
    proper = [(u, v) for u, v in g.edges() if c[u] == c[v]]
    return OddReport(per_vertex, violations, proper)


def check_odd(g: Graph, colors: Sequence[int]) -> bool:
    """Fast boolean form of :func:`is_odd_coloring` on a raw color list."""
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if not nbrs:
            continue
        cv = colors[v]
        parity: dict[int, int] = {}
        for u in nbrs:
            cu = colors[u]
            if cu == cv:
                return False
            parity[cu] = parity.get(cu, 0) ^ 1
        if not any(parity.values()):
            return False
    return True


def parse_coloring(lines: Iterable[str], n: int | None = None, k: int | None = None) -> Coloring:
    """Read ``v color`` lines.  Every vertex 0..n-1 must be present."""
    assigned: dict[int, int] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ColoringError(f"line {lineno}: expected 'vertex color'")
        try:
            v, col = int(parts[0]), int(parts[1])
        except ValueError:
            raise ColoringError(f"line {lineno}: non-integer entry") from None
        if v in assigned:
            raise ColoringError(f"line {lineno}: vertex {v} colored twice")
        assigned[v] = col
    if n is None:
        n = max(assigned, default=-1) + 1
    missing = [v for v in range(n) if v not in assigned]
    if missing:
        raise ColoringError(f"no color given for vertices {missing[:5]}")
    extra = [v for v in assigned if not 0 <= v < n]
    if extra:
        raise ColoringError(f"vertex ids {sorted(extra)[:5]} out of range")
    colors = [assigned[v] for v in range(n)]
    return Coloring(tuple(colors), k if k is not None else max(colors, default=1))


def format_coloring(c: Coloring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.colors))
