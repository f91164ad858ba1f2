"""Reducible configurations: detection, graph surgery and coloring extension.

Each configuration is processed by one pipeline: locate it, build the reduced
graph, get an odd 7-coloring of that graph from the exact solver, carry the
coloring back to the original graph and verify the result.

Extensions for the configurations with a short recoloring argument follow a
forbidden-set recipe (smallest allowed color wins).  The configurations whose
arguments are long case analyses are extended by exhaustive search over the
vertices the argument recolors, which finds the lexicographically first
valid assignment or proves that none exists.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

from .coloring import Coloring, check_odd, format_coloring, min_odd_color
from .embedding import RotationSystem, format_rot
from .graph import Graph, encode_graph6
from .solver import COLORABLE, TIMEOUT, SearchConfig, solve_odd_coloring
from .structure import classify_faces, classify_vertices, is_4040_face, poor_relations

log = logging.getLogger(__name__)

PALETTE = 7
MAX_SEARCH_VERTICES = 7

NO3V = "L-no3v"
TOOL1 = "L-tool1"
TOOL2 = "L-tool2"
TOOL3 = "L-tool3"
FACE45 = "L-4f5f"
NC4V = "L-nc4v"
NBR53 = "L-53nbr"
PATH4F = "L-2path4f"
FACE4040 = "L-4040face"
VERT12 = "L-12vert"

LEMMAS = (NO3V, TOOL1, TOOL2, TOOL3, FACE45, NC4V, NBR53, PATH4F, FACE4040, VERT12)
GRAPH_ONLY = frozenset({NO3V, TOOL1, TOOL2, TOOL3})
SCRIPTED = frozenset({NO3V, TOOL1, TOOL2, FACE45})

Source = Union[Graph, RotationSystem]


class SurgeryError(RuntimeError):
    pass


@dataclass(frozen=True)
class ConfigMatch:
    lemma: str
    roles: tuple[tuple[str, int], ...]
    faces: tuple[tuple[str, int], ...] = ()

    def __getitem__(self, role: str) -> int:
        for name, v in self.roles:
            if name == role:
                return v
        raise KeyError(role)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.roles)

    def describe(self) -> str:
        parts = [f"{r}={v}" for r, v in self.roles] + [f"{r}=f{f}" for r, f in self.faces]
        return " ".join(parts)


@dataclass(frozen=True)
class Surgery:
    kind: str
    operands: tuple
    produced: tuple[int, ...] = ()


@dataclass
class Reduction:
    graph: Graph
    to_reduced: dict[int, int]
    surgeries: list[Surgery]

    def lift(self, original: Graph, coloring: Coloring) -> list[int]:
        """Colors of retained vertices carried back; deleted vertices get 0."""
        colors = [0] * original.n
        for v, r in self.to_reduced.items():
            colors[v] = coloring[r]
        return colors


@dataclass
class Extension:
    colors: list[int] | None
    method: str
    trace: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.colors is not None


@dataclass
class LemmaReport:
    match: ConfigMatch
    status: str
    reduction: Reduction | None = None
    oracle: Coloring | None = None
    extension: Extension | None = None
    verified: bool = False
    note: str = ""

    @property
    def scripted(self) -> bool:
        return self.extension is not None and self.extension.method == "scripted"


def _split(source: Source) -> tuple[Graph, RotationSystem | None]:
    if isinstance(source, RotationSystem):
        return source.graph, source
    return source, None


# -- detection ----------------------------------------------------------------

def find_configurations(source: Source, lemma: str) -> list[ConfigMatch]:
    g, rs = _split(source)
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma id {lemma!r}")
    if lemma not in GRAPH_ONLY and rs is None:
        raise ValueError(f"{lemma} needs an embedding")
    vclass = classify_vertices(g)
    finder = _FINDERS[lemma]
    matches = finder(g, rs, vclass) if lemma not in GRAPH_ONLY else finder(g, vclass)
    return sorted(matches, key=lambda m: (m.key, m.faces))


def _others(g: Graph, v: int, *exclude: int) -> list[int]:
    return sorted(u for u in g.neighbors(v) if u not in exclude)


def _find_no3v(g, vclass):
    return [ConfigMatch(NO3V, (("v", v), *_numbered(g.neighbors(v))))
            for v in range(g.n) if g.degree(v) == 3]


def _numbered(vertices, prefix="v") -> tuple[tuple[str, int], ...]:
    return tuple((f"{prefix}{i}", u) for i, u in enumerate(sorted(vertices), 1))


def _find_tool1(g, vclass):
    out = []
    for a, b in g.edges():
        if g.degree(a) == 2 and g.degree(b) == 2:
            (va,), (ub,) = _others(g, a, b), _others(g, b, a)
            out.append(ConfigMatch(TOOL1, (("v", a), ("u", b), ("v'", va), ("u'", ub))))
    return out


def _find_tool2(g, vclass):
    return [ConfigMatch(TOOL2, (("u", a), ("v", b))) for a, b in g.edges()
            if vclass[a].convenient and vclass[b].convenient]


def _find_tool3(g, vclass):
    out = []
    for v in range(g.n):
        k = g.degree(v)
        if not 4 <= k <= 6:
            continue
        special = [u for u in g.neighbors(v) if g.degree(u) == 2 or vclass[u].convenient]
        if len(special) >= 2 * k - 6:
            out.append(ConfigMatch(TOOL3, (("v", v), *_numbered(g.neighbors(v)))))
    return out


def _find_face45(g, rs, vclass):
    out = []
    for f in rs.faces:
        walk = f.vertices
        k = len(walk)
        if k not in (4, 5) or len(set(walk)) != k:
            continue
        for i in range(k):
            ring = walk[i:] + walk[:i]
            if g.degree(ring[0]) != 2 or g.degree(ring[2]) != 2:
                continue
            if k == 4 and ring[0] > ring[2]:
                continue  # the same opposite pair seen from the other side
            if k == 5 and not (vclass[ring[3]].convenient and vclass[ring[4]].convenient):
                continue
            roles = tuple((f"v{j}", u) for j, u in enumerate(ring, 1))
            out.append(ConfigMatch(FACE45, roles, (("f", f.id),)))
    return out


def _find_nc4v(g, rs, vclass):
    out = []
    for v in range(g.n):
        if not (vclass[v].non_convenient and vclass[v].degree == 4):
            continue
        conv = [u for u in g.neighbors(v) if vclass[u].convenient]
        rest = sorted(u for u in g.neighbors(v) if not vclass[u].convenient)
        if len(conv) != 1 or not all(vclass[u].non_convenient for u in rest):
            continue
        for v2 in rest:
            if vclass[v2].degree != 4:
                continue
            v3, v4 = [u for u in rest if u != v2]
            a, b, c = _others(g, v2, v)
            out.append(ConfigMatch(NC4V, (("v", v), ("v1", conv[0]), ("v2", v2), ("v3", v3), ("v4", v4),
                                          ("v2'", a), ("v2''", b), ("v2'''", c))))
    return out


def _find_53nbr(g, rs, vclass):
    out = []
    for v in range(g.n):
        k = g.degree(v)
        if not (vclass[v].non_convenient and k in (4, 6, 8, 10)):
            continue
        conv = [u for u in g.neighbors(v) if vclass[u].convenient]
        if 2 * len(conv) < 3 * k - 10:
            continue
        for v1 in sorted(conv):
            if vclass[v1].label == "5_3":
                out.append(ConfigMatch(NBR53, (("v", v), ("v1", v1))))
    return out


def _find_2path4f(g, rs, vclass):
    out = []
    fod = rs.faces.face_of_dart
    for w in range(g.n):
        if g.degree(w) != 2:
            continue
        u, v = sorted(g.neighbors(w))
        if vclass[u].label != "5_3" or vclass[v].label != "5_3":
            continue
        f1, f2 = rs.faces[fod[(u, w)]], rs.faces[fod[(v, w)]]
        if f1.degree != 4 or f2.degree != 4 or len(set(f1.vertices)) != 4 or len(set(f2.vertices)) != 4:
            continue
        x = _after(f1.vertices, v)
        y = _after(f2.vertices, u)
        out.append(ConfigMatch(PATH4F, (("u", u), ("w", w), ("v", v), ("x", x), ("y", y)),
                               (("f1", f1.id), ("f2", f2.id))))
    return out


def _after(walk: Sequence[int], v: int) -> int:
    return walk[(walk.index(v) + 1) % len(walk)]


def _find_4040(g, rs, vclass):
    out = []
    fclass = classify_faces(rs, vclass)
    for f in rs.faces:
        if not is_4040_face(fclass[f.id]):
            continue
        v1, v2, v3, v4 = f.vertices
        a1, b1 = _others(g, v1, v2, v4)
        a2, b2 = _others(g, v2, v1, v3)
        out.append(ConfigMatch(FACE4040, (("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4),
                                          ("v1'", a1), ("v1''", b1), ("v2'", a2), ("v2''", b2)),
                               (("f", f.id),)))
    return out


def _find_12vert(g, rs, vclass):
    poor_to: dict[int, set[int]] = {}
    for rel in poor_relations(rs, vclass):
        poor_to.setdefault(rel.beneficiary, set()).add(rel.poor)
    out = []
    for v, poor in poor_to.items():
        if g.degree(v) == 12 and len(poor) == 12:
            out.append(ConfigMatch(VERT12, (("v", v), *_numbered(poor))))
    return out


_FINDERS = {
    NO3V: _find_no3v, TOOL1: _find_tool1, TOOL2: _find_tool2, TOOL3: _find_tool3,
    FACE45: _find_face45, NC4V: _find_nc4v, NBR53: _find_53nbr, PATH4F: _find_2path4f,
    FACE4040: _find_4040, VERT12: _find_12vert,
}


# -- surgery ------------------------------------------------------------------

def _rebuild(g: Graph, delete=(), split=(), paths=()) -> Reduction:
    delete = set(delete)
    keep = [v for v in range(g.n) if v not in delete]
    to_reduced = {v: i for i, v in enumerate(keep)}
    split_set = {frozenset(e) for e in split}
    for e in split_set:
        a, b = tuple(e)
        if not g.has_edge(a, b) or a in delete or b in delete:
            raise SurgeryError(f"cannot split missing edge {tuple(e)}")
    edges = [(to_reduced[u], to_reduced[v]) for u, v in g.edges()
             if u in to_reduced and v in to_reduced and frozenset((u, v)) not in split_set]
    n = len(keep)
    surgeries = []
    if delete:
        surgeries.append(Surgery("delete-vertices", tuple(sorted(delete))))
    for a, b in split:
        edges += [(to_reduced[a], n), (n, to_reduced[b])]
        surgeries.append(Surgery("split-edge", (a, b), (n,)))
        n += 1
    for a, b in paths:
        if a == b or a in delete or b in delete:
            raise SurgeryError(f"2-path endpoints {a}, {b} are invalid")
        edges += [(to_reduced[a], n), (n, to_reduced[b])]
        surgeries.append(Surgery("add-2-path", (a, b), (n,)))
        n += 1
    return Reduction(Graph.from_edges(n, edges), to_reduced, surgeries)


def apply_surgery(source: Source, match: ConfigMatch) -> Reduction:
    g, _ = _split(source)
    m = match
    if m.lemma in (NO3V, TOOL3):
        return _rebuild(g, delete=[m["v"]])
    if m.lemma == TOOL1:
        return _rebuild(g, delete=[m["v"]])
    if m.lemma == TOOL2:
        return _rebuild(g, split=[(m["u"], m["v"])])
    if m.lemma == FACE45:
        if len(m.roles) == 4:
            return _rebuild(g, delete=[m["v1"]])
        return _rebuild(g, split=[(m["v4"], m["v5"])])
    if m.lemma == NC4V:
        v1, v3, v4 = m["v1"], m["v3"], m["v4"]
        a, b, c = m["v2'"], m["v2''"], m["v2'''"]
        return _rebuild(g, delete=[m["v"], m["v2"]],
                        paths=[(v1, v3), (v1, v4), (v3, v4), (a, b), (b, c), (c, a)])
    if m.lemma == NBR53:
        return _rebuild(g, split=[(m["v"], m["v1"])])
    if m.lemma == PATH4F:
        return _rebuild(g, split=[(m["x"], m["v"])])
    if m.lemma == FACE4040:
        a1, b1, a2, b2 = m["v1'"], m["v1''"], m["v2'"], m["v2''"]
        v3, v4 = m["v3"], m["v4"]
        return _rebuild(g, delete=[m["v1"], m["v2"]],
                        paths=[(a1, b1), (a1, v4), (b1, v4), (a2, b2), (a2, v3), (b2, v3)])
    raise SurgeryError(f"{m.lemma} has no surgery")


# -- extension ----------------------------------------------------------------

def _smallest_free(forbidden: Iterable[int | None], k: int = PALETTE) -> int | None:
    bad = set(forbidden)
    return next((c for c in range(1, k + 1) if c not in bad), None)


def _odd_at(g: Graph, colors: Sequence[int], v: int) -> bool:
    return min_odd_color(g, colors, v) is not None


def repair_via_2_neighbor(g: Graph, colors: list[int], v: int, k: int = PALETTE) -> bool:
    """Give ``v`` an odd color by recoloring one of its 2-neighbors.

    If every color has even multiplicity around v, moving a 2-neighbor to any
    other color makes both its old and new color odd there.  The new color
    avoids v, the 2-neighbor's other neighbor and one surviving odd color of
    that other neighbor.  Returns False (colors untouched) if no 2-neighbor
    works.
    """
    if _odd_at(g, colors, v):
        return True
    for w in sorted(g.neighbors(v)):
        if g.degree(w) != 2:
            continue
        (u,) = _others(g, w, v)
        old = colors[w]
        keep = sorted(c for c in _odd_colors_raw(g, colors, u) if c != old)
        new = _smallest_free([colors[v], colors[u], old, keep[0] if keep else None], k)
        if new is None:
            continue
        colors[w] = new
        if _odd_at(g, colors, v) and _odd_at(g, colors, w) and _odd_at(g, colors, u):
            return True
        colors[w] = old
    return False


def _odd_colors_raw(g: Graph, colors: Sequence[int], v: int) -> set[int]:
    par: dict[int, int] = {}
    for u in g.neighbors(v):
        par[colors[u]] = par.get(colors[u], 0) ^ 1
    return {c for c, p in par.items() if p}


def _reduced_odd(red: Reduction, coloring: Coloring, v: int) -> int | None:
    """min C_o(v) in the reduced graph, or None if v is isolated there."""
    r = red.to_reduced[v]
    if red.graph.degree(r) == 0:
        return None
    return min_odd_color(red.graph, coloring.colors, r)


def search_extension(g: Graph, colors: Sequence[int], free: Sequence[int], k: int = PALETTE) -> list[int] | None:
    """First (lexicographic over ``free``) valid odd coloring keeping other colors fixed.

    Equivalent to scanning all k^|free| assignments in order; pruning only
    discards partial assignments that already violate properness or leave a
    fully colored neighborhood without an odd color.
    """
    free = list(dict.fromkeys(free))
    cols = list(colors)
    for v in free:
        cols[v] = 0
    free_set = set(free)

    def settled_ok(w: int) -> bool:
        nbrs = g.neighbors(w)
        if not nbrs or any(cols[u] == 0 for u in nbrs):
            return True
        return _odd_at(g, cols, w)

    for w in range(g.n):
        if w in free_set or cols[w] == 0:
            continue
        if any(cols[u] == cols[w] for u in g.neighbors(w)):
            return None
        if not settled_ok(w):
            return None

    def rec(i: int) -> bool:
        if i == len(free):
            return check_odd(g, cols)
        v = free[i]
        for c in range(1, k + 1):
            if any(cols[u] == c for u in g.neighbors(v)):
                continue
            cols[v] = c
            if settled_ok(v) and all(settled_ok(w) for w in g.neighbors(v)):
                if rec(i + 1):
                    return True
            cols[v] = 0
        return False

    return cols if rec(0) else None


def search_set(g: Graph, match: ConfigMatch) -> list[int]:
    """Vertices the extension may (re)color, in the order they are searched."""
    m = match
    twos = lambda v, *ex: [u for u in _others(g, v, *ex) if g.degree(u) == 2]
    if m.lemma == NO3V:
        s = [m["v"]]
    elif m.lemma == TOOL1:
        s = [m["v"], m["u"]]
    elif m.lemma == TOOL2:
        s = [m["u"], m["v"], *twos(m["u"]), *twos(m["v"])]
    elif m.lemma == TOOL3:
        v = m["v"]
        conv = [u for u in sorted(g.neighbors(v)) if g.degree(u) >= 4 and
                (g.degree(u) % 2 or any(g.degree(w) == 2 for w in g.neighbors(u)))]
        s = [v, *twos(v), *(w for u in conv for w in twos(u, v))]
    elif m.lemma == FACE45:
        if len(m.roles) == 4:
            s = [m["v1"]]
        else:
            s = [m["v4"], m["v5"], *twos(m["v4"]), *twos(m["v5"])]
    elif m.lemma == NC4V:
        s = [m["v"], m["v2"], *twos(m["v1"])]
    elif m.lemma == NBR53:
        s = [m["v"], m["v1"], *twos(m["v1"])]
    elif m.lemma == PATH4F:
        s = [m["u"], m["w"], m["v"], *twos(m["u"], m["w"]), *twos(m["v"], m["w"])]
    elif m.lemma == FACE4040:
        s = [m["v1"], m["v2"], m["v3"], m["v4"]]
    else:
        s = []
    return list(dict.fromkeys(s))[:MAX_SEARCH_VERTICES]


def _scripted(g: Graph, match: ConfigMatch, red: Reduction, oracle: Coloring, trace: list[str]) -> list[int] | None:
    m = match
    colors = red.lift(g, oracle)
    if m.lemma == NO3V:
        v = m["v"]
        forbidden = []
        for u in g.neighbors(v):
            forbidden += [colors[u], _reduced_odd(red, oracle, u)]
        colors[v] = _smallest_free(forbidden)
        trace.append(f"forbid {sorted(set(c for c in forbidden if c))} -> v={colors[v]}")
    elif m.lemma == TOOL1:
        v, u, vp, up = m["v"], m["u"], m["v'"], m["u'"]
        if colors[u] == colors[vp]:
            old = colors[u]
            keep = sorted(c for c in _odd_colors_raw(red.graph, oracle.colors, red.to_reduced[up])
                          if c != old)
            colors[u] = _smallest_free([colors[up], colors[vp], keep[0] if keep else None])
            trace.append(f"recolor u {old} -> {colors[u]}")
        forbidden = [colors[u], colors[vp], _reduced_odd(red, oracle, vp), colors[up]]
        colors[v] = _smallest_free(forbidden)
        trace.append(f"forbid {sorted(set(c for c in forbidden if c))} -> v={colors[v]}")
    elif m.lemma == TOOL2 or (m.lemma == FACE45 and len(m.roles) == 5):
        ends = (m["u"], m["v"]) if m.lemma == TOOL2 else (m["v4"], m["v5"])
        for x in ends:
            if not repair_via_2_neighbor(g, colors, x):
                trace.append(f"no 2-neighbor repair for {x}")
    elif m.lemma == FACE45:
        v1, v2, v4 = m["v1"], m["v2"], m["v4"]
        forbidden = [colors[v2], colors[v4], _reduced_odd(red, oracle, v2), _reduced_odd(red, oracle, v4)]
        colors[v1] = _smallest_free(forbidden)
        trace.append(f"forbid {sorted(set(c for c in forbidden if c))} -> v1={colors[v1]}")
    else:
        raise ValueError(f"{m.lemma} has no scripted extension")
    if any(c in (0, None) for c in colors):
        trace.append("scripted step left a vertex uncolored")
        return None
    return colors


def extend_coloring(source: Source, match: ConfigMatch, red: Reduction, oracle: Coloring) -> Extension:
    g, _ = _split(source)
    trace: list[str] = []
    if match.lemma in SCRIPTED:
        colors = _scripted(g, match, red, oracle, trace)
        if colors is not None and check_odd(g, colors):
            return Extension(colors, "scripted", trace)
        trace.append("scripted extension failed verification; searching")
        method = "search-fallback"
    else:
        method = "search"
    free = search_set(g, match)
    colors = search_extension(g, red.lift(g, oracle), free)
    if colors is None:
        trace.append(f"no valid assignment on {free}")
        return Extension(None, "failure", trace)
    trace.append(f"search over {free} -> " + " ".join(f"{v}:{colors[v]}" for v in free))
    return Extension(colors, method, trace)


# -- pipeline -----------------------------------------------------------------

def run_pipeline(source: Source, match: ConfigMatch, time_limit: float | None = 60.0) -> LemmaReport:
    g, rs = _split(source)
    if match.lemma == VERT12:
        return _detect_12vert(rs, match)
    red = apply_surgery(source, match)
    res = solve_odd_coloring(red.graph, SearchConfig(k=PALETTE, time_limit=time_limit))
    if res.status == TIMEOUT:
        return LemmaReport(match, "skipped", red, note="oracle timeout")
    if res.status != COLORABLE:
        return LemmaReport(match, "skipped", red, note="reduced graph is not odd 7-colorable")
    ext = extend_coloring(source, match, red, res.witness)
    verified = ext.ok and check_odd(g, ext.colors) and max(ext.colors) <= PALETTE
    if not verified:
        log.error("extension FAILED for %s %s: %s", match.lemma, match.describe(), "; ".join(ext.trace))
    return LemmaReport(match, "pass" if verified else "fail", red, res.witness, ext, verified)


def _detect_12vert(rs: RotationSystem, match: ConfigMatch) -> LemmaReport:
    from .discharging import apply_rules, fmt

    ledger = apply_rules(rs)
    keys = [f"v{v}" for _, v in match.roles]
    note = " ".join(f"{x}={fmt(ledger.final[x])}" for x in keys)
    return LemmaReport(match, "detected", note=note, verified=True)


@dataclass
class HarnessSummary:
    lemma: str
    matched: int
    reports: list[tuple[str, LemmaReport]]

    def count(self, status: str) -> int:
        return sum(1 for _, r in self.reports if r.status == status)

    @property
    def passed(self) -> int:
        return self.count("pass")

    @property
    def failed(self) -> int:
        return self.count("fail")

    @property
    def skipped(self) -> int:
        return self.count("skipped")

    @property
    def scripted(self) -> int:
        return sum(1 for _, r in self.reports if r.scripted)

    def line(self) -> str:
        return (f"{self.lemma}: matched={self.matched} sampled={len(self.reports)} "
                f"pass={self.passed} fail={self.failed} skipped={self.skipped} "
                f"scripted={self.scripted} detected={self.count('detected')}")


def run_lemma_harness(instances: Iterable[tuple[str, Source]], lemma: str, trials: int | None = None,
                      seed: int = 0, reproducer_dir: str | Path | None = None,
                      time_limit: float | None = 60.0) -> HarnessSummary:
    pool = []
    for name, src in instances:
        g, rs = _split(src)
        if lemma not in GRAPH_ONLY and rs is None:
            continue
        pool += [(name, src, m) for m in find_configurations(src, lemma)]
    picked = range(len(pool))
    if trials is not None and trials < len(pool):
        picked = sorted(random.Random(seed).sample(range(len(pool)), trials))
    reports = []
    for i in picked:
        name, src, m = pool[i]
        rep = run_pipeline(src, m, time_limit)
        reports.append((name, rep))
        if rep.status == "fail" and reproducer_dir is not None:
            write_reproducer(Path(reproducer_dir), f"{lemma}-{i}", src, rep)
    return HarnessSummary(lemma, len(pool), reports)


def write_reproducer(directory: Path, stem: str, source: Source, rep: LemmaReport) -> None:
    g, rs = _split(source)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / f"{stem}.g6").write_text(encode_graph6(g) + "\n")
    if rs is not None:
        (directory / f"{stem}.rot").write_text(format_rot(rs))
    (directory / f"{stem}.match").write_text(
        f"lemma={rep.match.lemma}\n" + "".join(f"{r}={v}\n" for r, v in rep.match.roles))
    if rep.oracle is not None:
        (directory / f"{stem}.oracle").write_text(format_coloring(rep.oracle))
