"""Command-line front end.

Exit codes: 0 when every check passes, 1 for a semantic violation or finding,
2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import discharging, generators
from .coloring import ColoringError, Coloring, is_odd_coloring, parse_coloring
from .embedding import EmbeddingError, RotationSystem, euler_characteristic, face_listing, format_rot, parse_rot
from .graph import Graph6Error, GraphError, degree_profile, girth, read_graph6_lines
from .reducibility import GRAPH_ONLY, LEMMAS, run_lemma_harness
from .solver import COLORABLE, NOT_COLORABLE, SearchConfig, SolverTimeout, odd_chromatic_number, solve_odd_coloring
from .structure import classify_faces, classify_two_vertices, classify_vertices, poor_relations, run_screens

OK, FINDING, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    try:
        return Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graphs(path: str):
    graphs = read_graph6_lines(_read_text(path))
    if not graphs:
        raise InputError(f"{path}: no graph6 lines found")
    return graphs


def _load_rot(path: str) -> RotationSystem:
    return parse_rot(_read_text(path))


def _emit_tsv(rows) -> None:
    for row in rows:
        print("\t".join(str(x) for x in row))


def _set(xs) -> str:
    return ",".join(str(x) for x in sorted(xs))


# -- subcommands ----------------------------------------------------------------

def cmd_verify(args) -> int:
    graphs = _load_graphs(args.graph)
    if len(graphs) != 1:
        raise InputError("verify expects exactly one graph")
    g = graphs[0]
    if args.coloring is None:
        prof = degree_profile(g)
        gi = girth(g)
        if args.format == "tsv":
            _emit_tsv([["vertices", g.n], ["edges", g.num_edges], ["girth", gi],
                       *(["degree", d, c] for d, c in prof.counts.items())])
        else:
            print(f"graph: {g.n} vertices, {g.num_edges} edges, girth {gi}")
            print("degrees: " + ", ".join(f"{d}x{c}" for d, c in prof.counts.items()))
        return OK
    col = parse_coloring(_read_text(args.coloring), g.n, args.k)
    rep = is_odd_coloring(g, col)
    if args.format == "tsv":
        rows = [["vertex", v, _set(odd) or "-", "ok" if odd else "odd-violation"]
                for v, odd in rep.per_vertex.items()]
        rows += [["edge", u, v, "proper-violation"] for u, v in rep.proper_violations]
        rows.append(["result", "pass" if rep.passed else "fail"])
        _emit_tsv(rows)
    else:
        print(f"odd {col.k}-coloring: {'PASS' if rep.passed else 'FAIL'}")
        if rep.proper_violations:
            print("monochromatic edges: " + " ".join(f"{u}-{v}" for u, v in rep.proper_violations))
        if rep.violations:
            print(f"odd-violations ({len(rep.violations)}): " + " ".join(map(str, rep.violations)))
    return OK if rep.passed else FINDING


def cmd_solve(args) -> int:
    graphs = _load_graphs(args.graph)
    code = OK
    for i, g in enumerate(graphs):
        cfg = SearchConfig(k=args.k, order=args.order, time_limit=args.time_limit,
                           seed=args.seed, jobs=args.jobs)
        if args.chromatic:
            try:
                chi = odd_chromatic_number(g, cfg)
            except SolverTimeout as exc:
                code = FINDING
                _out(args, ["graph", i, "chi_o", "timeout", exc.k], f"χ_o: timeout ({exc})")
                continue
            _out(args, ["graph", i, "chi_o", chi], f"χ_o = {chi}")
            continue
        res = solve_odd_coloring(g, cfg)
        if res.status not in (COLORABLE, NOT_COLORABLE):
            code = FINDING
        witness = ",".join(map(str, res.witness.colors)) if res.witness else "-"
        _out(args, ["graph", i, "k", res.k, res.status, res.nodes, witness],
             f"k={res.k}: {res.status} (nodes {res.nodes})"
             + (f"\nwitness: {witness}" if res.witness else ""))
    return code


def _out(args, row, text) -> None:
    if args.format == "tsv":
        _emit_tsv([row])
    else:
        print(text)


def cmd_faces(args) -> int:
    rs = _load_rot(args.rot)
    chi = euler_characteristic(rs)
    if args.format == "tsv":
        _emit_tsv([["face", f.id, f.degree, " ".join(map(str, f.vertices))] for f in rs.faces])
        _emit_tsv([["euler", chi]])
    else:
        print("\n".join(face_listing(rs)))
        print(f"χ = {chi}")
    return OK


def cmd_classify(args) -> int:
    rs = _load_rot(args.rot)
    g = rs.graph
    vclass = classify_vertices(g)
    fclass = classify_faces(rs, vclass)
    bad = classify_two_vertices(rs)
    poor = poor_relations(rs, vclass, fclass)
    rows = [["vertex", v, c.degree, c.two_neighbors, int(c.convenient), c.role, c.label]
            for v, c in vclass.items()]
    rows += [["two-vertex", v, b.kind, b.four_faces] for v, b in bad.items()]
    rows += [["face", f, c.degree, c.two_vertices, c.label, ",".join(c.labels)]
             for f, c in fclass.items()]
    rows += [["poor", p.poor, p.beneficiary, f"f{p.faces[0]},f{p.faces[1]}"] for p in poor]
    if args.format == "tsv":
        _emit_tsv(rows)
    else:
        for v, c in vclass.items():
            print(f"vertex {v}: {c.label} {c.role}")
        for v, b in bad.items():
            print(f"2-vertex {v}: {b.kind} ({b.four_faces} incident 4-faces)")
        for f, c in fclass.items():
            print(f"face {f}: {c.label} ({','.join(c.labels)})")
        for p in poor:
            print(f"poor: {p.poor} -> {p.beneficiary} via f{p.faces[0]}, f{p.faces[1]}")
    return OK


def cmd_discharge(args) -> int:
    rs = _load_rot(args.rot)
    rep = discharging.audit(rs)
    if args.format == "tsv":
        rows = [
            ["euler", rep.euler],
            ["total_initial", discharging.fmt(rep.ledger.total_initial())],
            ["total_final", discharging.fmt(rep.ledger.total_final())],
            ["expected", discharging.fmt(rep.expected_total)],
            ["conserved", int(rep.conserved)],
            ["identity", int(rep.identity_holds)],
        ]
        rows += [["negative", n.element, discharging.fmt(n.charge), n.context, ",".join(n.screens) or "-"]
                 for n in rep.negatives]
        if args.ledger:
            rows += rep.ledger.tsv_rows()
        _emit_tsv(rows)
    else:
        print(rep.summary())
        for n in rep.negatives:
            print(f"  {n.element} : {discharging.fmt(n.charge)}  [{n.context}]  screens: {', '.join(n.screens) or 'none'}")
        if not rep.ok:
            print("AUDIT FAILURE: charge identity or conservation violated")
        if args.ledger:
            print("\n".join(rep.ledger.lines()))
    return OK if rep.ok else FINDING


def cmd_screen(args) -> int:
    rs = _load_rot(args.rot)
    matches = run_screens(rs)
    if args.format == "tsv":
        _emit_tsv([[m.screen, _set(m.vertices) if m.screen != "4040-face" else ",".join(map(str, m.vertices)),
                    ",".join(f"f{f}" for f in m.faces) or "-", m.detail or "-"] for m in matches])
    else:
        for m in matches:
            where = f" faces {','.join(f'f{f}' for f in m.faces)}" if m.faces else ""
            print(f"{m.screen}: vertices {' '.join(map(str, m.vertices))}{where} {m.detail}".rstrip())
        print(f"{len(matches)} screen matches")
    return FINDING if matches else OK


def cmd_lemma(args) -> int:
    if args.rot:
        source = _load_rot(args.rot)
        name = args.rot
    elif args.graph:
        if args.id not in GRAPH_ONLY:
            raise InputError(f"{args.id} needs --rot")
        graphs = _load_graphs(args.graph)
        source, name = graphs[0], args.graph
    else:
        raise InputError("lemma needs --rot or --graph")
    summary = run_lemma_harness([(name, source)], args.id, trials=args.trials, seed=args.seed,
                                reproducer_dir=args.reproducers, time_limit=args.time_limit)
    if args.format == "tsv":
        rows = [["match", i, r.status, r.extension.method if r.extension else "-", r.match.describe(), r.note or "-"]
                for i, (_, r) in enumerate(summary.reports)]
        rows.append(["summary", summary.lemma, summary.matched, summary.passed, summary.failed,
                     summary.skipped, summary.scripted, summary.count("detected")])
        _emit_tsv(rows)
    else:
        for _, r in summary.reports:
            method = r.extension.method if r.extension else "-"
            print(f"{r.status:8} {method:16} {r.match.describe()} {r.note}".rstrip())
            if r.status == "fail":
                print("  FAILURE: " + "; ".join(r.extension.trace if r.extension else []))
        print(summary.line())
    return FINDING if summary.failed else OK


def cmd_gen(args) -> int:
    if args.kind == "torus-grid":
        rs = generators.torus_grid(args.m, args.n, triangle_free=args.triangle_free)
    else:
        try:
            fraction = Fraction(args.fraction)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad fraction {args.fraction!r}") from None
        rs = generators.subdivide(_load_rot(args.rot), fraction, args.seed)
    text = format_rot(rs)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddcolor", description="Odd colorings of embedded graphs")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "tsv"), default="text")
        return sp

    sp = common(sub.add_parser("verify", help="check an odd coloring"))
    sp.add_argument("--graph", required=True)
    sp.add_argument("--coloring")
    sp.add_argument("--k", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("solve", help="decide odd k-colorability or compute chi_o"))
    sp.add_argument("--graph", required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--k", type=int, default=7)
    mode.add_argument("--chromatic", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--time-limit", type=float)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--order", choices=("degree", "random"), default="degree")
    sp.set_defaults(func=cmd_solve)

    for name, func, help_ in (("faces", cmd_faces, "trace faces"),
                              ("classify", cmd_classify, "vertex/face classes"),
                              ("screen", cmd_screen, "counterexample-shape screens")):
        sp = common(sub.add_parser(name, help=help_))
        sp.add_argument("--rot", required=True)
        sp.set_defaults(func=func)

    sp = common(sub.add_parser("discharge", help="apply rules R1-R4 and audit"))
    sp.add_argument("--rot", required=True)
    sp.add_argument("--ledger", action="store_true")
    sp.set_defaults(func=cmd_discharge)

    sp = common(sub.add_parser("lemma", help="run a reducible-configuration harness"))
    sp.add_argument("--id", required=True, choices=LEMMAS)
    sp.add_argument("--rot")
    sp.add_argument("--graph")
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--time-limit", type=float, default=60.0)
    sp.add_argument("--reproducers")
    sp.set_defaults(func=cmd_lemma)

    gen = sub.add_parser("gen", help="corpus generators")
    gsub = gen.add_subparsers(dest="kind", required=True)
    sp = gsub.add_parser("torus-grid")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--triangle-free", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)
    sp = gsub.add_parser("subdivide")
    sp.add_argument("--rot", required=True)
    sp.add_argument("--fraction", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, Graph6Error, GraphError, EmbeddingError, ColoringError,
            generators.GeneratorError, ValueError) as exc:
        print(f"oddcolor: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
