"""Discharging in exact quarter-unit arithmetic.

Every charge is stored as an integer number of quarters, so a value of 3/2 is
the integer 6.  Initial charges are 2d(v)-6 for vertices and d(f)-6 for
faces; the four rules move charge between adjacent or incident elements and
every move is recorded with its rule id.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import RotationSystem, incidences
from .structure import (
    BAD,
    SEMI_BAD,
    classify_faces,
    classify_two_vertices,
    classify_vertices,
    poor_relations,
    run_screens,
)

Q = 4  # quarter units per unit of charge

R2_AMOUNT = {BAD: 6, SEMI_BAD: 5}  # 3/2, 5/4; non-bad gets 1
R2_NON_BAD = 4


def vkey(v: int) -> str:
    return f"v{v}"


def fkey(f: int) -> str:
    return f"f{f}"


def fmt(quarters: int) -> str:
    """Reduced fraction string, e.g. 6 -> '3/2', -8 -> '-2'."""
    return str(Fraction(quarters, Q))


@dataclass(frozen=True)
class Transfer:
    rule: str
    sender: str
    receiver: str
    amount: int


@dataclass
class ChargeLedger:
    initial: dict[str, int]
    transfers: list[Transfer] = field(default_factory=list)
    final: dict[str, int] = field(default_factory=dict)

    def settle(self) -> None:
        final = dict(self.initial)
        for t in self.transfers:
            final[t.sender] -= t.amount
            final[t.receiver] += t.amount
        self.final = final

    def total_initial(self) -> int:
        return sum(self.initial.values())

    def total_final(self) -> int:
        return sum(self.final.values())

    def flows(self) -> tuple[dict[str, int], dict[str, int]]:
        """Total amount sent and received per element."""
        sent: dict[str, int] = defaultdict(int)
        received: dict[str, int] = defaultdict(int)
        for t in self.transfers:
            sent[t.sender] += t.amount
            received[t.receiver] += t.amount
        return sent, received

    def lines(self) -> list[str]:
        out = [f"transfer {t.rule} {t.sender} -> {t.receiver} : {fmt(t.amount)}" for t in self.transfers]
        out += [f"final {x} : {fmt(q)}" for x, q in self.final.items()]
        return out

    def tsv_rows(self) -> list[list[str]]:
        rows = [["transfer", t.rule, t.sender, t.receiver, fmt(t.amount)] for t in self.transfers]
        rows += [["final", x, "", "", fmt(q)] for x, q in self.final.items()]
        return rows


def initial_charges(rs: RotationSystem) -> ChargeLedger:
    g = rs.graph
    initial = {vkey(v): Q * (2 * g.degree(v) - 6) for v in range(g.n)}
    initial.update({fkey(f.id): Q * (f.degree - 6) for f in rs.faces})
    return ChargeLedger(initial)


def apply_rules(rs: RotationSystem) -> ChargeLedger:
    g = rs.graph
    ledger = initial_charges(rs)
    vclass = classify_vertices(g)
    fclass = classify_faces(rs, vclass)
    badness = classify_two_vertices(rs)
    poor_to = defaultdict(set)
    for rel in poor_relations(rs, vclass, fclass):
        poor_to[rel.beneficiary].add(rel.poor)
    log = ledger.transfers.append

    # R1, once per corner
    for corner in incidences(rs).corners:
        v, f = corner.vertex, corner.face
        fdeg = fclass[f].degree
        if fdeg == 4 or (fdeg == 5 and vclass[v].non_convenient):
            log(Transfer("R1", vkey(v), fkey(f), 2))

    for v in range(g.n):
        cv = vclass[v]
        nbrs = sorted(g.neighbors(v))
        if cv.degree >= 4:
            for u in nbrs:
                if u in badness:
                    log(Transfer("R2", vkey(v), vkey(u), R2_AMOUNT.get(badness[u].kind, R2_NON_BAD)))
        if cv.non_convenient:
            for u in nbrs:
                if u in poor_to[v]:
                    log(Transfer("R3", vkey(v), vkey(u), 4))
                elif vclass[u].convenient:
                    log(Transfer("R3", vkey(v), vkey(u), 2))
        if cv.non_convenient and cv.degree >= 6:
            for u in nbrs:
                cu = vclass[u]
                if cu.non_convenient and cu.degree == 4:
                    if sum(1 for w in g.neighbors(u) if vclass[w].convenient) == 1:
                        log(Transfer("R4", vkey(v), vkey(u), 1))

    ledger.settle()
    return ledger


@dataclass(frozen=True)
class NegativeElement:
    element: str
    charge: int
    context: str
    screens: tuple[str, ...]


@dataclass
class AuditReport:
    vertices: int
    edges: int
    faces: int
    ledger: ChargeLedger
    negatives: list[NegativeElement]

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def expected_total(self) -> int:
        return -6 * Q * self.euler

    @property
    def conserved(self) -> bool:
        return self.ledger.total_initial() == self.ledger.total_final()

    @property
    def identity_holds(self) -> bool:
        return self.ledger.total_initial() == self.expected_total

    @property
    def ok(self) -> bool:
        return self.conserved and self.identity_holds

    def summary(self) -> str:
        total = Fraction(self.ledger.total_final(), Q)
        neg = ", ".join(f"{n.element}={fmt(n.charge)}" for n in self.negatives) or "none"
        return f"total = {total.numerator}/{total.denominator} (χ={self.euler}); negatives: {neg}"


def audit(rs: RotationSystem, ledger: ChargeLedger | None = None) -> AuditReport:
    g = rs.graph
    ledger = ledger or apply_rules(rs)
    sent, received = ledger.flows()
    # the rules never create or destroy charge; a mismatch here is a bug
    assert all(ledger.final[x] == q - sent[x] + received[x] for x, q in ledger.initial.items())
    vclass = classify_vertices(g)
    fclass = classify_faces(rs, vclass)
    screens = run_screens(rs)
    negatives = []
    for x, q in ledger.final.items():
        if q >= 0:
            continue
        idx = int(x[1:])
        if x[0] == "v":
            c = vclass[idx]
            context = f"vertex {c.label} {c.role}"
            hits = tuple(sorted({s.screen for s in screens if idx in s.vertices}))
        else:
            fc = fclass[idx]
            context = f"face {fc.label} ({','.join(fc.labels)})"
            hits = tuple(sorted({s.screen for s in screens if idx in s.faces}))
        negatives.append(NegativeElement(x, q, context, hits))
    return AuditReport(g.n, g.num_edges, len(rs.faces), ledger, negatives)
