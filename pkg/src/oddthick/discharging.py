"""Charge bookkeeping for the girth-6 thickness bound.

Initial charges per layer: ``d(f) - 6`` on faces, ``2 d_i(v) - 6`` on
vertices and ``6`` on components, so each layer sums to ``-6`` by Euler's
formula. The rule moves one unit from every neighbor ``w`` to each vertex
``v`` with ``d(v) < 3t``, degrees taken in the union graph. Transfers are
booked on layer 0; only per-vertex sums over layers are ever inspected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InvariantError
from .graph import ACYCLIC, Graph, girth
from .planarity import Face, PlaneEmbedding, planar_embed
from .thickness import EdgePartition


@dataclass(frozen=True)
class LayerCharges:
    faces: tuple[int, ...]
    vertices: tuple[int, ...]
    components: tuple[int, ...]
    face_degrees: tuple[int, ...]

    def total(self) -> int:
        return sum(self.faces) + sum(self.vertices) + sum(self.components)


@dataclass(frozen=True)
class ChargeLedger:
    layers: tuple[LayerCharges, ...]
    received: tuple[int, ...] = ()
    sent: tuple[int, ...] = ()

    @property
    def t(self) -> int:
        return len(self.layers)

    def total(self) -> int:
        return sum(layer.total() for layer in self.layers)

    def vertex_charge(self, v: int) -> int:
        return sum(layer.vertices[v] for layer in self.layers)


def initial_charges(layers: Sequence[tuple[Graph, PlaneEmbedding]]) -> ChargeLedger:
    if not layers:
        raise DomainError("at least one layer is required")
    n = layers[0][0].n
    out = []
    for i, (g, emb) in enumerate(layers):
        if g.n != n or emb.n != n:
            raise DomainError(f"layer {i} has a different vertex set")
        if emb.graph() != g:
            raise DomainError(f"embedding of layer {i} does not match its graph")
        if not emb.euler_ok():
            raise DomainError(f"embedding of layer {i} fails the Euler check")
        degs = tuple(f.degree for f in emb.faces)
        charges = LayerCharges(
            faces=tuple(d - 6 for d in degs),
            vertices=tuple(2 * g.degree(v) - 6 for v in range(n)),
            components=(6,) * emb.component_count,
            face_degrees=degs,
        )
        if charges.total() != -6:
            raise InvariantError(f"layer {i} charge sum is {charges.total()}, expected -6")
        out.append(charges)
    return ChargeLedger(tuple(out), (0,) * n, (0,) * n)


def apply_rule(g: Graph, ledger: ChargeLedger, t: int) -> ChargeLedger:
    n = g.n
    received = [0] * n
    sent = [0] * n
    for v in range(n):
        if g.degree(v) < 3 * t:
            for w in g.adj[v]:
                received[v] += 1
                sent[w] += 1
    first = ledger.layers[0]
    moved = tuple(first.vertices[v] + received[v] - sent[v] for v in range(n))
    layers = (LayerCharges(first.faces, moved, first.components, first.face_degrees),) + ledger.layers[1:]
    out = ChargeLedger(layers, tuple(received), tuple(sent))
    if out.total() != ledger.total():
        raise InvariantError("discharging rule did not conserve total charge")
    return out


@dataclass
class DischargeReport:
    t: int
    total_initial: int
    total_final: int
    degrees: list[int]
    face_violations: list[dict] = field(default_factory=list)
    component_violations: list[dict] = field(default_factory=list)
    vertex_violations: list[dict] = field(default_factory=list)
    girth: int | str = "acyclic"
    min_degree: int = 0
    girth_at_least_6: bool = False
    min_degree_at_least_2t_minus_1: bool = False
    easy_union_depth: int = 0
    largest_valid_easy_depth: int = 0

    @property
    def hypotheses_hold(self) -> bool:
        return self.girth_at_least_6 and self.min_degree_at_least_2t_minus_1

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "S": self.total_initial,
            "S_star": self.total_final,
            "hypotheses": {
                "girth": self.girth,
                "girth_at_least_6": self.girth_at_least_6,
                "min_degree": self.min_degree,
                "min_degree_at_least_2t_minus_1": self.min_degree_at_least_2t_minus_1,
            },
            "face_violations": self.face_violations,
            "component_violations": self.component_violations,
            "vertex_violations": self.vertex_violations,
            "easy_union_depth": {
                "used_by_argument": self.easy_union_depth,
                "largest_with_k_ge_4n_plus_2": self.largest_valid_easy_depth,
            },
        }


def _acyclic_boundary(face: Face) -> bool:
    """True when every boundary edge is walked in both directions, i.e. no cycle bounds the face.

    Only such faces can have degree below the girth.
    """
    darts = {d for walk in face.walks for d in walk}
    return all((b, a) in darts for a, b in darts)


def verify_certificate(
    g: Graph,
    partition: EdgePartition,
    embeddings: Sequence[PlaneEmbedding],
    t: int,
) -> DischargeReport:
    """Run the charge argument on a concrete partition and report every failing inequality.

    Missing layers (when ``t`` exceeds the class count) are padded with empty
    spanning subgraphs, which carry the same ``-6`` total.
    """
    try:
        partition.validate(g)
    except DomainError as exc:
        raise DomainError(f"invalid partition: {exc}") from None
    if len(embeddings) != partition.t:
        raise DomainError(f"{len(embeddings)} embeddings for {partition.t} classes")
    if t < partition.t:
        raise DomainError(f"partition has {partition.t} classes but t = {t}")
    layers = list(zip(partition.layers(g), embeddings))
    for _ in range(t - partition.t):
        empty = Graph(g.n)
        layers.append((empty, planar_embed(empty).embedding))
    ledger = initial_charges(layers)
    if ledger.total() != -6 * t:
        raise InvariantError(f"initial total {ledger.total()} != {-6 * t}")
    final = apply_rule(g, ledger, t)
    gi = girth(g)
    degs = g.degrees()
    report = DischargeReport(
        t=t,
        total_initial=ledger.total(),
        total_final=final.total(),
        degrees=degs,
        girth="acyclic" if gi is ACYCLIC else gi,
        min_degree=min(degs) if degs else 0,
        girth_at_least_6=gi >= 6,
        min_degree_at_least_2t_minus_1=bool(degs) and min(degs) >= 2 * t - 1,
        easy_union_depth=(3 * t) // 2,
        largest_valid_easy_depth=(6 * t - 1) // 4,
    )
    for i, layer in enumerate(final.layers):
        faces = layers[i][1].faces
        for fi, (charge, deg) in enumerate(zip(layer.faces, layer.face_degrees)):
            if charge < 0:
                report.face_violations.append({
                    "layer": i,
                    "face": fi,
                    "degree": deg,
                    "charge": charge,
                    "acyclic_boundary": _acyclic_boundary(faces[fi]),
                })
        for ci, charge in enumerate(layer.components):
            if charge < 0:
                report.component_violations.append({"layer": i, "component": ci, "charge": charge})
    for v in range(g.n):
        charge = final.vertex_charge(v)
        if charge < 0:
            report.vertex_violations.append({
                "vertex": v,
                "degree": degs[v],
                "initial": ledger.vertex_charge(v),
                "received": final.received[v],
                "sent": final.sent[v],
                "final": charge,
            })
    return report


# ---------------------------------------------------------------------------
# surplus counting
# ---------------------------------------------------------------------------


def count_threshold(t: int) -> Fraction | None:
    """``2t / (t - 1)``; ``None`` for ``t = 1`` where the count argument does not apply."""
    return None if t <= 1 else Fraction(2 * t, t - 1)


def largest_allowed_count(t: int) -> int | None:
    """Largest integer strictly below ``2t / (t - 1)``."""
    thr = count_threshold(t)
    if thr is None:
        return None
    return -(-thr.numerator // thr.denominator) - 1


@dataclass(frozen=True)
class SurplusReport:
    t: int
    low_vertices: tuple[int, ...]
    deficit_bounds: dict[int, int]
    aggregate_bound: int
    threshold: Fraction | None
    applies: bool | None

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "low_vertices": list(self.low_vertices),
            "deficit_bounds": {str(k): v for k, v in self.deficit_bounds.items()},
            "aggregate_bound": self.aggregate_bound,
            "threshold": None if self.threshold is None else str(self.threshold),
            "applies": self.applies,
        }


def surplus_from_count(t: int, count: int, degrees: dict[int, int] | None = None) -> SurplusReport:
    thr = count_threshold(t)
    degrees = degrees or {}
    return SurplusReport(
        t=t,
        low_vertices=tuple(sorted(degrees)),
        deficit_bounds={y: 3 * d - 6 * t for y, d in sorted(degrees.items())},
        aggregate_bound=-6 * count * (t - 1),
        threshold=thr,
        applies=None if thr is None else count < thr,
    )


def surplus_analysis(report: DischargeReport, t: int) -> SurplusReport:
    """Count the vertices of degree ``2..2t-1`` and test them against ``2t/(t-1)``."""
    low = {v: d for v, d in enumerate(report.degrees) if 2 <= d <= 2 * t - 1}
    return surplus_from_count(t, len(low), low)
