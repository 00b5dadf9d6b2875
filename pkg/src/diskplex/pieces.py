"""Catalog of surface pieces inside a single tetrahedron.

Tetrahedron model: vertices 0..3; face f is the triangle omitting vertex
f; the six edges are the vertex pairs.  A normal arc in a face cuts off
exactly one corner, so arc types in a face are keyed by its three corner
vertices.  Every catalog entry records, per face, how many arcs of each
type its boundary leaves there, plus how many times it crosses each edge.

Arc/weight derivations frozen here:

* Vertex triangle at v: one arc cutting corner v in each face at v;
  crosses the three edges at v once.  Weight 3, disk.
* Quad of partition {a,b}|{c,d}: crosses the four edges joining the two
  sides once each (weight 4, disk); in face f its single arc cuts off the
  partner of f inside f's partition side.
* Octagon of the same partition: weight 8, since the two partition-interior
  edges are crossed twice and the four crossing edges once; each face holds
  two arcs, one at each corner of the partition side avoiding that face.
* Tube piece: two parallel vertex triangles joined by an unknotted tube.
  Boundary data is twice the triangle's (weight 6); the tube drops the
  Euler characteristic to 0.
* Helical 12-gon: a disk whose boundary walks every face three times.
  With every edge crossed twice (total weight 12), endpoint consistency
  forces one arc of each type in every face; that is the unique solution
  at this weight.
* Triple tube: three parallel vertex triangles and two tubes (weight 9,
  Euler characteristic -1).
* Octagon tubed to a disk: octagon + vertex triangle + tube (weight 11,
  Euler characteristic 0).  Octagon tubed to itself: octagon boundary
  data with a handle attached (weight 8, Euler characteristic -1).

Arc counts and edge weights are tied together: for each face f and each
edge e of f, the arcs in f with an endpoint on e are exactly those cutting
off one of e's two corners, so their counts sum to the crossing weight of
e.  Catalog validation enforces this, and checks each entry's model
complex against its declared index.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .homology import HomologyIndex, ZERO_INDEX, finite_index, homology_index
from .simplicial import SimplicialComplex, empty_complex, from_facets

FACES: tuple[tuple[int, int, int], ...] = tuple(
    tuple(v for v in range(4) if v != f) for f in range(4)
)
EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
)
EDGE_INDEX = {e: i for i, e in enumerate(EDGES)}

PIECE_KINDS: tuple[str, ...] = (
    "TRI_0", "TRI_1", "TRI_2", "TRI_3",
    "QUAD_1", "QUAD_2", "QUAD_3",
    "OCT_1", "OCT_2", "OCT_3",
    "TUBE",
    "HELICAL_12GON",
    "TRIPLE_TUBE",
    "OCT_TUBE_DISK",
    "OCT_TUBE_SELF",
)

# quad/oct type q pairs vertex 0 with vertex q
_PARTITIONS = {q: ((0, q), tuple(v for v in (1, 2, 3) if v != q)) for q in (1, 2, 3)}


@dataclass(frozen=True)
class FaceArcs:
    """Arc counts in one face: per-corner normal counts plus defect slots.

    ``corners`` follows the face's corner vertices in ascending order.
    ``loops`` and ``non_normal`` count closed curves and non-normal arcs;
    both must be zero for catalog data.
    """

    corners: tuple[int, int, int] = (0, 0, 0)
    loops: int = 0
    non_normal: int = 0

    def count(self, face: int, corner: int) -> int:
        return self.corners[FACES[face].index(corner)]

    def total(self) -> int:
        return sum(self.corners)


@dataclass(frozen=True)
class ArcCheck:
    passed: bool
    problems: tuple[str, ...] = ()


def check_normal_arcs(face_arcs: Iterable[FaceArcs] | Mapping[int, FaceArcs]) -> ArcCheck:
    """Pass iff every face carries only the three normal arc types."""
    if isinstance(face_arcs, Mapping):
        items = sorted(face_arcs.items())
    else:
        items = list(enumerate(face_arcs))
    problems = []
    for f, arcs in items:
        if any(c < 0 for c in arcs.corners):
            problems.append(f"face {f}: negative arc count")
        if arcs.loops:
            problems.append(f"face {f}: loop count {arcs.loops}")
        if arcs.non_normal:
            problems.append(f"face {f}: non-normal arc count {arcs.non_normal}")
    return ArcCheck(passed=not problems, problems=tuple(problems))


@dataclass(frozen=True)
class LocalPiece:
    """One catalog entry: combinatorial boundary data plus its index model."""

    kind: str
    edge_weights: tuple[int, int, int, int, int, int]
    face_arcs: tuple[FaceArcs, FaceArcs, FaceArcs, FaceArcs]
    euler: int
    declared_index: HomologyIndex
    model_complex: SimplicialComplex = field(compare=False)

    @property
    def weight(self) -> int:
        return sum(self.edge_weights)

    def edge_weight(self, edge: tuple[int, int]) -> int:
        return self.edge_weights[EDGE_INDEX[tuple(sorted(edge))]]

    def arc_count(self, face: int, corner: int) -> int:
        return self.face_arcs[face].count(face, corner)


def _model_empty() -> SimplicialComplex:
    return empty_complex("no-move model")


def _model_two_points() -> SimplicialComplex:
    return from_facets([["d0"], ["d1"]], name="two-move model")


def _model_circle() -> SimplicialComplex:
    ring = [["c0", "c1"], ["c1", "c2"], ["c2", "c3"], ["c0", "c3"]]
    return from_facets(ring, name="move-cycle model")


def _arcs_from_corner_counts(counts: Mapping[int, Mapping[int, int]]) -> tuple[FaceArcs, ...]:
    out = []
    for f in range(4):
        per = counts.get(f, {})
        out.append(FaceArcs(corners=tuple(per.get(c, 0) for c in FACES[f])))
    return tuple(out)


def _weights(per_edge: Mapping[tuple[int, int], int]) -> tuple[int, ...]:
    return tuple(per_edge.get(e, 0) for e in EDGES)


def _tri_data(v: int):
    arcs = {f: {v: 1} for f in range(4) if f != v}
    weights = {e: 1 for e in EDGES if v in e}
    return _arcs_from_corner_counts(arcs), _weights(weights)


def _quad_data(q: int):
    side_a, side_b = _PARTITIONS[q]
    arcs = {}
    for f in range(4):
        side = side_a if f in side_a else side_b
        partner = next(v for v in side if v != f)
        arcs[f] = {partner: 1}
    weights = {tuple(sorted((a, b))): 1 for a in side_a for b in side_b}
    return _arcs_from_corner_counts(arcs), _weights(weights)


def _oct_data(q: int):
    side_a, side_b = _PARTITIONS[q]
    arcs = {}
    for f in range(4):
        far_side = side_b if f in side_a else side_a
        arcs[f] = {v: 1 for v in far_side}
    weights = {tuple(sorted((a, b))): 1 for a in side_a for b in side_b}
    weights[tuple(sorted(side_a))] = 2
    weights[tuple(sorted(side_b))] = 2
    return _arcs_from_corner_counts(arcs), _weights(weights)


def _scale(data, factor: int):
    arcs, weights = data
    scaled_arcs = tuple(
        FaceArcs(corners=tuple(c * factor for c in fa.corners)) for fa in arcs
    )
    return scaled_arcs, tuple(w * factor for w in weights)


def _add(d1, d2):
    arcs = tuple(
        FaceArcs(corners=tuple(a + b for a, b in zip(fa.corners, fb.corners)))
        for fa, fb in zip(d1[0], d2[0])
    )
    weights = tuple(a + b for a, b in zip(d1[1], d2[1]))
    return arcs, weights


def _helical_data():
    arcs = {f: {c: 1 for c in FACES[f]} for f in range(4)}
    weights = {e: 2 for e in EDGES}
    return _arcs_from_corner_counts(arcs), _weights(weights)


@functools.lru_cache(maxsize=1)
def catalog() -> tuple[LocalPiece, ...]:
    """The validated catalog, one entry per piece kind."""
    pieces = []

    def add(kind, data, euler, index, model):
        arcs, weights = data
        pieces.append(
            LocalPiece(
                kind=kind,
                edge_weights=weights,
                face_arcs=arcs,
                euler=euler,
                declared_index=index,
                model_complex=model,
            )
        )

    for v in range(4):
        add(f"TRI_{v}", _tri_data(v), 1, ZERO_INDEX, _model_empty())
    for q in (1, 2, 3):
        add(f"QUAD_{q}", _quad_data(q), 1, ZERO_INDEX, _model_empty())
    for q in (1, 2, 3):
        add(f"OCT_{q}", _oct_data(q), 1, finite_index(1), _model_two_points())
    add("TUBE", _scale(_tri_data(0), 2), 0, finite_index(1), _model_two_points())
    add("HELICAL_12GON", _helical_data(), 1, finite_index(2), _model_circle())
    add("TRIPLE_TUBE", _scale(_tri_data(0), 3), -1, finite_index(2), _model_circle())
    add("OCT_TUBE_DISK", _add(_oct_data(1), _tri_data(0)), 0, finite_index(2), _model_circle())
    add("OCT_TUBE_SELF", _oct_data(1), -1, finite_index(2), _model_circle())

    result = tuple(pieces)
    validate_catalog(result)
    return result


@functools.lru_cache(maxsize=1)
def catalog_by_kind() -> dict[str, LocalPiece]:
    return {p.kind: p for p in catalog()}


def piece(kind: str) -> LocalPiece:
    try:
        return catalog_by_kind()[kind]
    except KeyError:
        raise ValueError(f"unknown piece kind {kind!r}") from None


def local_index(p: LocalPiece) -> HomologyIndex:
    """Recompute the model complex's index and check it against the declaration."""
    computed = homology_index(p.model_complex)
    if computed != p.declared_index:
        raise ValueError(
            f"piece {p.kind}: model index {computed} does not match declared {p.declared_index}"
        )
    return computed


def validate_catalog(pieces: Iterable[LocalPiece]) -> None:
    """Raise naming the offending piece on any catalog inconsistency."""
    seen = set()
    for p in pieces:
        if p.kind in seen:
            raise ValueError(f"piece {p.kind}: duplicate kind")
        seen.add(p.kind)
        verdict = check_normal_arcs(p.face_arcs)
        if not verdict.passed:
            raise ValueError(f"piece {p.kind}: {verdict.problems[0]}")
        if any(w < 0 for w in p.edge_weights):
            raise ValueError(f"piece {p.kind}: negative edge weight")
        # arcs landing on an edge from within a face must match the crossing count
        for f in range(4):
            corners = FACES[f]
            for a in range(3):
                for b in range(a + 1, 3):
                    e = (corners[a], corners[b])
                    endpoint_arcs = p.arc_count(f, corners[a]) + p.arc_count(f, corners[b])
                    if endpoint_arcs != p.edge_weight(e):
                        raise ValueError(
                            f"piece {p.kind}: face {f} leaves {endpoint_arcs} endpoints "
                            f"on edge {e} but the edge weight is {p.edge_weight(e)}"
                        )
        local_index(p)


def total_weight(p: LocalPiece) -> int:
    return p.weight
