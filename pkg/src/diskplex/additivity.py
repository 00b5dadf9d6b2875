"""Gluing tetrahedra, matching piece boundaries, and index additivity.

A skeleton is a set of tetrahedra with some faces glued in pairs; each
gluing carries a permutation of the three arc types (equivalently, the
corner correspondence of the identified triangles).  A configuration
places catalog pieces with multiplicities in the tetrahedra.  Matching
requires arc counts on glued faces to agree under the permutation; the
Euler characteristic then comes from counting crossing points, arcs and
piece contributions after the identifications; and the index of the
configuration's joined model complex must equal the sum of the local
declared indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .homology import HomologyIndex, homology_index
from .join_formula import index_sum_law
from .pieces import EDGES, FACES, LocalPiece, piece
from .simplicial import SimplicialComplex, join_all, relabel


@dataclass(frozen=True)
class Gluing:
    """Face ``face_a`` of ``tet_a`` glued to ``face_b`` of ``tet_b``.

    ``perm`` sends arc-type slots of face_a to arc-type slots of face_b;
    slot i of a face is its i-th corner vertex in ascending order.
    """

    tet_a: int
    face_a: int
    tet_b: int
    face_b: int
    perm: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"perm {self.perm!r} is not a permutation of (0, 1, 2)")
        if not (0 <= self.face_a <= 3 and 0 <= self.face_b <= 3):
            raise ValueError("face labels must be 0..3")
        if (self.tet_a, self.face_a) == (self.tet_b, self.face_b):
            raise ValueError("a face cannot be glued to itself")


@dataclass(frozen=True)
class TetGluing:
    """Gluing skeleton: ``tets`` tetrahedra, faces glued at most once."""

    tets: int
    gluings: tuple[Gluing, ...] = ()

    def __post_init__(self):
        if self.tets < 1:
            raise ValueError("need at least one tetrahedron")
        used = set()
        for g in self.gluings:
            for side in ((g.tet_a, g.face_a), (g.tet_b, g.face_b)):
                if not (0 <= side[0] < self.tets):
                    raise ValueError(f"gluing references missing tetrahedron {side[0]}")
                if side in used:
                    raise ValueError(f"face {side} glued more than once")
                used.add(side)

    def glued_faces(self) -> set[tuple[int, int]]:
        out = set()
        for g in self.gluings:
            out.add((g.tet_a, g.face_a))
            out.add((g.tet_b, g.face_b))
        return out


@dataclass(frozen=True)
class Placement:
    tet: int
    kind: str
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")


@dataclass(frozen=True)
class SurfaceConfiguration:
    skeleton: TetGluing
    placements: tuple[Placement, ...] = ()

    def __post_init__(self):
        for pl in self.placements:
            if not (0 <= pl.tet < self.skeleton.tets):
                raise ValueError(f"placement references missing tetrahedron {pl.tet}")
            piece(pl.kind)  # raises on unknown kinds

    def pieces_in(self, tet: int) -> list[tuple[LocalPiece, int]]:
        return [(piece(pl.kind), pl.multiplicity) for pl in self.placements if pl.tet == tet]


def _face_arc_vector(config: SurfaceConfiguration, tet: int, f: int) -> tuple[int, int, int]:
    """Arc counts on one face by corner slot, summed over placed pieces."""
    totals = [0, 0, 0]
    for p, mult in config.pieces_in(tet):
        for slot in range(3):
            totals[slot] += mult * p.face_arcs[f].corners[slot]
    return tuple(totals)


def _edge_weight(config: SurfaceConfiguration, tet: int, edge: tuple[int, int]) -> int:
    return sum(mult * p.edge_weight(edge) for p, mult in config.pieces_in(tet))


@dataclass(frozen=True)
class MatchingReport:
    passed: bool
    residuals: tuple[tuple, ...] = ()  # (gluing, slot, count_a, count_b)

    def render_lines(self) -> list[str]:
        if self.passed:
            return ["matching: PASS"]
        out = ["matching: FAIL"]
        for g, slot, ca, cb in self.residuals:
            out.append(
                f"  tet {g.tet_a} face {g.face_a} slot {slot} has {ca} arcs, "
                f"tet {g.tet_b} face {g.face_b} slot {g.perm[slot]} has {cb}"
            )
        return out

    def to_json(self):
        return {
            "passed": self.passed,
            "residuals": [
                {
                    "tet_a": g.tet_a, "face_a": g.face_a,
                    "tet_b": g.tet_b, "face_b": g.face_b,
                    "slot": slot, "count_a": ca, "count_b": cb,
                }
                for g, slot, ca, cb in self.residuals
            ],
        }


def check_matching(config: SurfaceConfiguration) -> MatchingReport:
    """Arc counts on glued faces must agree under each gluing's permutation."""
    residuals = []
    for g in config.skeleton.gluings:
        va = _face_arc_vector(config, g.tet_a, g.face_a)
        vb = _face_arc_vector(config, g.tet_b, g.face_b)
        for slot in range(3):
            if va[slot] != vb[g.perm[slot]]:
                residuals.append((g, slot, va[slot], vb[g.perm[slot]]))
    return MatchingReport(passed=not residuals, residuals=tuple(residuals))


def _edge_identifications(skeleton: TetGluing):
    """Union-find classes of (tet, edge) pairs induced by the face gluings."""
    parent: dict = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for t in range(skeleton.tets):
        for e in EDGES:
            parent.setdefault((t, e), (t, e))
    for g in skeleton.gluings:
        ca, cb = FACES[g.face_a], FACES[g.face_b]
        for i in range(3):
            for j in range(i + 1, 3):
                ea = tuple(sorted((ca[i], ca[j])))
                eb = tuple(sorted((cb[g.perm[i]], cb[g.perm[j]])))
                union((g.tet_a, ea), (g.tet_b, eb))

    classes: dict = {}
    for key in parent:
        classes.setdefault(find(key), []).append(key)
    return list(classes.values())


def euler_characteristic(config: SurfaceConfiguration) -> int:
    """Euler characteristic of the assembled surface.

    Crossing points are identified around edge orbits, arcs in glued
    faces are identified in pairs, and every piece contributes its own
    Euler characteristic as its face value (1 for the disk pieces).
    """
    report = check_matching(config)
    if not report.passed:
        raise ValueError("matching failed; residuals: " + "; ".join(report.render_lines()[1:]))

    vertices = 0
    for cls in _edge_identifications(config.skeleton):
        weights = {_edge_weight(config, t, e) for t, e in cls}
        if len(weights) != 1:
            raise ValueError(f"inconsistent crossing counts around edge class {sorted(cls)}")
        vertices += weights.pop()

    edges = 0
    glued = {}
    for g in config.skeleton.gluings:
        glued[(g.tet_a, g.face_a)] = (g.tet_b, g.face_b)
        glued[(g.tet_b, g.face_b)] = (g.tet_a, g.face_a)
    for t in range(config.skeleton.tets):
        for f in range(4):
            arcs_here = sum(_face_arc_vector(config, t, f))
            partner = glued.get((t, f))
            if partner is None or (t, f) < partner:
                edges += arcs_here

    faces = sum(pl.multiplicity * piece(pl.kind).euler for pl in config.placements)
    return vertices - edges + faces


def global_complex(config: SurfaceConfiguration) -> SimplicialComplex:
    """Join of the placed pieces' model complexes, one namespaced copy per unit
    of multiplicity.  Empty models act as join identities."""
    parts = []
    ordered = sorted(config.placements, key=lambda pl: (pl.tet, pl.kind))
    for pl in ordered:
        model = piece(pl.kind).model_complex
        for copy in range(pl.multiplicity):
            if model.is_empty:
                continue
            parts.append(relabel(model, f"t{pl.tet}.{pl.kind}.{copy}"))
    label = " * ".join(f"t{pl.tet}:{pl.kind}x{pl.multiplicity}" for pl in ordered) or "empty"
    return join_all(parts, name=f"config[{label}]")


@dataclass(frozen=True)
class IndexSumReport:
    global_index: HomologyIndex
    summed_index: HomologyIndex
    local_indices: tuple[HomologyIndex, ...]

    @property
    def passed(self) -> bool:
        return self.global_index == self.summed_index

    def render_lines(self) -> list[str]:
        locals_str = ", ".join(str(i) for i in self.local_indices) or "(none)"
        return [
            f"local indices: {locals_str}",
            f"sum law:      {self.summed_index}",
            f"global join:  {self.global_index}",
            f"verdict: {'PASS' if self.passed else 'FAIL'}",
        ]

    def to_json(self):
        return {
            "local_indices": [str(i) for i in self.local_indices],
            "summed_index": str(self.summed_index),
            "global_index": str(self.global_index),
            "passed": self.passed,
        }


def verify_index_sum(config: SurfaceConfiguration) -> IndexSumReport:
    """Compare the joined model complex's index with the local sum."""
    locals_ = []
    for pl in sorted(config.placements, key=lambda pl: (pl.tet, pl.kind)):
        locals_.extend([piece(pl.kind).declared_index] * pl.multiplicity)
    summed = index_sum_law(locals_)
    direct = homology_index(global_complex(config))
    return IndexSumReport(global_index=direct, summed_index=summed, local_indices=tuple(locals_))


# ------------------------------------------------------------- file format

def config_from_json_dict(data: dict) -> SurfaceConfiguration:
    """Schema: {"tets": N, "gluings": [[tA, fA, tB, fB, [p0, p1, p2]], ...],
    "pieces": [[tet, "KIND", mult], ...]}."""
    if not isinstance(data, dict):
        raise ValueError("configuration file must hold a JSON object")
    try:
        tets = int(data["tets"])
    except (KeyError, TypeError, ValueError):
        raise ValueError('configuration needs an integer "tets" field') from None
    gluings = []
    for i, entry in enumerate(data.get("gluings", [])):
        try:
            ta, fa, tb, fb, perm = entry
            gluings.append(Gluing(int(ta), int(fa), int(tb), int(fb), tuple(int(p) for p in perm)))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"gluings[{i}]: {exc}") from None
    placements = []
    for i, entry in enumerate(data.get("pieces", [])):
        try:
            tet, kind, mult = entry
            placements.append(Placement(int(tet), str(kind), int(mult)))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"pieces[{i}]: {exc}") from None
    return SurfaceConfiguration(TetGluing(tets, tuple(gluings)), tuple(placements))


def config_to_json_dict(config: SurfaceConfiguration) -> dict:
    return {
        "tets": config.skeleton.tets,
        "gluings": [
            [g.tet_a, g.face_a, g.tet_b, g.face_b, list(g.perm)]
            for g in config.skeleton.gluings
        ],
        "pieces": [[pl.tet, pl.kind, pl.multiplicity] for pl in config.placements],
    }


def load_config(path) -> SurfaceConfiguration:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return config_from_json_dict(data)
