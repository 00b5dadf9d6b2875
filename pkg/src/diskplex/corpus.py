"""Deterministic random corpora for the verification suite and tests.

Every generator takes an explicit ``random.Random``; nothing reads global
state, so a fixed seed reproduces every case byte for byte.  Set
iteration never feeds the generators (hash randomization must not leak
into the corpora).
"""

from __future__ import annotations

import random

from .additivity import Gluing, Placement, SurfaceConfiguration, TetGluing, check_matching
from .homology import homology_index
from .pieces import FACES
from .simplicial import SimplicialComplex, from_facets, full_subcomplex
from .width import SurfaceComponentModel, SurgeryMove, available_moves


def random_complex(
    rng: random.Random,
    max_vertices: int = 7,
    max_facet_size: int = 4,
    max_facets: int = 9,
    allow_empty: bool = True,
) -> SimplicialComplex:
    n = rng.randint(0 if allow_empty else 1, max_vertices)
    if n == 0:
        return from_facets([], name="random-empty")
    vertices = list(range(1, n + 1))
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, min(max_facet_size, n))
        facets.append(rng.sample(vertices, size))
    return from_facets(facets, name=f"random({n}v)")


def random_nonempty_complex(rng: random.Random, **kw) -> SimplicialComplex:
    kw["allow_empty"] = False
    return random_complex(rng, **kw)


def milnor_pairs(rng: random.Random, count: int, max_facet_size: int = 3, max_facets: int = 6):
    """Pairs for join-formula checks; empty factors appear occasionally.

    Facet sizes stay small so the joined complex's boundary matrices stay
    a desk-scale exact computation.
    """
    for _ in range(count):
        a = random_complex(rng, max_vertices=7, max_facet_size=max_facet_size,
                           max_facets=max_facets, allow_empty=True)
        b = random_complex(rng, max_vertices=7, max_facet_size=max_facet_size,
                           max_facets=max_facets, allow_empty=(not a.is_empty))
        yield a, b


def full_subcomplex_pairs(rng: random.Random, count: int):
    """Pairs (X, Y) with X a full subcomplex of Y and X not acyclic."""
    made = 0
    while made < count:
        y = random_complex(rng, max_vertices=8, max_facet_size=4, max_facets=10, allow_empty=False)
        verts = list(y.vertices())
        keep = rng.sample(verts, rng.randint(0, len(verts)))
        x = full_subcomplex(y, keep)
        if homology_index(x).is_acyclic:
            continue
        made += 1
        yield x, y


def random_surface(rng: random.Random, max_components: int = 6) -> tuple[SurfaceComponentModel, ...]:
    comps = []
    for _ in range(rng.randint(1, max_components)):
        comps.append(
            SurfaceComponentModel(
                euler=rng.randint(-10, 2),
                weight=rng.randint(0, 20),
                in_ball=rng.random() < 0.2,
            )
        )
    return tuple(comps)


def random_move(rng: random.Random, surface) -> SurgeryMove | None:
    moves = available_moves(surface)
    if not moves:
        return None
    return moves[rng.randrange(len(moves))]


def surfaces_with_moves(rng: random.Random, count: int):
    made = 0
    while made < count:
        surface = random_surface(rng)
        move = random_move(rng, surface)
        if move is None:
            continue
        made += 1
        yield surface, move


# ----------------------------------------------------- configurations

_INDEXED_OPEN = ("OCT_1", "OCT_2", "OCT_3", "HELICAL_12GON", "OCT_TUBE_DISK", "OCT_TUBE_SELF")
_INDEXED_VERTEX = ("TUBE", "TRIPLE_TUBE")  # arcs only on the three faces at vertex 0


def _mirror_quad(kind: str, gluing: Gluing, outgoing: bool) -> str:
    """The unique quad kind matching ``kind`` across a gluing.

    A quad's arc in a face cuts off the partner of that face inside its
    partition side; the image arc type under the gluing's permutation
    determines the partner of the far face, hence the far quad type.
    """
    q = int(kind[-1])
    if outgoing:
        f_here, f_there = gluing.face_a, gluing.face_b
        send = {FACES[f_here][i]: FACES[f_there][gluing.perm[i]] for i in range(3)}
    else:
        f_here, f_there = gluing.face_b, gluing.face_a
        send = {FACES[f_here][gluing.perm[i]]: FACES[f_there][i] for i in range(3)}
    side_a, side_b = (0, q), tuple(v for v in (1, 2, 3) if v != q)
    side = side_a if f_here in side_a else side_b
    partner = next(v for v in side if v != f_here)
    cut_there = send[partner]
    pair = tuple(sorted((f_there, cut_there)))
    # the partition containing {f_there, cut_there} names the far quad
    for q2 in (1, 2, 3):
        sides = ((0, q2), tuple(v for v in (1, 2, 3) if v != q2))
        if pair in (tuple(sorted(s)) for s in sides):
            return f"QUAD_{q2}"
    raise AssertionError("no quad partition contains the image pair")


def random_configuration(rng: random.Random, max_tets: int = 5, max_indexed: int = 3) -> SurfaceConfiguration:
    """A random valid configuration: gluing forest, triangle backbone,
    mirrored quad chains, and indexed pieces on unglued faces."""
    tets = rng.randint(1, max_tets)
    free_faces = {(t, f) for t in range(tets) for f in range(4)}
    gluings: list[Gluing] = []
    attached: dict[int, list[Gluing]] = {t: [] for t in range(tets)}
    for tb in range(1, tets):
        if rng.random() < 0.75:
            ta = rng.randrange(tb)
            choices_a = sorted(f for (t, f) in free_faces if t == ta)
            choices_b = sorted(f for (t, f) in free_faces if t == tb)
            if not choices_a or not choices_b:
                continue
            fa = rng.choice(choices_a)
            fb = rng.choice(choices_b)
            perm = tuple(rng.sample(range(3), 3))
            g = Gluing(ta, fa, tb, fb, perm)
            gluings.append(g)
            attached[ta].append(g)
            attached[tb].append(g)
            free_faces.discard((ta, fa))
            free_faces.discard((tb, fb))

    counts: dict[tuple[int, str], int] = {}

    def put(tet: int, kind: str, mult: int = 1):
        counts[(tet, kind)] = counts.get((tet, kind), 0) + mult

    # uniform vertex-triangle backbone: matches any gluing
    backbone = rng.randint(0, 2)
    if backbone:
        for t in range(tets):
            for v in range(4):
                put(t, f"TRI_{v}", backbone)

    # a mirrored quad chain: propagate the forced quad type along the forest
    if rng.random() < 0.5:
        seed_tet = rng.randrange(tets)
        seed_quad = f"QUAD_{rng.randint(1, 3)}"
        todo = [(seed_tet, seed_quad, None)]
        while todo:
            t, kind, came_from = todo.pop()
            put(t, kind)
            for g in attached[t]:
                if g is came_from:
                    continue
                if g.tet_a == t:
                    todo.append((g.tet_b, _mirror_quad(kind, g, outgoing=True), g))
                else:
                    todo.append((g.tet_a, _mirror_quad(kind, g, outgoing=False), g))

    # indexed pieces where their arc-bearing faces are free
    glued_faces = {(g.tet_a, g.face_a) for g in gluings} | {(g.tet_b, g.face_b) for g in gluings}
    budget = rng.randint(0, max_indexed)
    placed = 0
    for _ in range(12):
        if placed >= budget:
            break
        kind = rng.choice(_INDEXED_OPEN + _INDEXED_VERTEX)
        candidates = []
        for t in range(tets):
            faces_used = {f for (tt, f) in glued_faces if tt == t}
            if kind in _INDEXED_VERTEX:
                # vertex-0 pieces keep face 0 arc-free
                if faces_used <= {0}:
                    candidates.append(t)
            elif not faces_used:
                candidates.append(t)
        if candidates:
            mult = 1 if rng.random() < 0.8 else min(2, budget - placed)
            mult = max(mult, 1)
            put(rng.choice(candidates), kind, mult)
            placed += mult

    placements = tuple(
        Placement(t, kind, m) for (t, kind), m in sorted(counts.items()) if m > 0
    )
    config = SurfaceConfiguration(TetGluing(tets, tuple(gluings)), placements)
    report = check_matching(config)
    if not report.passed:
        raise AssertionError(f"generator produced an invalid configuration: {report.residuals!r}")
    return config


def random_configurations(rng: random.Random, count: int):
    for _ in range(count):
        yield random_configuration(rng)


def random_grid_specs(rng: random.Random, count: int):
    for _ in range(count):
        n = rng.randint(1, 3)
        yield n, [rng.randint(0, 3) for _ in range(n)]
