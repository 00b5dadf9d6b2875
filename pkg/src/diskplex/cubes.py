"""Cube decompositions: cone-to-cube identification, grid subdivisions,
and dual cell structures of combinatorial balls.

Grid cells are tuples of per-axis integer ranges (lo, hi) with hi - lo
in {0, 1}; dimension is the number of unit axes.  The cone over an
(n-1)-simplex maps onto the unit n-cube with the apex at the origin,
the i-th base vertex at e_i, and the barycenter of each base face at the
sum of its vertices' corners, so cube corners are labeled bijectively by
the apex together with the faces of the base simplex.

Dual structures: in a combinatorial n-ball, every d-cell not contained in
the boundary sphere receives a dual (n-d)-cell, with incidence reversed;
cells lying entirely in the boundary get no dual.  The dual of a single
n-cube is a single vertex at its center; two squares glued along an edge
dualize to two vertices joined through the shared edge's dual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .simplicial import SimplicialComplex, simplex_complex

GridCell = tuple  # per-axis (lo, hi) pairs


@dataclass(frozen=True, eq=False)
class CubicalComplex:
    """Cell complex with explicit dimensions, vertex sets and covering faces.

    ``covers[c]`` lists the codimension-1 faces of cell ``c``; transitive
    incidence follows by closure.  ``labels`` optionally tags 0-cells.
    """

    name: str
    dim: int
    cells: tuple
    cell_dim: dict
    cell_vertices: dict
    covers: dict
    labels: dict = field(default_factory=dict)

    def cells_of_dim(self, d: int) -> list:
        return [c for c in self.cells if self.cell_dim[c] == d]

    def counts_by_dim(self) -> tuple[int, ...]:
        out = [0] * (self.dim + 1)
        for c in self.cells:
            out[self.cell_dim[c]] += 1
        return tuple(out)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.counts_by_dim()))

    def parents(self) -> dict:
        if not hasattr(self, "_parents"):
            par: dict = {c: [] for c in self.cells}
            for c in self.cells:
                for f in self.covers[c]:
                    par[f].append(c)
            object.__setattr__(self, "_parents", par)
        return self._parents

    def top_cells(self) -> list:
        return [c for c in self.cells if not self.parents()[c]]

    def boundary_cells(self) -> set:
        """Closure of the codim-1 cells met by at most one top cell."""
        par = self.parents()
        frontier = [c for c in self.cells if self.cell_dim[c] == self.dim - 1 and len(par[c]) <= 1]
        seen = set(frontier)
        while frontier:
            c = frontier.pop()
            for f in self.covers[c]:
                if f not in seen:
                    seen.add(f)
                    frontier.append(f)
        return seen

    def __repr__(self):
        return f"<{self.name or 'cubical'}: {self.counts_by_dim()} cells>"


def _grid_vertices(cell: GridCell) -> frozenset:
    return frozenset(product(*[(lo,) if lo == hi else (lo, hi) for lo, hi in cell]))


def subdivide_cube(n: int, counts: Sequence[int], name: str = "") -> CubicalComplex:
    """Unit n-cube cut by ``counts[i]`` interior planes orthogonal to axis i.

    Axis i splits into counts[i] + 1 unit cells; lattice vertex x sits at
    coordinates x(i) / (counts[i] + 1).  Top cells number the product of
    (counts[i] + 1); vertices the product of (counts[i] + 2).
    """
    if n < 1:
        raise ValueError("need dimension at least 1")
    counts = list(counts)
    if len(counts) != n:
        raise ValueError(f"expected {n} subdivision counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise ValueError("subdivision counts cannot be negative")

    per_axis = []
    for c in counts:
        segs = [(j, j + 1) for j in range(c + 1)]
        pts = [(j, j) for j in range(c + 2)]
        per_axis.append(pts + segs)

    cells = [tuple(choice) for choice in product(*per_axis)]
    cell_dim = {c: sum(1 for lo, hi in c if hi > lo) for c in cells}
    covers = {}
    for c in cells:
        faces = []
        for axis, (lo, hi) in enumerate(c):
            if hi > lo:
                faces.append(c[:axis] + ((lo, lo),) + c[axis + 1 :])
                faces.append(c[:axis] + ((hi, hi),) + c[axis + 1 :])
        covers[c] = tuple(faces)
    cell_vertices = {c: _grid_vertices(c) for c in cells}
    cells.sort()
    return CubicalComplex(
        name=name or f"grid{tuple(counts)}",
        dim=n,
        cells=tuple(cells),
        cell_dim=cell_dim,
        cell_vertices=cell_vertices,
        covers=covers,
    )


def grid_coordinates(vertex: tuple, counts: Sequence[int]) -> tuple[Fraction, ...]:
    """Geometric coordinates of a lattice vertex in the unit cube.

    Accepts either a tuple of lattice integers or a vertex cell, whose
    per-axis entries are degenerate ``(j, j)`` intervals.
    """
    coords = []
    for x, c in zip(vertex, counts):
        if isinstance(x, tuple):
            lo, hi = x
            if lo != hi:
                raise ValueError(f"not a vertex cell: axis interval {x}")
            x = lo
        coords.append(Fraction(x, c + 1))
    return tuple(coords)


def cube_from_cone(n: int) -> CubicalComplex:
    """The unit n-cube as the cone over an (n-1)-simplex, corners labeled.

    The corner with support S (as a 0/1 vector) is labeled by the face of
    the base simplex spanned by {v_i : i in S}, sitting at that face's
    barycenter; the origin is labeled by the apex ``z``.  The labeling is
    a bijection onto {apex} + faces of the base, equivalently onto the
    faces of the cone that contain the apex.
    """
    if not (1 <= n <= 6):
        raise ValueError("cone-to-cube identification supported for 1 <= n <= 6")
    cube = subdivide_cube(n, [0] * n, name=f"cone-cube-{n}")
    labels = {}
    for corner in product((0, 1), repeat=n):
        support = tuple(i + 1 for i, x in enumerate(corner) if x)
        labels[corner] = "z" if not support else support
    return CubicalComplex(
        name=cube.name,
        dim=cube.dim,
        cells=cube.cells,
        cell_dim=cube.cell_dim,
        cell_vertices=cube.cell_vertices,
        covers=cube.covers,
        labels=labels,
    )


def cone_base_complex(n: int) -> SimplicialComplex:
    """The base (n-1)-simplex whose cone the labeled cube models."""
    return simplex_complex(range(1, n + 1), name=f"base-simplex-{n - 1}")


# ----------------------------------------------------------------- duals

def _poset_from_simplicial(k: SimplicialComplex) -> CubicalComplex:
    faces = k.all_faces()
    cell_dim = {f: len(f) - 1 for f in faces}
    covers = {
        f: tuple(f[:i] + f[i + 1 :] for i in range(len(f))) if len(f) > 1 else ()
        for f in faces
    }
    return CubicalComplex(
        name=k.name or "simplicial",
        dim=k.dim,
        cells=tuple(faces),
        cell_dim=cell_dim,
        cell_vertices={f: frozenset(f) for f in faces},
        covers=covers,
    )


def validate_ball(complexe) -> None:
    """A combinatorial n-ball: pure, Euler characteristic 1, sphere boundary."""
    if isinstance(complexe, SimplicialComplex):
        if complexe.is_empty:
            raise ValueError("empty complex is not a ball")
        complexe = _poset_from_simplicial(complexe)
    n = complexe.dim
    for c in complexe.top_cells():
        if complexe.cell_dim[c] != n:
            raise ValueError(f"not pure: maximal cell {c!r} has dimension {complexe.cell_dim[c]}")
    if complexe.euler_characteristic() != 1:
        raise ValueError(
            f"Euler characteristic {complexe.euler_characteristic()} != 1; not a ball"
        )
    if n >= 1:
        boundary = complexe.boundary_cells()
        chi = sum((-1) ** complexe.cell_dim[c] for c in boundary)
        expected = 1 + (1 if (n - 1) % 2 == 0 else -1)
        if chi != expected:
            raise ValueError(
                f"boundary Euler characteristic {chi} != {expected}; boundary is not a sphere"
            )


def dual_cells(ball) -> CubicalComplex:
    """Dual cell structure on the interior of a combinatorial ball.

    Each primal d-cell not contained in the boundary yields a dual
    (n-d)-cell whose vertices are the top cells containing it; incidence
    is the primal incidence reversed.  Boundary-only primal cells have no
    duals, so the dual complex covers a smaller concentric ball.
    """
    if isinstance(ball, SimplicialComplex):
        if ball.is_empty:
            raise ValueError("empty complex is not a ball")
        poset = _poset_from_simplicial(ball)
    else:
        poset = ball
    validate_ball(poset)
    n = poset.dim
    boundary = poset.boundary_cells()
    interior = [c for c in poset.cells if c not in boundary]
    interior.sort(key=lambda c: (poset.cell_dim[c], repr(c)))

    parents = poset.parents()
    top = set(poset.top_cells())

    def tops_above(cell) -> frozenset:
        frontier, seen = [cell], {cell}
        while frontier:
            c = frontier.pop()
            for p in parents[c]:
                if p not in seen:
                    seen.add(p)
                    frontier.append(p)
        return frozenset(("dual", t) for t in seen & top)

    dual_ids = {c: ("dual", c) for c in interior}
    cell_dim = {dual_ids[c]: n - poset.cell_dim[c] for c in interior}
    covers = {
        dual_ids[c]: tuple(
            sorted((dual_ids[p] for p in parents[c]), key=repr)
        )
        for c in interior
    }
    cell_vertices = {dual_ids[c]: tops_above(c) for c in interior}
    cells = tuple(sorted(dual_ids.values(), key=repr))
    return CubicalComplex(
        name=f"dual({poset.name})",
        dim=n,
        cells=cells,
        cell_dim=cell_dim,
        cell_vertices=cell_vertices,
        covers=covers,
    )
