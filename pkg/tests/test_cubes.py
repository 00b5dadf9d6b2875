import random

import pytest

import oracles

from diskplex.cubes import (
    cone_base_complex,
    cube_from_cone,
    dual_cells,
    grid_coordinates,
    subdivide_cube,
    validate_ball,
)
from diskplex.simplicial import cone, from_facets, simplex_complex


def test_unit_cube_counts_match_formula():
    for n in range(1, 5):
        cube = subdivide_cube(n, [0] * n)
        got = list(cube.counts_by_dim())
        expected = [oracles.cube_face_count(n, d) for d in range(n + 1)]
        assert got == expected
        assert cube.euler_characteristic() == 1


def test_grid_counts_match_formula():
    rng = random.Random(6)
    for _ in range(25):
        n = rng.randint(1, 3)
        counts = [rng.randint(0, 3) for _ in range(n)]
        grid = subdivide_cube(n, counts)
        for d in range(n + 1):
            assert len(grid.cells_of_dim(d)) == oracles.grid_cell_count(counts, d)
        assert grid.euler_characteristic() == 1
        # top cells tile the cube
        assert len(grid.top_cells()) == len(grid.cells_of_dim(n))


def test_grid_rejects_bad_input():
    with pytest.raises(ValueError):
        subdivide_cube(2, [1])
    with pytest.raises(ValueError):
        subdivide_cube(1, [-1])


def test_grid_coordinates_lie_in_unit_interval():
    grid = subdivide_cube(2, [2, 1])
    for v in grid.cells_of_dim(0):
        coords = grid_coordinates(v, [2, 1])
        assert all(0 <= c <= 1 for c in coords)
    with pytest.raises(ValueError):
        grid_coordinates(((0, 1), (0, 0)), [2, 1])


def test_cone_cube_labels_bijective_with_cone_faces():
    for n in range(1, 5):
        cube = cube_from_cone(n)
        base = cone_base_complex(n)
        apexed = cone(base, apex="z")
        labels = set(cube.labels.values())
        # corners are the apex plus every face of the base simplex
        expected = {"z"} | {f for f in base.all_faces()}
        assert labels == expected
        assert len(cube.labels) == 2 ** n
        # each labeled face, joined with the apex, is a face of the cone
        for label in labels:
            if label == "z":
                continue
            assert apexed.has_face(tuple(label) + ("z",))


def test_cone_cube_range():
    with pytest.raises(ValueError):
        cube_from_cone(0)
    with pytest.raises(ValueError):
        cube_from_cone(7)


def test_boundary_cells_of_square():
    cube = subdivide_cube(2, [0, 0])
    boundary = cube.boundary_cells()
    dims = sorted(cube.cell_dim[c] for c in boundary)
    assert dims == [0, 0, 0, 0, 1, 1, 1, 1]


def test_validate_ball_accepts_and_rejects():
    validate_ball(simplex_complex([1, 2, 3, 4]))
    validate_ball(subdivide_cube(3, [1, 0, 2]))
    circle = from_facets([[1, 2], [2, 3], [3, 1]])
    with pytest.raises(ValueError):
        validate_ball(circle)
    # pure but not a ball: sphere has euler 2
    from diskplex.simplicial import boundary_of_simplex

    with pytest.raises(ValueError):
        validate_ball(boundary_of_simplex(4))
    # impure complex
    with pytest.raises(ValueError):
        validate_ball(from_facets([[1, 2, 3], [3, 4]]))


def test_dual_cells_of_interval_path():
    # a path of 3 edges: interior = 2 inner vertices + 3 edges
    path = from_facets([[1, 2], [2, 3], [3, 4]])
    dual = dual_cells(path)
    assert list(dual.counts_by_dim()) == [3, 2]
    assert dual.euler_characteristic() == 1


def test_dual_cells_dimension_correspondence_on_grids():
    rng = random.Random(8)
    for _ in range(15):
        n = rng.randint(1, 3)
        counts = [rng.randint(0, 2) for _ in range(n)]
        grid = subdivide_cube(n, counts)
        dual = dual_cells(grid)
        primal_interior = {}
        boundary = set(grid.boundary_cells())
        for c in grid.cells:
            if c not in boundary:
                d = grid.cell_dim[c]
                primal_interior[d] = primal_interior.get(d, 0) + 1
        for d, count in primal_interior.items():
            assert len(dual.cells_of_dim(n - d)) == count
        # dual vertices match top cells one to one
        assert len(dual.cells_of_dim(0)) == len(grid.top_cells())


def test_dual_vertices_are_incident_top_cells():
    two = from_facets([[1, 2, 3], [2, 3, 4]])
    dual = dual_cells(two)
    edge = next(c for c in dual.cells if dual.cell_dim[c] == 1)
    assert dual.cell_vertices[edge] == frozenset(
        {("dual", (1, 2, 3)), ("dual", (2, 3, 4))}
    )


def test_dual_requires_ball():
    with pytest.raises(ValueError):
        dual_cells(from_facets([[1, 2], [2, 3], [3, 1]]))
