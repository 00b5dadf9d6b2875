"""Exact combinatorics of disk complexes.

Simplicial complexes with integer homology, a homology-based index, the
join-homology formula, a catalog of local surface pieces in a tetrahedron
with an additivity engine, width orderings with surgery descent, cube and
dual-cell constructions, a dichotomy verifier, and a randomized
verification suite tying everything together.
"""

from .simplicial import (
    Simplex,
    SimplicialComplex,
    adjacency_subcomplex,
    barycentric_subdivision,
    boundary_of_simplex,
    cone,
    empty_complex,
    from_facets,
    full_subcomplex,
    join,
    join_all,
    link,
    point,
    relabel,
    simplex_complex,
    star,
)
from .homology import (
    ACYCLIC_INDEX,
    AbelianGroup,
    HomologyIndex,
    HomologyProfile,
    ZERO_INDEX,
    finite_index,
    homology_index,
    reduced_homology,
    smith_normal_form,
)
from .join_formula import index_sum_law, join_homology_via_formula, verify_milnor
from .pieces import LocalPiece, catalog, check_normal_arcs, local_index, piece
from .additivity import (
    Gluing,
    Placement,
    SurfaceConfiguration,
    TetGluing,
    check_matching,
    euler_characteristic,
    global_complex,
    load_config,
    verify_index_sum,
)
from .width import (
    MoveKind,
    SurfaceComponentModel,
    SurgeryMove,
    Width,
    apply_surgery,
    available_moves,
    compare_width,
    verify_width_decrease,
    width,
)
from .cubes import CubicalComplex, cube_from_cone, dual_cells, subdivide_cube, validate_ball
from .dichotomy import DichotomyWitness, check_dichotomy
from .io import canonical_json, parse_complex, write_complex
from .suite import RunConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "adjacency_subcomplex",
    "barycentric_subdivision",
    "boundary_of_simplex",
    "cone",
    "empty_complex",
    "from_facets",
    "full_subcomplex",
    "join",
    "join_all",
    "link",
    "point",
    "relabel",
    "simplex_complex",
    "star",
    "ACYCLIC_INDEX",
    "AbelianGroup",
    "HomologyIndex",
    "HomologyProfile",
    "ZERO_INDEX",
    "finite_index",
    "homology_index",
    "reduced_homology",
    "smith_normal_form",
    "index_sum_law",
    "join_homology_via_formula",
    "verify_milnor",
    "LocalPiece",
    "catalog",
    "check_normal_arcs",
    "local_index",
    "piece",
    "Gluing",
    "Placement",
    "SurfaceConfiguration",
    "TetGluing",
    "check_matching",
    "euler_characteristic",
    "global_complex",
    "load_config",
    "verify_index_sum",
    "MoveKind",
    "SurfaceComponentModel",
    "SurgeryMove",
    "Width",
    "apply_surgery",
    "available_moves",
    "compare_width",
    "verify_width_decrease",
    "width",
    "CubicalComplex",
    "cube_from_cone",
    "dual_cells",
    "subdivide_cube",
    "validate_ball",
    "DichotomyWitness",
    "check_dichotomy",
    "canonical_json",
    "parse_complex",
    "write_complex",
    "RunConfig",
    "run_suite",
    "__version__",
]
