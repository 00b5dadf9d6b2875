"""
Exact homology and the three-way index
======================================

A complex is stored by its maximal faces; homology is computed over the
integers, so torsion is exact, never a floating point artifact.
"""

from diskplex import (
    boundary_of_simplex,
    empty_complex,
    from_facets,
    homology_index,
    point,
    reduced_homology,
)

# The boundary of a (k+1)-simplex is a k-sphere.  Its only reduced
# homology sits in degree k.
for k in range(1, 5):
    sphere = boundary_of_simplex(k + 2)
    profile = reduced_homology(sphere)
    print(f"sphere of dimension {k}:")
    for line in profile.render_lines():
        print("   ", line)

# The index reads off the lowest nontrivial degree, shifted by one:
# ZERO for the empty complex, INDEX(n) when degree n-1 is the first
# nonzero group, ACYCLIC when everything vanishes.
print()
print("empty      ->", homology_index(empty_complex()))
print("point      ->", homology_index(point()))
print("two points ->", homology_index(from_facets([["p"], ["q"]])))
print("4-cycle    ->", homology_index(from_facets([[1, 2], [2, 3], [3, 4], [4, 1]])))

# A 6-vertex projective plane: no rational homology at all, but exact
# arithmetic picks up the 2-torsion in degree 1.
rp2 = from_facets(
    [[1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
     [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]],
    name="projective plane",
)
print()
print("projective plane:")
for line in reduced_homology(rp2).render_lines():
    print("   ", line)
print("index:", homology_index(rp2))

# A cone over anything is acyclic, and ACYCLIC never satisfies an index
# bound: it is the absorbing failure state, not index infinity.
from diskplex import cone

acyclic = cone(rp2, apex="tip")
idx = homology_index(acyclic)
print()
print("cone over it  ->", idx)
print("within bound 99?", idx.at_most(99))
