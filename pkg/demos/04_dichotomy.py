"""
The subcomplex dichotomy
========================

For a full subcomplex X of Y with index n, either Y itself has index at
most n, or some simplex tau outside X has an adjacency complex V_tau
with ind(V_tau) + dim(tau) <= n.  The verifier searches exhaustively and
reports which branch holds.
"""

from diskplex import check_dichotomy, from_facets, full_subcomplex

# Y is a pentagon circle; X the two poles {1, 3}.
y = from_facets([[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]], name="pentagon")
x = full_subcomplex(y, [1, 3])

witness = check_dichotomy(x, y)
for line in witness.render_lines():
    print(line)

# Taking X = Y flips the verdict: Y is small against its own bound.
print()
witness = check_dichotomy(y, y)
for line in witness.render_lines():
    print(line)

# An acyclic X has no index, so the question is rejected outright.
print()
path = full_subcomplex(y, [1, 2])
try:
    check_dichotomy(path, y)
except ValueError as err:
    print("acyclic X:", err)

# A bigger run: a two-sphere and a hexagon equator.
sphere = from_facets(
    [[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5],
     [1, 2, 6], [2, 3, 6], [3, 4, 6], [1, 4, 6]],
    name="octahedron-like sphere",
)
equator = full_subcomplex(sphere, [1, 2, 3, 4])
print()
witness = check_dichotomy(equator, sphere)
for line in witness.render_lines():
    print(line)
