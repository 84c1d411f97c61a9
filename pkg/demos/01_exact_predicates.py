"""A tour of the exact predicates everything else is built on.

Every coordinate is an exact rational; every answer below is bit-exact, not
a floating-point approximation.
"""

from fractions import Fraction

from colourdepth import (
    barycentric_coordinates,
    cone_contains,
    in_convex_hull,
    in_general_position,
    orientation,
    point_in_simplex,
    pt,
)

# Orientation is the sign of the determinant of the difference vectors.
print("orientation of ((0,0),(1,0),(0,1)):", orientation([pt(0, 0), pt(1, 0), pt(0, 1)]))
print("orientation of collinear points:  ", orientation([pt(0, 0), pt(1, 1), pt(2, 2)]))

# Barycentric coordinates certify containment.  The centre of the triangle
# ((1,0),(-1,1),(-1,-1)) is the origin with weights (1/2, 1/4, 1/4):
tri = [pt(1, 0), pt(-1, 1), pt(-1, -1)]
print("barycentric of 0:", barycentric_coordinates(pt(0, 0), tri))
print("0 in open triangle:", point_in_simplex(pt(0, 0), tri, "open"))

# A vertex is in the closed simplex but not the open one.
unit = [pt(0, 0), pt(1, 0), pt(0, 1)]
print("vertex, open:", point_in_simplex(pt(0, 0), unit, "open"),
      "closed:", point_in_simplex(pt(0, 0), unit, "closed"))

# Convex cones: v must be a non-negative combination of the generators.
print("(1,1) in cone((1,0),(0,1)):", cone_contains([pt(1, 0), pt(0, 1)], pt(1, 1)))
print("(-1,0) in cone((1,0),(0,1)):", cone_contains([pt(1, 0), pt(0, 1)], pt(-1, 0)))

# Strict hull membership distinguishes the interior from the boundary.
S = [pt(0, 0), pt(2, 0), pt(0, 2)]
mid = pt(1, 0)
print("edge midpoint, non-strict:", in_convex_hull(mid, S),
      "strict:", in_convex_hull(mid, S, strict=True))

# General position: no k-flat holds k+2 points.
good = [pt(0, 0), pt(1, 0), pt(0, 1), pt(Fraction(1, 3), Fraction(1, 3))]
bad = [pt(0, 0), pt(1, 1), pt(2, 2), pt(5, 0)]
print("triangle + centroid in general position:", in_general_position(good))
print("with three collinear points:            ", in_general_position(bad))
