"""Monochrome and colourful simplicial depth, counted exactly.

The depth of a query point is the number of simplices spanned by the sample
that contain it: all (d+1)-subsets in the monochrome case, one vertex from
each of d+1 distinct colours in the colourful case.
"""

from colourdepth import (
    ColourfulConfiguration,
    antipodal_cone_count,
    colourful_depth,
    core_membership,
    gen_regular_ngon,
    min_core_depth_estimate,
    monochrome_depth,
    origin,
    pt,
    zero_containing_count,
)

# On the line, depth just counts covering segments.
S = [pt(-1), pt(2), pt(5)]
print("depth of 0 in {-1, 2, 5}:", monochrome_depth(S, pt(0)).count, "(segments (-1,2), (-1,5))")

# A regular 7-gon realises the planar maximum (n^3 - n)/24 = 14 at its centre.
heptagon = gen_regular_ngon(7)
print("7-gon centre depth:", monochrome_depth(heptagon, origin(2)).count)

# Three identical triangles: a colourful simplex contains the centre exactly
# when it picks all three distinct vertices, so the depth is 3! = 6.
tri = [pt(1, 0), pt(-1, 1), pt(-1, -1)]
cfg = ColourfulConfiguration(2, (tuple(tri), tuple(tri), tuple(tri)))
rep = colourful_depth(cfg, origin(2), "open", want_witnesses=True)
print("identical triangles, depth at 0:", rep.count)
print("first witness (colour, point index pairs):", rep.witnesses[0])
print("0 strictly in the core:", core_membership(cfg, origin(2), strict=True))

# Per-point decomposition: summing the counts through one colour's points
# recovers the total, and each count equals the number of colourful cones of
# the other colours containing the point's antipode.
for k in range(3):
    z = zero_containing_count(cfg, 0, k)
    cones = antipodal_cone_count(cfg, 0, tri[k])
    print(f"point {k} of colour 0: {z} simplices through it, {cones.count} cones at its antipode")

# Sampling the core gives an upper bound on the minimum depth over it.
est, witness = min_core_depth_estimate(cfg, samples=10, seed=1)
print("sampled minimum core depth:", est, "at", witness)
