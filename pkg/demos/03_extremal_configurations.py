"""The extremal configurations: shallowest and deepest core points.

For d+1 colours of d+1 points with the origin strictly inside every colour
hull, the known extremes of the origin's colourful depth are:

  minimum  d^2 + 1        (proven minimal for d = 1, 2, 3)
  maximum  d^(d+1) + 1    (proven maximal for d = 1, 2)

Each generator re-derives its claimed count exactly before returning, so
what is printed below has been verified, not assumed.
"""

from colourdepth import gen_identical, gen_sminus, gen_splus, gen_sprime

print("identical classes: depth (d+1)! at the shared centre")
for d in (1, 2, 3):
    vc = gen_identical(d)
    print(f"  d={d}: depth {vc.claimed_depth_at_origin}")

print()
print("minimum-depth family: one deep point plus d singly-covered points")
for d in (2, 3):
    vc = gen_sminus(d)
    print(f"  d={d}: depth {vc.claimed_depth_at_origin} = d^2+1,"
          f" per-point counts {list(vc.last_colour_counts)}")

print()
print("alternative minimum: d points of d simplices each, plus a polar point")
for d in (2, 3):
    vc = gen_sprime(d)
    print(f"  d={d}: depth {vc.claimed_depth_at_origin},"
          f" per-point counts {list(vc.last_colour_counts)}")

print()
print("maximum-depth family: d antipodes in a cell covered by d^d cones")
for d in (1, 2, 3):
    vc = gen_splus(d)
    print(f"  d={d}: depth {vc.claimed_depth_at_origin} = d^(d+1)+1,"
          f" per-point counts {list(vc.last_colour_counts)}")

print()
print("at d=3 the deep configuration holds the origin in 82 of 256 colourful")
print("simplices, a fraction above 32% that is the family's minimum over d.")
