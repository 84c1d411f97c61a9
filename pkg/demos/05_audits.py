"""Seeded randomized audits: parity laws, depth bounds, mean depth.

Reports are deterministic given (kind, dim, trials, seed); per-trial state
derives from seed + trial index, so results are independent of scheduling.
The runs below are small; the acceptance suite runs the full-size versions.
"""

from colourdepth import depth_stats, mu_audit, nu_audit, parity_audit

# Parity laws.  These are theorems: violations would mean a bug.
rep = parity_audit("monochrome", 2, trials=200, seed=1, n=6)
print("monochrome parity (d=2, n=6):", rep.violations, "violations in", rep.trials)

rep = parity_audit("colourful_even_sizes", 2, trials=150, seed=2)
print("even class sizes (d=2):      ", rep.violations, "violations in", rep.trials)

rep = parity_audit("colourful_odd_d", 3, trials=60, seed=3)
print("odd dimension (d=3):         ", rep.violations, "violations in", rep.trials)

# Minimum core depth: random configurations never dip below the proven
# minimum, and the planted extremal configuration attains it exactly.
for d in (1, 2):
    rep = mu_audit(d, trials=15, core_samples=6, seed=4)
    print(f"min core depth d={d}: observed {rep.min_observed},"
          f" proven optimum {rep.reference_bounds[0]}")

# Maximum interior core depth, same idea from above.
for d in (1, 2):
    rep = nu_audit(d, trials=10, seed=5)
    print(f"max core depth d={d}: observed {rep.max_observed},"
          f" target {rep.reference_bounds[1]}")

# Mean origin depth of sign-symmetric random configurations: each simplex
# contains the origin with probability 1/2^d, so the mean approaches
# (d+1)^(d+1) / 2^d.
rep = depth_stats(2, trials=500, seed=6)
print(f"mean origin depth d=2: {rep.extra['mean']:.3f}"
      f" (heuristic {rep.extra['heuristic_mean']:.3f})")
