"""Seeded random sweeps over glued-quadratic instances.

Each instance draws random diagonal quadratic components with types
split by a chosen subspace of the parameter block, glues them, and runs
the full pipeline.  Every instance that passes the hypothesis checks
must match its closed-form weight distribution exactly; the sweep is
deterministic in the seed.
"""

from tribent import BentType, run_search

# Plus-side instances on n = 6 (four inner variables, one parameter trit).
summary = run_search(m=4, s=1, count=12, seed=2024)
print("n=6 plus side:", summary.matched, "matched /", summary.eligible,
      "eligible of", len(summary.outcomes))
for o in summary.outcomes[:4]:
    c = o.report.code
    print(f"  seed instance {o.index}: j0={o.j0} case={o.report.case} "
          f"[{c.length},{c.dimension},{c.min_distance}]_3")

# Minus side with odd ambient dimension.
summary = run_search(m=3, s=1, count=12, seed=7, side=BentType.MINUS)
print("n=5 minus side:", summary.matched, "of", len(summary.outcomes))

# Two parameter trits with a one-dimensional type subspace: r grows by
# the subspace dimension.
summary = run_search(m=3, s=2, count=6, seed=99, u_dim=1)
print("n=7, line-shaped plus set:", summary.matched, "of",
      len(summary.outcomes), " r values:",
      sorted({o.report.r for o in summary.outcomes}))

# Degenerate configuration: a full parameter space means a single type,
# so every instance is weakly regular and skipped.
summary = run_search(m=3, s=1, count=4, seed=1, u_dim=1)
print("single-type instances skipped:", summary.skipped, "of",
      len(summary.outcomes))
