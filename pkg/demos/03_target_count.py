# coding: utf-8

# # How many targets are enough?
#
# A target-based ECDF discretizes the quality axis. With equally spaced
# targets it approaches the attainment-based ECDF as the spacing shrinks.
# With the easiest target sitting exactly at the top of the range, runs
# that have not yet entered the range still score one target, so the
# target-based curve tends to sit above the other.

# %%

import numpy as np

from attainkit import TargetSet, ecdf_eaf, ecdf_targets, log_spaced_grid
from attainkit.metrics import aggregate_curves
from attainkit.synthetic import function_suite

suite = function_suite(seed=0, n_functions=24, r=15, dimension=2)
budgets = log_spaced_grid(suite[0].t_max, 50)
eaf = aggregate_curves([ecdf_eaf(d, budgets) for d in suite]).values

# %%

for n in (5, 10, 25, 51, 101):
    targets = TargetSet.for_scale(suite[0].scale, n)
    tc = aggregate_curves([ecdf_targets(d, targets, budgets) for d in suite]).values
    gap = tc - eaf
    print(f"|Z|={n:4d}  max gap {np.abs(gap).max():.4f}  bound {2 / (n - 1):.4f}  "
          f"always above: {bool(np.all(gap >= -1e-12))}")
