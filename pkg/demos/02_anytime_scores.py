# coding: utf-8

# # One number per run, one per dataset
#
# The area over a run's convergence curve (AOCC) rewards reaching good
# values early. Averaged over runs it equals the area under the
# attainment-based ECDF, and also the volume under the attainment surface.
# Here the three routes are computed side by side on synthetic data.

# %%

from attainkit import (
    SyntheticSpec, anytime_scores, auc_via_hypervolume, generate_synthetic,
)
from attainkit.metrics import auc_by_time_sum

ds = generate_synthetic(SyntheticSpec("geometric-decay", seed=4, r=15, t_max=20_000))
scores = anytime_scores(ds)
print("per-run AOCC (first five):", [round(a, 1) for a in scores.per_run_aocc[:5]])
print("mean AOCC:                ", scores.mean_aocc)

# %%
# The quality axis here is log10 between 1e-8 and 1e2, so it is 10 units wide.

print("volume under the surface: ", auc_via_hypervolume(ds))
print("ECDF area times 10:       ", scores.auc_eaf * ds.scale.axis_width)
print("summing the ECDF per step:", auc_by_time_sum(ds) * ds.scale.axis_width)

# %%
# Dividing by the budget span gives a score in [0, 1] that can be compared
# across budgets.

print("normalized:", round(scores.auc_normalized, 4))
