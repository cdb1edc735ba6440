# coding: utf-8

# # Attainment basics
#
# Three short runs on a linear quality scale from 0 to 10, with a budget of
# 8 evaluations. Each run is a list of (evaluations, best value) pairs that
# only records improvements.

# %%

from attainkit import (
    AlgorithmDataset, QualityScale, Run, TargetSet, TimeGrid, compute_eaf, ecdf_eaf,
    ecdf_targets, eaf_on_grid, level_set, query_eaf,
)

runs = [
    [(1, 8), (3, 4), (6, 2)],
    [(1, 9), (2, 5), (7, 1)],
    [(1, 7), (4, 6), (5, 3)],
]
scale = QualityScale("linear", 0, 10)
ds = AlgorithmDataset("demo", "1", 2,
                      tuple(Run.from_points(p, 8, run_id=f"1:{i}") for i, p in enumerate(runs)),
                      scale)

# %%
# The attainment surface counts how many runs reached quality z within t
# evaluations. Two of the three runs are at 5 or better after 4 evaluations.

surface = compute_eaf(ds)
print("alpha(4, 5) =", query_eaf(surface, 4, 5))
print("alpha(5, 3) =", query_eaf(surface, 5, 3))

# %%
# On a grid the values only grow to the right (more budget) and upwards
# (looser quality).

grid = eaf_on_grid(surface, [1, 2, 4, 6, 8], [2, 4, 6, 8, 10])
print(grid.values)

# %%
# Level sets are percentile convergence curves. Level 1 follows the worst
# run at each budget, level 1/3 the best.

for p in (1 / 3, 2 / 3, 1.0):
    curve = level_set(surface, p)
    print(f"p={p:.2f}", list(zip(curve.t.tolist(), curve.values.tolist())))

# %%
# Two ECDF flavours over the same budgets: the usual one counts hit
# targets, the attainment-based one integrates over the whole quality range.

budgets = TimeGrid.full(8)
targets = TargetSet([2, 4, 6, 8, 10])
print("target ECDF:", ecdf_targets(ds, targets, budgets).values.round(3))
print("EAF ECDF:   ", ecdf_eaf(ds, budgets).values.round(3))
