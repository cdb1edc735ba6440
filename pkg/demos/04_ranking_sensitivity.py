# coding: utf-8

# # Rankings depend on the target set
#
# Ten synthetic algorithms trade speed against final quality, so their
# convergence curves cross. Ranking them by target-based AUC with few
# targets reorders some of them compared to the attainment-based AUC.

# %%

from attainkit import TargetSet, anytime_scores, auc_targets, rank_by_auc, rank_difference
from attainkit.synthetic import algorithm_family

family = algorithm_family(seed=0, n_algorithms=10, r=15, t_max=2000)
reference = rank_by_auc([(d.algorithm, anytime_scores(d).auc_normalized) for d in family])
print("attainment-based order:", reference.names)

# %%
# The rank difference is half the summed absolute rank changes, so one swap
# of neighbours counts as 1.

for n in (5, 10, 25, 51):
    ts = TargetSet.for_scale(family[0].scale, n)
    ranking = rank_by_auc([(d.algorithm, auc_targets(d, ts)) for d in family])
    print(f"{n:3d} targets: difference {rank_difference(reference, ranking):g}  {ranking.names}")
