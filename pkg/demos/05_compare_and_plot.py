# coding: utf-8

# # Comparing algorithms and exporting results
#
# Difference grids show where one algorithm attains more often than
# another. The envelope of a portfolio takes the best member at every
# point, so an algorithm can only tie or lose against a portfolio that
# contains it.

# %%

from pathlib import Path

import numpy as np

from attainkit import (
    SyntheticSpec, compute_eaf, diff_vs_portfolio, ecdf_eaf, eaf_diff, export_curve,
    export_grid, generate_synthetic, log_spaced_grid,
)
from attainkit.svg import render_curves

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

fast = generate_synthetic(SyntheticSpec("geometric-decay", seed=1, r=10, t_max=5000,
                                        algorithm="fast", params={"mean_drop": 0.12,
                                                                  "floor": -3}))
slow = generate_synthetic(SyntheticSpec("geometric-decay", seed=2, r=10, t_max=5000,
                                        algorithm="slow", params={"mean_drop": 0.06}))
rand = generate_synthetic(SyntheticSpec("random-search", seed=3, r=10, t_max=5000,
                                        algorithm="random"))
a, b, c = (compute_eaf(d) for d in (fast, slow, rand))

# %%

d = eaf_diff(a, b)
print("grid", d.values.shape, "fast ahead on", int((d.values > 0).sum()), "cells,",
      "slow ahead on", int((d.values < 0).sum()))
print("fast vs portfolio {fast, slow, random}: max",
      diff_vs_portfolio(a, [a, b, c]).values.max())

# %%
# Grids go out as long-form CSV for heatmap tools; curves can be drawn
# directly as a small SVG.

(out / "fast_vs_slow.csv").write_bytes(export_grid(d))
budgets = log_spaced_grid(5000, 50)
curves = [ecdf_eaf(ds, budgets) for ds in (fast, slow, rand)]
(out / "fast_ecdf.csv").write_bytes(export_curve(curves[0]))
(out / "ecdf.svg").write_text(render_curves(curves, ["fast", "slow", "random"],
                                            title="EAF-based ECDF"))
print("wrote", sorted(p.name for p in out.iterdir()))
print("final ECDF values:", np.round([cv.values[-1] for cv in curves], 3))
