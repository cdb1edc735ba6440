# coding: utf-8

# # Reading IOHprofiler-style folders
#
# A small tree is written first, with one algorithm folder holding files for
# two dimensions. Function and dimension come from the file names when the
# header lines leave them out.

# %%

import tempfile
from pathlib import Path

from attainkit import SyntheticSpec, anytime_scores, generate_synthetic, parse_ioh
from attainkit.ingest import datasets_to_csv, datasets_to_ioh

root = Path(tempfile.mkdtemp())
for dim in (2, 5):
    ds = generate_synthetic(SyntheticSpec("random-search", seed=dim, r=4, t_max=300 * dim,
                                          dimension=dim, algorithm="RS", function_id="1"))
    folder = root / "RS" / "data_f1"
    folder.mkdir(parents=True, exist_ok=True)
    (folder / f"IOHprofiler_f1_DIM{dim}.dat").write_bytes(datasets_to_ioh(ds))

# %%

result = parse_ioh(root)
for ds in result.datasets:
    print(ds.algorithm, "f" + ds.function_id, f"D={ds.dimension}", f"r={ds.r}",
          f"t_max={ds.t_max}", "AUC", round(anytime_scores(ds).auc_normalized, 4))

# %%
# The same data in the flat CSV layout, first lines only.

print(datasets_to_csv(result.datasets).decode().splitlines()[:4])
