"""
Reading the MNIST ablation
==========================

``mirattack ablate --out runs/mnist --seeds 0 1 2 --deterministic`` runs the
five variants for three attack seeds:

* GMI: WGAN prior plus per-point search
* SD: inversion GAN with target soft labels, no entropy term, per-point search
* SD+EM: adds the entropy term
* SD+DR / SD+EM+DR: replaces per-point search with distributional recovery

This script loads the table, prints it, and shows the per-seed numbers behind
each mean and the reconstructions of the full attack.
"""

import json
import sys
from pathlib import Path

import numpy as np

runs = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/mnist")
path = runs / "ablation.json"
if not path.exists():
    sys.exit(f"{path} not found; run `mirattack ablate --out {runs} --seeds 0 1 2 --deterministic` first")

doc = json.loads(path.read_text())
print((runs / "ablation.txt").read_text())

# per-seed top-1, KNN and recognized counts
for v in doc["variants"]:
    rows = [doc["runs"][f"{v}/seed{s}"] for s in doc["seeds"]]
    top1 = [r["top1"]["mean"] for r in rows]
    knn = [r["knn_distance"] for r in rows]
    rec = [r["recognized"] for r in rows]
    print(f"{v:9s} top-1 {np.round(top1, 2)}  KNN {np.round(knn, 2)}  recognized {rec}")

# per-class accuracy of the full attack, averaged over seeds
full = [doc["runs"][f"SD+EM+DR/seed{s}"]["per_class"] for s in doc["seeds"]]
for k in sorted(full[0], key=int):
    print(f"class {k}: top-1 {np.mean([pc[k]['top1'] for pc in full]):.2f}")

# reconstructions: rows are classes, columns are samples
for s in doc["seeds"]:
    print("grid:", runs / "variants" / f"SD+EM+DR_seed{s}" / "reconstructions.png")
