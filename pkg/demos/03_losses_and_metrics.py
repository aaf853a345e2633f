"""Walkthrough: the training losses and the evaluation metrics.

First the batch-adaptive category weights (rare categories weigh more), then
ranked-retrieval average precision and the VAD regression errors on a small
hand-built evaluation set.
"""

import math
from pathlib import Path

import numpy as np
import torch

from peri.losses import batch_weights, loss_cat, loss_cont, loss_total
from peri.metrics import (EvalRecord, average_precision, mean_ap, vad_errors,
                          write_results_csv)

OUT = Path(__file__).parent / "out" / "metrics"
OUT.mkdir(parents=True, exist_ok=True)

# --- 1. dynamic category weights ---------------------------------------------
# An imbalanced batch: category 0 in every sample, category 2 in none.
labels = torch.tensor([
    [1, 1, 0],
    [1, 0, 0],
    [1, 0, 0],
    [1, 1, 0],
], dtype=torch.float32)
weights = batch_weights(labels, c=1.2)
print("p (batch frequency):", weights.p.tolist())
print("w = 1/ln(p + c):    ", [round(v, 3) for v in weights.w.tolist()])
print(f"absent category weight = 1/ln(c) = {1 / math.log(1.2):.3f}")

pred = torch.tensor([[0.9, 0.8, 0.1],
                     [0.8, 0.2, 0.0],
                     [1.1, 0.1, 0.2],
                     [0.7, 0.6, 0.0]])
cat = loss_cat(pred, labels, weights)
cont = loss_cont(torch.tensor([[5.0, 5.0, 5.0]]), torch.tensor([[6.0, 4.0, 5.0]]))
print(f"loss_cat={cat:.4f}  loss_cont={cont:.4f}  "
      f"total={loss_total(cat, cont):.4f}\n")

# --- 2. average precision on a ranked list ------------------------------------
scores = np.array([0.9, 0.8, 0.7, 0.1])
truth = np.array([0, 1, 0, 1])
# ranks: miss, hit@2 (prec 1/2), miss, hit@4 (prec 2/4) -> AP 0.5
print(f"AP of a half-right ranking: {average_precision(scores, truth)}")

# --- 3. a toy evaluation set --------------------------------------------------
rng = np.random.default_rng(0)
names = ["Joy", "Fear", "Surprise"]
records = []
for i in range(12):
    truth_vec = (rng.random(3) < [0.5, 0.25, 0.1]).astype(float)
    noisy = truth_vec + rng.normal(0, 0.3, size=3)      # informative scores
    vad_true = rng.uniform(1, 10, size=3)
    vad_pred = vad_true + rng.normal(0, 0.8, size=3)    # +- ~0.8 regression
    records.append(EvalRecord(sample_id=f"s{i:02d}", cat_scores=noisy,
                              cat_truth=truth_vec, vad_pred=vad_pred,
                              vad_truth=vad_true))

map_value, per_cat = mean_ap(records)
vad = vad_errors(records)
for name, ap in zip(names, per_cat):
    print(f"AP[{name}] = {'n/a (no positives)' if np.isnan(ap) else round(ap, 3)}")
print(f"mAP = {map_value:.3f}; VAD errors V={vad.err_v:.2f} A={vad.err_a:.2f} "
      f"D={vad.err_d:.2f} mean={vad.mean_err:.2f}")

path = write_results_csv(OUT / "results.csv", names, per_cat, map_value, vad)
print(f"results table written to {path}")
