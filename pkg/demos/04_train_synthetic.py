"""Walkthrough: the full pipeline on a generated dataset.

Generates a small planted-rule dataset (blob shape decides the category, blob
color decides VAD), trains the PAS-modulated model for a few epochs on one CPU
core, evaluates the best checkpoint, and renders per-sample report figures.

Takes roughly half a minute. Everything lands in demos/out/e2e/.
"""

import json
import warnings
from pathlib import Path

from peri.config import RunConfig
from peri.data import load_dataset, load_vocab, make_synthetic
from peri.harness import evaluate, train
from peri.report import render_report

# a dataset this small covers only a handful of the 26 categories; the
# "no positives" exclusion is expected here, so keep the output readable
warnings.filterwarnings("ignore", message="category .* has no positives")

OUT = Path(__file__).parent / "out" / "e2e"

# --- 1. data -------------------------------------------------------------------
root = make_synthetic(OUT / "data", n=64, seed=11)
print(f"dataset at {root}: "
      + ", ".join(f"{s}={len(load_dataset(root, s).samples)}" for s in ("train", "val", "test")))

# --- 2. train ------------------------------------------------------------------
cfg = RunConfig()
cfg.variant = "cont_in_body"
cfg.seed = 3
cfg.deterministic = True
cfg.model.backbone = "tiny"          # 4-stage residual net sized for CPU demos
cfg.model.image_size = 96
cfg.model.crop_size = 64
cfg.pas.out_size = 64
cfg.optimizer.kind = "adam"
cfg.optimizer.lr = 3e-3
cfg.optimizer.batch_size = 8
cfg.optimizer.epochs = 40
cfg.train.early_stop_map = 0.9       # stop as soon as the rule is learned
cfg.train.early_stop_vad = 1.0
cfg.paths.data_dir = str(root)
cfg.paths.output_dir = str(OUT / "run")
cfg.paths.cache_dir = str(OUT / "pas_cache")

result = train(cfg)
last = json.loads(result.history_path.read_text().splitlines()[-1])
print(f"stopped after epoch {last['epoch']}: val mAP={last['val_map']:.3f}, "
      f"mean VAD err={last['val_err_mean']:.2f}")

# --- 3. evaluate the best checkpoint --------------------------------------------
ev = evaluate(result.best_path, "test", cache_dir=cfg.paths.cache_dir)
print(f"test mAP={ev.map_value:.3f}  "
      f"VAD err V={ev.vad.err_v:.2f} A={ev.vad.err_a:.2f} D={ev.vad.err_d:.2f}")
print(f"metrics: {ev.results_path}")

# --- 4. render the report figures ------------------------------------------------
ds = load_dataset(root, "test")
csv_path = render_report(ev.predictions_path, ds.samples, load_vocab(root),
                         OUT / "report", k=3)
print(f"per-sample figures + {csv_path}")
