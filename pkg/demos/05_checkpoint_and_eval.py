"""
Checkpoints, resuming and evaluation
====================================

A run directory holds everything needed to evaluate or continue it: the
vocabulary, counts, split, mask table, config, metrics and routing logs,
and binary checkpoints. Resuming from a checkpoint replays the remaining
steps bit for bit.
"""

import json
import tempfile
from pathlib import Path

from maskmoe.cli import evaluate_checkpoint
from maskmoe.config import RunConfig
from maskmoe.experiment import prepare_dataset, train_run
from maskmoe.synth import write_corpora

work = Path(tempfile.mkdtemp())
train, ev = write_corpora(work / "train.txt", work / "eval.txt", 50_000, 4_000, seed=2, n_types=2000)
ds = prepare_dataset(train, ev, 1500, 0.4)
cfg = RunConfig(architecture="maskmoe", n_layers=2, d_model=32, n_heads=2, d_ff=64, n_experts=4, v_a=2,
                total_steps=40, checkpoint_every=20, lr_peak=2e-3)

run_a = work / "a"
train_run(cfg, ds, run_a)
print(sorted(p.name for p in run_a.iterdir()))

# %%
# Continue from the halfway checkpoint into a second directory.
run_b = work / "b"
train_run(cfg, ds, run_b, resume=run_a / "ckpt_20.bin")
same = (run_a / "final.bin").read_bytes() == (run_b / "final.bin").read_bytes()
print("resumed final checkpoint is byte-identical:", same)

# %%
# Evaluation reads the vocabulary and masks next to the checkpoint.
summary = evaluate_checkpoint(run_a / "final.bin", ev)
print(json.dumps({k: summary[k] for k in ("ppl", "fluct_frequent", "fluct_infrequent", "cv_per_layer")}, indent=1))
print((run_a / "eval" / "expert_counts.csv").read_text())
