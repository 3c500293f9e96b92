"""
Training small models and comparing routers
===========================================

Four MoE variants and a dense baseline are trained for a few hundred
steps on a small synthetic corpus. Then we look at eval perplexity, how
often a token's top expert changes during training (fluctuation) and how
evenly the experts are loaded.

This is a toy: the models are tiny and the numbers move with the seed.
The full-size comparison lives in ``desk_sweep.py``.
"""

import tempfile
from pathlib import Path

from maskmoe.cli import format_table
from maskmoe.config import RunConfig
from maskmoe.experiment import prepare_dataset, run
from maskmoe.synth import write_corpora

work = Path(tempfile.mkdtemp())
train, ev = write_corpora(work / "train.txt", work / "eval.txt", 100_000, 8_000, seed=1, n_types=3000)
ds = prepare_dataset(train, ev, max_vocab=2000, P=0.4)
print(f"{len(ds.split.frequent)} frequent types, {len(ds.split.infrequent)} infrequent")

small = dict(n_layers=2, d_model=64, n_heads=2, d_ff=128, n_experts=8, total_steps=300, lr_peak=2e-3, seq_len=32)
rows = []
for arch in ("dense", "smoe", "hash", "share_moe", "maskmoe"):
    extra = {"v_a": 4, "v_b": 1} if arch == "maskmoe" else {}
    s = run(RunConfig(architecture=arch, **small, **extra), ds)
    s["label"] = arch
    rows.append(s)
    print(f"{arch:>10}: {s['train_seconds']:.0f}s, loss {s['initial_loss']:.2f} -> {s['final_smoothed_loss']:.2f}")

# %%
# fluct_F and fluct_I are the occurrence-weighted rates at which a frequent
# or an infrequent token's top expert changed between logged training
# steps. Hash routing never changes; masked routing never changes for
# tokens with one visible expert.
print(format_table(rows))
