"""
Reading the desk sweep
======================

Prints per-seed results of ``desk_sweep.py`` and the three ordering checks:
every MoE variant below dense on eval perplexity, every training loss down
by at least 30%, and masked routing no worse than the learned router on
infrequent-token NLL. Runs that have not finished yet are left out.
"""

import sys
from pathlib import Path

import numpy as np

from maskmoe.cli import format_table
from maskmoe.desk import ARCHS, SEEDS, load_cached

CACHE = Path(__file__).resolve().parent.parent / "desk_cache"
runs = load_cached(CACHE)
if not runs:
    sys.exit("no finished runs in desk_cache/; start demos/desk_sweep.py")

for seed in SEEDS:
    rows = [dict(runs[a, seed], label=a) for a in ARCHS if (a, seed) in runs]
    if rows:
        print(f"seed {seed}")
        print(format_table(rows))
        print()

print(f"{'arch':<10} {'seeds':>5} {'mean ppl':>9} {'nll_I':>7} {'loss drop':>9}")
for a in ARCHS:
    done = [runs[a, s] for s in SEEDS if (a, s) in runs]
    if done:
        drop = min(1 - r["final_smoothed_loss"] / r["initial_loss"] for r in done)
        print(f"{a:<10} {len(done):>5} {np.mean([r['ppl'] for r in done]):>9.1f} "
              f"{np.mean([r['eval_nll_infrequent'] for r in done]):>7.3f} {drop:>9.3f}")
