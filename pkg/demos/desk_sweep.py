"""Train the five architectures on the synthetic desk corpus, three seeds each.

Results land in desk_cache/ as one JSON summary per run; rerunning skips
finished runs. On a single CPU core the whole sweep takes a few hours.

    python demos/desk_sweep.py
"""

from pathlib import Path

from maskmoe.desk import run_desk

CACHE = Path(__file__).resolve().parent.parent / "desk_cache"

if __name__ == "__main__":
    run_desk(CACHE)
