"""
Frequent and infrequent tokens
==============================

Token frequencies in language follow a steep power law. A handful of word
types cover a large share of the running text, and most types are rare.
This script builds a vocabulary on a small synthetic corpus and cuts it
into a frequent class and an infrequent class by coverage.
"""

import tempfile
from pathlib import Path

import numpy as np

from maskmoe.corpus import build_vocab, count_frequencies, split_by_coverage
from maskmoe.synth import write_corpora

work = Path(tempfile.mkdtemp())
train, _ = write_corpora(work / "train.txt", work / "eval.txt", 200_000, 10_000, seed=0, n_types=5000)

vocab = build_vocab(train, max_vocab=4000)
freq = count_frequencies(train, vocab)
print(f"{freq.total} tokens, {len(vocab)} vocabulary entries (ids 0 and 1 are <unk> and <bos>)")

# The ten most common types and their share of the text.
order = np.argsort(-freq.counts, kind="stable")[:10]
for i in order:
    print(f"  {vocab.tokens[i]:>16}  {freq.counts[i]:7d}  {freq.counts[i] / freq.total:.3%}")

# %%
# Coverage split. Types are taken from most to least frequent until they
# cover a fraction P of all tokens; those are frequent, the rest infrequent.
for P in (0.2, 0.4, 0.6):
    split = split_by_coverage(freq, P)
    covered = freq.counts[sorted(split.frequent)].sum() / freq.total
    print(f"P={P}: {len(split.frequent):4d} frequent types cover {covered:.3f} of the text, "
          f"{len(split.infrequent)} infrequent")

# %%
# The split, the vocabulary and the counts are plain text files.
split = split_by_coverage(freq, 0.4)
vocab.save(work / "vocab.txt")
freq.save(work / "freq.tsv")
split.save(work / "split.tsv")
print((work / "split.tsv").read_text().splitlines()[:4])
