"""
Per-token routing masks
=======================

Every token gets a fixed set of experts it may be routed to. Frequent
tokens see ``V_a`` experts and infrequent ones see ``V_b``, usually one.
The sets come from a counter-based random stream keyed by the token id,
so the same seed always gives the same table.
"""

import numpy as np

from maskmoe.corpus import FrequencySplit
from maskmoe.maskgen import MaskConfig, build_mask_table, uniform_table
from maskmoe.metrics import assignment_counts, within_multinomial_bounds
from maskmoe.routing import hash_route

vocab_size, N = 2000, 16
frequent = frozenset(range(2, 40))
split = FrequencySplit(frequent, frozenset(range(vocab_size)) - frequent, 0.4)

table = build_mask_table(vocab_size, split, MaskConfig(N, v_a=8, v_b=1), seed=0)
print("token 5 (frequent) sees experts", table.visible_set(5).tolist())
print("token 900 (infrequent) sees expert", table.visible_set(900).tolist())
print("additive mask row of token 900:", table.mask(900))

# %%
# With one visible expert per token the table is a hash router.
hash_table = uniform_table(vocab_size, N, 1, seed=7)
same = all(hash_table.visible_set(t)[0] == hash_route(t, N, 7) for t in range(vocab_size))
print("V=1 table agrees with hash_route for every token:", same)

# %%
# Infrequent tokens are spread over the experts like balls in bins.
counts = assignment_counts(table, sorted(split.infrequent))
print("infrequent tokens per expert:", counts.tolist())
print("within 5 sigma of uniform:", within_multinomial_bounds(counts))

# %%
# The table round-trips through a JSON-lines file and its digest is stable.
import os
import tempfile
path = os.path.join(tempfile.mkdtemp(), "masks.jsonl")
table.save(path)
print(open(path).readline().strip())
print("reloaded digest matches:", type(table).load(path).digest() == table.digest())
