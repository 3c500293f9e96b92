"""
Masked router, expert mixture and the balance loss
==================================================

A router scores every expert, the mask pushes invisible experts to
probability zero, and the top-k visible experts process the token. Their
outputs are mixed with the raw router probabilities as weights.
"""

import numpy as np

from maskmoe.losses import load_balance_loss
from maskmoe.maskgen import NEG_INF
from maskmoe.moe_layer import FfnParams, MoeLayerParams, moe_forward
from maskmoe.routing import RouterParams, masked_softmax, route

rng = np.random.default_rng(0)
d, N, d_ff = 8, 4, 16

logits = np.array([2.0, 1.0, 0.5, -1.0])
print("plain softmax:      ", masked_softmax(logits).round(4))
mask = np.array([0.0, NEG_INF, 0.0, NEG_INF])
print("experts 1, 3 masked:", masked_softmax(logits, mask).round(4))

# %%
# Routing one hidden state and running the selected experts.
router = RouterParams(rng.normal(size=(N, d)))
experts = [FfnParams(rng.normal(size=(d_ff, d)) * 0.3, np.zeros(d_ff), rng.normal(size=(d, d_ff)) * 0.3, np.zeros(d))
           for _ in range(N)]
layer = MoeLayerParams(experts, router)
h = rng.normal(size=d)
for k in (1, 2):
    dec = route(h, router, mask, k)
    y = moe_forward(h, layer, dec)
    print(f"k={k}: selected {dec.selected.tolist()}, gates {dec.gates.round(3).tolist()}, |y|={np.linalg.norm(y):.3f}")

# %%
# The balance loss is N * sum_i w_i R_i, with w the share of tokens whose
# top expert is i and R the mean router probability. It is 1 for a
# perfectly spread router and N when every token piles onto one expert.
uniform = np.full((32, N), 1 / N)
onehot = np.eye(N)[np.zeros(32, dtype=int)]
print("uniform:", float(load_balance_loss(uniform, N).data), " concentrated:", float(load_balance_loss(onehot, N).data))
