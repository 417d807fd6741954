"""
Detail loss and gradient verification
=====================================

Evaluates the dice + binary-cross-entropy detail loss on hand-checkable
cases, then compares the analytic gradients against central finite
differences on random maps.
"""

import math

import numpy as np

from stdcnet import bce_loss, detail_loss, dice_loss, grad_check

# Hand cases first. A half-confident prediction over a half-foreground target
# gives dice 0.25, and every pixel of a 0.5 prediction costs ln 2 in bce.
p = np.full((2, 2), 0.5)
g = np.array([[1.0, 1.0], [0.0, 0.0]])
loss = detail_loss(p, g, eps=1.0)
print(f"dice {loss.dice:.4f}  bce {loss.bce:.4f}  total {loss.total:.4f} "
      f"(expected {0.25 + math.log(2):.4f})")

# Perfect predictions cost nothing; empty maps are saved by the smoothing term.
print("dice(p=g)   =", dice_loss(g, g, eps=1.0)[0])
print("dice(0, 0)  =", dice_loss(np.zeros((4, 4)), np.zeros((4, 4)), eps=1.0)[0])

# Gradient check: nudge every coordinate by +-1e-4 and compare the quotient
# against the analytic gradient, in float64.
rng = np.random.default_rng(0)
pr = rng.uniform(0.2, 0.8, size=(12, 12))
gr = (rng.uniform(size=(12, 12)) < 0.35).astype(np.float64)
for name, fn in (
        ("dice", lambda a, b: dice_loss(a, b, eps=1.0)),
        ("bce", bce_loss),
        ("detail", lambda a, b: (lambda lv: (lv.total, lv.gradient))(detail_loss(a, b)))):
    err = grad_check(fn, pr, gr, step=1e-4)
    print(f"{name:<7} max relative gradient error: {err:.2e}")
