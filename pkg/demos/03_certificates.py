"""Square-root lower bounds, certified on concrete sequences."""

# %%
import json
import math

import numpy as np

from distort3 import ConstructionParams, build_gamma, convexity_certificate, delta3, prop1_verify

# %% Unit steps around three quarters of a circle. With delta = ceil(delta3),
# every delta-th point is in convex position, and the widest angle of that
# polygon yields a triangle that is at least floor(n/delta)/(2 pi) distorted.
n = 60
theta = 2 * math.pi * 0.75 / n
R = 0.5 / math.sin(theta / 2)
t = theta * np.arange(n + 1)
arc = R * np.stack([np.cos(t), np.sin(t)], axis=1)
report = prop1_verify(arc)
print(json.dumps(report.to_dict(), indent=2)[:900], "...")

# %% On the constructed planar curve the distortion is already about n, so the
# subsample has only two points and the bound holds for the trivial reason
# delta >= n/2. A finer step shows the geometry the argument relies on.
seq = build_gamma(ConstructionParams(32))
value = delta3(seq).delta3
print("Gamma(32, 2): delta3 =", round(value, 3), "->", prop1_verify(seq, value).branch)
cert = convexity_certificate(seq, 1)
w = cert.witness
print(f"step 1: convex={cert.convex}, widest angle {w.angle:.4f} at indices {w.indices}, "
      f"bound {w.lemma_bound:.3f} <= triple distortion {w.triple_distortion:.3f}")
