"""Searching for the least distorted short paths."""

# %%
import math

from distort3 import brute_force_oracle, local_search

# %% Multi-start simplex search on a smoothed maximum, finished on the exact one.
# n = 2 lands on the right angle; n = 3 on the U-shape.
for n, restarts in ((2, 20), (3, 20), (4, 10), (5, 10)):
    res = local_search(n, restarts=restarts)
    print(f"n={n}: {res.value:.6f}")
print("2/sqrt(3) =", 2 / math.sqrt(3))

# %% An exhaustive grid over turn angles and a few edge lengths agrees for n = 2.
orc = brute_force_oracle(2)
print("grid optimum n=2:", orc.value, "turn", orc.turns, "lengths", orc.lengths)

# %% Outside the plane nothing is known in closed form; this is just a measurement.
print("n=3 in R^3:", local_search(3, d=3, restarts=10).value)
