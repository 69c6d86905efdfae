"""Small paths where every triangle can be inspected by hand."""

# %% The right angle: one triangle, area 1/2, weight 1/2.
import math

import numpy as np

from distort3 import delta3, triple_distortion

right_angle = np.array([[0.0, 1.0], [0.0, 0.0], [1.0, 0.0]])
print("right angle:", delta3(right_angle).delta3)

# %% Three unit edges bent by 2pi/3 twice. Every one of the four triples
# has the same ratio, so nothing can be improved by moving a single point.
s3 = math.sqrt(3)
u_shape = np.array([[0.0, 0.0], [1.0, 0.0], [1.5, s3 / 2], [1.0, s3]])
for t in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
    term = triple_distortion(u_shape, *t)
    print(f"  {t}: rho={term.rho3:.2f} area={term.area:.5f} ratio={term.value:.6f}")
print("U-shape:", delta3(u_shape).delta3, "vs 2/sqrt(3) =", 2 / s3)

# %% Folding the same edges into a square is worse: the end triangles are too thin
# for their index weight.
square = np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0]])
rep = delta3(square)
print("square path:", rep.delta3, "worst", rep.worst.triple)

# %% A straight run has a zero-area triangle, hence infinite distortion.
print("straight:", delta3([[0, 0], [1, 0], [2, 0]]).delta3)
