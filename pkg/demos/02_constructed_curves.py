"""Arc-spline curves whose marked points keep the 3-distortion small."""

# %%
from pathlib import Path

import numpy as np

from distort3 import ConstructionParams, build_curve, build_gamma, delta3, metric_contraction_ratio, sample_polyline
from distort3.svg import render_svg

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

# %% The planar curve: m flat arcs replacing a sixth of a circle. The distortion
# grows linearly, about 0.96 m, because the points all live on a shallow curve.
for m in (4, 8, 16, 32):
    seq = build_gamma(ConstructionParams(m))
    rep = delta3(seq)
    gaps = seq.gaps
    print(f"m={m:3d}  delta3={rep.delta3:8.3f}  delta3/m={rep.delta3 / m:.3f}  gaps in [{gaps.min():.4f}, {gaps.max():.4f}]")

# %% Lifting into the next dimension: a copy of the planar curve is raised over
# every unit piece of the base curve.
for m in (3, 4, 6):
    curve = build_curve(ConstructionParams(m, 3))
    seq = build_gamma(ConstructionParams(m, 3))
    ratio = metric_contraction_ratio(curve, 4)
    print(f"m={m}  n={seq.n:3d}  delta3={delta3(seq).delta3:7.3f}  chord/arc >= {ratio:.3f}")

# %% Pictures: top view and side view of the lifted curve.
curve = build_curve(ConstructionParams(6, 3))
marks = curve.marked_points()
poly = sample_polyline(curve, 16)
for plane in ("xy", "xz"):
    path = out / f"gamma_6_3_{plane}.svg"
    path.write_text(render_svg([poly], marks, plane=plane, title=f"Gamma(6, 3), {plane}"))
    print("wrote", path)
print("height range of the marks:", np.ptp(marks[:, 2]))
