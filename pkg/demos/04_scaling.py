"""Log-log slopes: constructed curves versus one fixed arc sampled ever finer.

Run with ``--full`` to include the d = 3 curve at n = 1024 (about half a minute).
"""

# %%
import sys

from distort3 import baseline, fit_exponent, scan
from distort3.scan import scan_slope

full = "--full" in sys.argv

# %% A fixed arc refined to n unit steps: the consecutive triangles flatten like 1/n.
rows = baseline([8, 16, 32, 64, 128])
print("fixed arc slope:", round(fit_exponent([(r.n, r.delta3) for r in rows])[0], 4))

# %% Planar construction: linear in n, as expected for d = 2.
print("d=2 slope:", round(scan_slope(scan(2, [4, 8, 16, 32, 64]))[0], 4))

# %% Lifted constructions. The hoped-for exponents are 1/2 and 1/3; the measured
# ones are larger, because neighbouring raised copies meet at sharp corners.
ms3 = [4, 6, 8, 12, 16, 24, 32] if full else [4, 6, 8, 12, 16]
for d, ms in ((3, ms3), (4, [3, 4, 5, 6])):
    recs = scan(d, ms)
    slope, _ = scan_slope(recs)
    print(f"d={d} slope: {slope:.4f}  target {1 / (d - 1):.4f}")
    for r in recs:
        print(f"    m={r.m:3d} n={r.n:5d} delta3={r.delta3:9.3f} ({r.runtime_ms} ms)")
