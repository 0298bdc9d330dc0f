"""Checking sim values against box counting.

The fractile is the region bounded by LLLL after k operations.  Its boundary
cells are counted in boxes of side 2^m ... 1 and the slope of the log-log fit
estimates the dimension.
"""
import time

from hinged_truchet import sim_value
from hinged_truchet.boxdim import estimate

for B in ("0", "001", "0001", "01", "0011"):
    r = sim_value(B)
    target = r.s if r.applicable else 1.0
    for k in (10, 12, 14):
        t = time.perf_counter()
        e = estimate(B, k)
        print("%-5s depth %2d slope %.4f r2 %.4f target %.4f (%.2f s)"
              % (B, k, e.slope, e.r2, target, time.perf_counter() - t))

# 0011 creeps towards 1 only logarithmically: its M has a repeated eigenvalue 4
for k in (16, 18, 20):
    print("0011 depth", k, "slope %.4f" % estimate("0011", k).slope)
