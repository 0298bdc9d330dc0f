"""Words as lattice curves, drawn from tile centre to tile centre.

Writes dragon.svg and fig5.svg into the directory given on the command line
(default: demo_output).
"""
import math
import os
import sys

from hinged_truchet import (RenderStyle, containment_ratio, curve, endpoint_distance_and_box,
                            interpret, is_non_crossing, parse_script, svg_curve)

out = sys.argv[1] if len(sys.argv) > 1 else "demo_output"
os.makedirs(out, exist_ok=True)

# the dragon after k steps: endpoints sit 2^(k/2) apart, the path never crosses
for k in (0, 2, 4, 6, 8, 10):
    p = curve([0], k)
    d, box = endpoint_distance_and_box(p)
    print("k=%2d edges=%5d end distance %.3f (2^(k/2)=%.3f) box %s simple=%s"
          % (k, p.n_edges, d, 2 ** (k / 2), box, is_non_crossing(p)))

# how far the curve strays from the segment it replaces, in units of that segment
for B in ([0], [0, 0, 1], [0, 1]):
    print("B=%s ratios" % "".join(map(str, B)),
          " ".join("%.4f" % containment_ratio(B, k) for k in range(0, 15, 2)))
print("2 - sqrt 2 = %.4f" % (2 - math.sqrt(2)))

with open(os.path.join(out, "dragon.svg"), "w") as f:
    f.write(svg_curve([curve([0], 10)], RenderStyle(stroke_width=0.3)))

# one closed tile, drawn with each tile design
p = interpret(parse_script("0100010RRRR").word())
for design in (None, "arcs", "diagonals", "middeform"):
    name = "fig5_%s.svg" % (design or "centres")
    with open(os.path.join(out, name), "w") as f:
        f.write(svg_curve([p], RenderStyle(design=design)))
print("wrote", out)
