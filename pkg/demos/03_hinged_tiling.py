"""Hinged Truchet tilings.

Every tile turns about its corners, even tiles one way and odd tiles the
other, shrinking so the corners keep sliding along the old grid lines.  At
45 degrees the gaps are square and a new tile fills each one.  The number of
strands never changes, and the strands change exactly as the rewriting rules
say.
"""
import os
import sys

from hinged_truchet import (animation_frames, apply_op, components, hinge_step,
                            random_grid, scale_at, trace_components)

out = sys.argv[1] if len(sys.argv) > 1 else "demo_output"
os.makedirs(out, exist_ok=True)

for th in (0, 15, 30, 45):
    print("theta %2d scale %.5f" % (th, scale_at(th)))

g = random_grid(6, 6, seed=4, torus=True)
print(g, "components", components(g))
for op in (0, 1):
    g1 = hinge_step(g, op)
    print(" op", op, "->", g1, "components", components(g1))


def cyclic(w):
    s = w.symbols
    return min(s[k:] + s[:k] for k in range(0, len(s), 2))


# trace every strand as a word, rewrite it, and compare with the hinged tiling
before = sorted(cyclic(apply_op(w, 0)) for w in trace_components(g))
after = sorted(cyclic(w) for w in trace_components(hinge_step(g, 0)))
print("rewrite then hinge agree:", before == after)

# two steps in a row re-align the grid with the axes
g2 = hinge_step(hinge_step(g, 0), 1)
print("two steps:", g2)

for k, svg in enumerate(animation_frames(random_grid(4, 4, 1), 0, 6)):
    with open(os.path.join(out, "hinge_%02d.svg" % k), "w") as f:
        f.write(svg)
print("wrote", out)
