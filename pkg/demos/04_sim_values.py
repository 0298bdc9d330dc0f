"""Sim values of fractile boundaries, computed without any hand work.

For each operation string B the two sides of a segment's image and the
inside of a corner's image are cut into smaller copies of U, V and W.  The
counts form M; its characteristic polynomial x^3 - a x^2 - b x - c gives the
equation c L^3 + b L^2 + a L = 1 and the sim value 2 log2(1/L) / n.
"""
import itertools

from hinged_truchet import classify_boundary, image_of_segment, sim_value

mp = image_of_segment("0001")
for side in ("left", "right"):
    c = classify_boundary(mp, side)
    print(side, "boundary vertices", len(c.vertices), "pieces", c.pieces)

print()
print("%-6s %-30s %-22s %s" % ("B", "M", "c_M", "sim value"))
for n in range(1, 5):
    for B in itertools.product((0, 1), repeat=n):
        if B[0] == 1:
            continue   # op 1 is the mirror image, same numbers
        r = sim_value(B)
        s = "%.4f" % r.s if r.applicable else "not applicable"
        print("%-6s %-30s %-22s %s" % ("".join(map(str, B)), r.M.tolist(), r.poly, s))

print()
print(sim_value("001").to_json())
