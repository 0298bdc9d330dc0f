"""Rewriting words with the two hinge operations.

A word alternates turns (L, R) and crossings (h, v).  Operation 0 replaces
h by hLv and v by hRv; operation 1 swaps the turn letters on the right.
Turns are never rewritten, so the word grows only at its crossings.
"""
from hinged_truchet import apply_op, apply_ops, parse_script, render_script

# one segment, two steps of operation 0: the start of the dragon
w = "v"
for step in range(4):
    print(step, w)
    w = apply_op(w, 0)

# scripts put the operations in front of the seed, applied left to right
s = parse_script("0100010RRRR")
print(s.ops, s.seed, "closed" if s.closed else "open")
word = s.word()
print("crossings", word.crossings, "turns", word.turns)
print("round trip", render_script(s))

# crossings double at every step, turns gain one per old crossing
for n in range(6):
    x = apply_ops("v", [0] * n)
    print(n, x.crossings, x.turns)
