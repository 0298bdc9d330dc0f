"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from hinged_truchet.geometry import ClosedMismatch, interpret
from hinged_truchet.lsystem import Word
from hinged_truchet.tiling import random_grid, trace_components


@st.composite
def open_words(draw, max_crossings=12):
    n = draw(st.integers(1, max_crossings))
    first = draw(st.sampled_from("hv"))
    lead = draw(st.booleans())
    trail = draw(st.booleans())
    out = []
    c = first
    for i in range(n):
        if i or lead:
            out.append(draw(st.sampled_from("LR")))
        out.append(c)
        c = "v" if c == "h" else "h"
    if trail:
        out.append(draw(st.sampled_from("LR")))
    return Word("".join(out))


@st.composite
def turn_seeds(draw, max_len=8):
    k = draw(st.integers(1, max_len // 2))
    return "".join(draw(st.lists(st.sampled_from("LR"), min_size=2 * k, max_size=2 * k)))


def bits(min_size=0, max_size=12):
    return st.lists(st.integers(0, 1), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def tiling_seeds(draw, max_side=8):
    """A strand of a random even torus, as a word.

    Strands that wrap round the torus do not close up in the plane; those
    come back as open words.
    """
    w = 2 * draw(st.integers(1, max_side // 2))
    h = 2 * draw(st.integers(1, max_side // 2))
    g = random_grid(w, h, draw(st.integers(0, 2 ** 32)), torus=True)
    words = trace_components(g)
    word = words[draw(st.integers(0, len(words) - 1))]
    try:
        interpret(word)
        return word
    except ClosedMismatch:
        return Word(word.symbols, closed=False)
