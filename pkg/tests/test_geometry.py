import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hinged_truchet.geometry import (ClosedMismatch, LatticePath, containment_ratio, curve,
                                     endpoint_distance_and_box, interpret, is_non_crossing,
                                     normalize, squared_endpoint_distance, turn)
from hinged_truchet.lsystem import Word, apply_ops, expand_turns
from strategies import open_words, tiling_seeds, bits


def test_headings():
    assert [turn(h, "R") for h in "NESW"] == list("ESWN")
    assert [turn(h, "L") for h in "NESW"] == list("WNES")


def test_interpret_examples():
    assert interpret("v", (0, 0), "S") == [(0, 0), (0, -1)]
    assert interpret("vRh", (0, 0), "S") == [(0, 0), (0, -1), (-1, -1)]
    sq = interpret(expand_turns("LLLL"), (0, 0), "S")
    assert sq.closed and sq.n_edges == 4
    assert sq == [(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]


def test_closed_mismatch():
    with pytest.raises(ClosedMismatch):
        interpret(Word("LvLh", closed=True))


@given(open_words())
def test_edge_count_is_crossings(w):
    p = interpret(w)
    assert p.n_edges == w.crossings
    LatticePath(p.points)   # unit steps


def test_non_crossing_examples():
    assert is_non_crossing(interpret(expand_turns("LLLL")))
    assert not is_non_crossing(LatticePath([(0, 0), (0, 1), (0, 0)]))
    assert not is_non_crossing(LatticePath([(0, 0), (0, 1), (1, 1), (1, 0), (0, 0), (0, 1)]))
    assert is_non_crossing(curve([0], 14))


def test_vertex_touch_versus_crossing():
    # a plus sign through the origin crosses, a kiss at the origin does not
    cross = [(-1, 0), (0, 0), (1, 0), (1, 1), (0, 1), (0, 0), (0, -1)]
    kiss = [(-1, 0), (0, 0), (0, 1), (1, 1), (1, 0), (0, 0), (0, -1)]
    assert not is_non_crossing(LatticePath(cross))
    assert is_non_crossing(LatticePath(kiss))


def test_endpoint_examples():
    assert endpoint_distance_and_box(curve([0], 0))[0] == 1.0
    assert endpoint_distance_and_box(curve([0], 4))[0] == 4.0
    assert endpoint_distance_and_box(curve([0], 6))[0] == 8.0
    with pytest.raises(ValueError):
        endpoint_distance_and_box(interpret(expand_turns("LLLL")))


def test_bbox():
    d, box = endpoint_distance_and_box(interpret("hLvRhRv"))
    assert box == (0, -2, 1, 0)


@settings(max_examples=60)
@given(bits(max_size=14))
def test_endpoint_law(B):
    assert squared_endpoint_distance(interpret(apply_ops("v", B))) == 2 ** len(B)


def test_normalize_examples():
    t = normalize(LatticePath([(0, 0), (0, 1)]), (0, 0), (0, 1)).transform
    assert t.scale == pytest.approx(1) and t.rotation == pytest.approx(0)
    t = normalize(LatticePath([(0, 0), (0, 1), (0, 2)]), (0, 0), (0, 1)).transform
    assert t.scale == pytest.approx(0.5)
    # dragon after two steps, walked from heading E, ends at (0, -2) ... rotated onto +y
    t = normalize(interpret(apply_ops("v", [0, 0]), heading="E"), (0, 0), (0, 1)).transform
    assert t.scale == pytest.approx(0.5) and t.rotation == pytest.approx(90)
    with pytest.raises(ValueError):
        normalize(LatticePath([(0, 0), (0, 1)]), (1, 1), (1, 1))


@given(bits(min_size=1, max_size=8))
def test_normalize_reproduces_points(B):
    p = curve(B)
    q = normalize(p, (0.0, 0.0), (0.0, 1.0))
    assert np.allclose(q.transform.apply(p.points), q.points, atol=1e-9)
    assert np.allclose(q.points[0], (0, 0), atol=1e-12)
    assert np.allclose(q.points[-1], (0, 1), atol=1e-12)


def _exact_ratio(B, k):
    # independent oracle: exact rational geometry on integer coordinates
    p = curve(B, k).points
    a, b = p[0], p[-1]
    d = b - a
    L2 = int(d @ d)
    best = 0.0
    for q in p:
        r = q - a
        t = int(r @ d)
        if t <= 0:
            s2 = int(r @ r)
        elif t >= L2:
            s2 = int((q - b) @ (q - b))
        else:
            cr = int(r[0] * d[1] - r[1] * d[0])
            s2 = cr * cr / L2
        best = max(best, s2 / L2)
    return math.sqrt(best)


def test_containment_values_against_oracle():
    assert containment_ratio([0], 0) == 0.0
    # the dragon leaves the half-unit disc around its segment first at step 5
    assert containment_ratio([0], 4) == pytest.approx(0.5, abs=1e-12)
    assert containment_ratio([0], 5) == pytest.approx(0.625, abs=1e-12)
    for B in ([0], [1], [0, 0, 1], [0, 1], [0, 0, 1, 1]):
        for k in range(0, 11):
            assert containment_ratio(B, k) == pytest.approx(_exact_ratio(B, k), abs=1e-12)


def test_containment_closed_form_for_01():
    for k in range(1, 15):
        assert containment_ratio([0, 1], k) == pytest.approx(1 - 2.0 ** -math.ceil(k / 2), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(bits(min_size=1, max_size=8), st.integers(0, 14))
def test_containment_stays_below_one(B, k):
    assert containment_ratio(B, k) < 1.0


@settings(max_examples=40, deadline=None)
@given(tiling_seeds(), bits(max_size=10))
def test_non_crossing_tiling_seeds(w, B):
    assert is_non_crossing(interpret(apply_ops(w, B)))
