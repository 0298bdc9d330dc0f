import itertools
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hinged_truchet import boundary
from hinged_truchet.boundary import (CharPoly, ClassificationError, char_poly, classify_boundary,
                                     decomposition_matrix, image_of_corner, image_of_segment,
                                     is_applicable, sim_value, solve_lambda)
from hinged_truchet.lsystem import mirror

ALL_UP_TO_5 = [b for n in range(1, 6) for b in itertools.product((0, 1), repeat=n)]


def test_segment_images():
    mp = image_of_segment("0")
    assert mp.n_edges == 2 and mp.labels == "hv"
    assert image_of_segment("0001").n_edges == 16
    with pytest.raises(ValueError):
        image_of_segment("")


def test_corner_images():
    assert image_of_corner("0").n_edges == 4
    assert image_of_corner("0001").n_edges == 32
    # op 1 draws the mirror image of op 0
    for B in ("0", "001"):
        a = image_of_corner(B).path.points
        b = image_of_corner(mirror(B)).path.points
        assert not np.array_equal(a, b)
    a = image_of_segment("0").path.points
    b = image_of_segment("1").path.points
    assert np.array_equal(a * [-1, 1], b)


def test_classify_0001():
    mp = image_of_segment("0001")
    left = classify_boundary(mp, "left")
    right = classify_boundary(mp, "right")
    assert len(left.vertices) == 5 and len(right.vertices) == 6
    assert left.counts == (2, 2, 2)
    assert right.counts == (3, 1, 3)
    assert left.endpoints == right.endpoints
    assert not (left.vertices & right.vertices)


def test_classify_dragon():
    mp = image_of_segment("0")
    assert classify_boundary(mp, "left").pieces == ["W"]
    assert sorted(classify_boundary(mp, "right").pieces) == ["U", "V"]
    assert classify_boundary(image_of_corner("0")).pieces == ["V", "V"]


def test_classification_needs_depth():
    with pytest.raises(ClassificationError):
        classify_boundary(image_of_segment("0001"), "left", m=0)


def test_unknown_piece_is_reported(monkeypatch):
    def broken(B):
        raise ClassificationError("piece matches no known piece")
    monkeypatch.setattr(boundary, "decomposition_matrix", broken)
    r = boundary.sim_value("001")
    assert not r.applicable and "no known piece" in r.diagnostic
    assert r.to_dict()["M"] is None


def test_matrices():
    assert decomposition_matrix("0001").M == ((2, 2, 2), (3, 1, 3), (6, 2, 2))
    assert char_poly(decomposition_matrix("001").M) == CharPoly(3, 4, 8)
    assert char_poly(decomposition_matrix("0").M) == CharPoly(1, 0, 2)
    assert str(char_poly(decomposition_matrix("0001"))) == "x^3 - 5x^2 - 16x - 16"


def test_char_poly_examples():
    p = char_poly([[2, 2, 2], [3, 1, 3], [6, 2, 2]])
    assert (p.a, p.b, p.c) == (5, 16, 16)
    p = char_poly(np.eye(3, dtype=int))
    assert (p.a, p.b, p.c) == (3, -3, 1) and not is_applicable(p)
    p = char_poly(np.zeros((3, 3), dtype=int))
    assert (p.a, p.b, p.c) == (0, 0, 0) and not is_applicable(p)
    assert str(p) == "x^3"


def _charpoly_oracle(M):
    # Faddeev-LeVerrier in exact integers, a second route to the coefficients
    A = [list(map(int, r)) for r in M]
    mul = lambda X, Y: [[sum(X[i][k] * Y[k][j] for k in range(3)) for j in range(3)]
                        for i in range(3)]
    coef = [1]                      # leading coefficient first
    Mk = [[0] * 3 for _ in range(3)]
    for k in range(1, 4):
        Mk = mul(A, Mk)
        for i in range(3):
            Mk[i][i] += coef[-1]
        AM = mul(A, Mk)
        coef.append(-sum(AM[i][i] for i in range(3)) // k)
    return -coef[1], -coef[2], -coef[3]


def test_char_poly_against_oracle():
    rng = np.random.default_rng(5)
    for _ in range(200):
        M = rng.integers(-6, 7, size=(3, 3)).tolist()
        p = char_poly(M)
        assert (p.a, p.b, p.c) == _charpoly_oracle(M)


@pytest.mark.parametrize("B", ALL_UP_TO_5, ids=lambda b: "".join(map(str, b)))
def test_cayley_hamilton_and_shape(B):
    D = decomposition_matrix(B)
    M = D.M
    assert all(v >= 0 for r in M for v in r)
    assert all(sum(r) >= 1 for r in M)
    assert char_poly(D).at_matrix(D) == [[0] * 3] * 3


@pytest.mark.parametrize("B", ALL_UP_TO_5, ids=lambda b: "".join(map(str, b)))
def test_mirror_symmetry(B):
    r, q = sim_value(B), sim_value(mirror(B))
    assert r.applicable == q.applicable
    assert char_poly(r.M) == char_poly(q.M)
    if r.applicable:
        assert r.s == pytest.approx(q.s, abs=1e-9)


def test_deterministic():
    assert decomposition_matrix("00101").M == decomposition_matrix("00101").M


def test_sim_values():
    r = sim_value("001")
    assert r.lam == pytest.approx(0.23017, abs=1e-4)
    assert r.s == pytest.approx(1.4128, abs=5e-4)
    assert sim_value("0001").s == pytest.approx(1.4476, abs=5e-4)
    r = sim_value("0")
    assert r.lam == pytest.approx(0.58975, abs=1e-5)
    assert r.s == pytest.approx(1.5236, abs=5e-4)


def test_degenerate_cases_not_applicable():
    for B in ("01", "0011", "10", "1100"):
        r = sim_value(B)
        assert not r.applicable and r.M is not None and r.lam is None


def test_lambda_solves_sim_equation():
    for B in ALL_UP_TO_5:
        r = sim_value(B)
        if not r.applicable:
            continue
        a, b, c = r.poly.a, r.poly.b, r.poly.c
        assert -1 < 0 <= a + b + c - 1
        assert 0 < r.lam < 1
        assert abs(c * r.lam ** 3 + b * r.lam ** 2 + a * r.lam - 1) < 1e-10
        # cross-check with a general cubic solver on c_M itself
        roots = np.roots([1, -a, -b, -c])
        big = max(x.real for x in roots if abs(x.imag) < 1e-9)
        assert r.lam == pytest.approx(1 / big, abs=1e-10)
        assert r.s == pytest.approx(2 * math.log2(big) / len(B), abs=1e-9)


def test_bisection_tolerance():
    lam = solve_lambda(CharPoly(1, 0, 2))
    assert abs(lam - 0.589754512301) < 1e-11
    with pytest.raises(ValueError):
        solve_lambda(CharPoly(0, 0, 0))


def test_report_json():
    d = json.loads(sim_value("001").to_json())
    assert set(d) == {"B", "M", "charpoly", "applicable", "lambda", "sim_value", "n"}
    assert d["B"] == "001" and d["n"] == 3
    assert d["charpoly"] == {"a": 3, "b": 4, "c": 8}
    assert d["lambda"] == float("%.15g" % sim_value("001").lam)
    d = sim_value("01").to_dict()
    assert d["applicable"] is False and d["lambda"] is None


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=3),
       st.lists(st.integers(0, 1), min_size=1, max_size=3))
def test_matrices_compose(B, C):
    # doing B then C splits each piece first by B, then each part by C
    MB = np.array(decomposition_matrix(B).M)
    MC = np.array(decomposition_matrix(C).M)
    assert np.array_equal(np.array(decomposition_matrix(B + C).M), MB @ MC)


def test_repeated_period_keeps_spectral_radius():
    # 000 is the dragon again; its polynomial has a negative coefficient so the
    # X = U reading rejects it, but the growth rate per operation is unchanged
    r0, r3 = sim_value("0"), sim_value("000")
    assert r0.applicable and not r3.applicable
    rho = max(abs(np.linalg.eigvals(np.array(r3.M.M, dtype=float))))
    assert 2 * math.log2(rho) / 3 == pytest.approx(r0.s, abs=1e-9)
