"""Self-similar decomposition of the boundary of B-repeated curves.

U and V are the two sides of the limit of a marked unit segment, W the
concave side of two segments meeting at a right angle.  After the operations
B the image of a segment has, on each side, a boundary made of smaller copies
of U, V and W (scaled by 2**(-n/2)).  Counting them gives a 3x3 matrix M whose
characteristic polynomial fixes the sim value.

Pieces are identified numerically: the curve is refined m further steps and
every piece's boundary vertex set is compared, up to rotation by multiples of
90 degrees and translation, with the boundary of a refined U, V or W.

Classification works in the mirror image of the turtle frame (x -> -x), so
"left" below is the left side as drawn there.
"""
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import interpret, LatticePath, crossing_labels
from .lsystem import MAX_SEGMENTS, apply_ops, ops_prefix, parse_ops

SEGMENT = "v"
CORNER = "hLv"
PIECES = ("U", "V", "W")


class ClassificationError(RuntimeError):
    pass


def _drawn(points):
    p = points.copy()
    p[:, 0] = -p[:, 0]
    return p


@dataclass(frozen=True)
class MarkedPath:
    path: LatticePath
    labels: str
    start_parity: int
    ops: tuple
    seed: str
    corner_side: str = None   # concave side, only for corner images

    @property
    def n_edges(self):
        return self.path.n_edges


def _marked(seed, B, corner=False):
    B = parse_ops(B)
    if not B:
        raise ValueError("need at least one operation")
    w = apply_ops(seed, B)
    src = interpret(w)
    path = LatticePath(_drawn(src.points), check=False)
    side = None
    if corner:
        side = "left" if _turn_signs(_drawn(interpret(seed).points))[0] > 0 else "right"
    return MarkedPath(path, crossing_labels(w), 0, B, seed, side)


def image_of_segment(B):
    return _marked(SEGMENT, B)


def image_of_corner(B):
    return _marked(CORNER, B, corner=True)


def _keys(pts):
    return pts[:, 0].astype(np.int64) * (1 << 32) + pts[:, 1].astype(np.int64)


def _turn_signs(pts):
    d = np.diff(pts, axis=0)
    return d[:-1, 0] * d[1:, 1] - d[:-1, 1] * d[1:, 0]


def side_indices(pts):
    """Boundary vertex indices on each side, endpoints included.

    A vertex visited once is on the boundary of the side away from which the
    path turns there: a clockwise turn exposes the left side.
    """
    k = _keys(pts)
    _, inv, cnt = np.unique(k, return_inverse=True, return_counts=True)
    once = cnt[inv] == 1
    cr = _turn_signs(pts)
    inner = np.arange(1, len(pts) - 1)
    single = once[1:-1]
    left = inner[single & (cr < 0)]
    right = inner[single & (cr > 0)]
    end = len(pts) - 1
    mk = lambda a: np.concatenate([[0], a, [end]])
    return {"left": mk(left), "right": mk(right)}


def _rot(p, k):
    x, y = p[..., 0], p[..., 1]
    for _ in range(k % 4):
        x, y = y, -x
    return np.stack([x, y], axis=-1)


class _Shape:
    def __init__(self, pts):
        self.a = pts[0]
        self.b = pts[-1]
        self.pts = pts
        self.n = len(pts)
        self.sorted = np.sort(_keys(pts))


def _canonical(B, m):
    ops = ops_prefix(B, m)
    seg = _drawn(interpret(apply_ops(SEGMENT, ops)).points)
    s = side_indices(seg)
    cor = _drawn(interpret(apply_ops(CORNER, ops)).points)
    side = "left" if _turn_signs(_drawn(interpret(CORNER).points))[0] > 0 else "right"
    c = side_indices(cor)[side]
    return {"U": _Shape(seg[s["left"]]), "V": _Shape(seg[s["right"]]), "W": _Shape(cor[c])}


def _matches(piece, p, q, shape):
    if len(piece) != shape.n:
        return False
    target = np.sort(_keys(piece))
    d = shape.b - shape.a
    for s, t in ((p, q), (q, p)):
        for k in range(4):
            if not np.array_equal(_rot(d, k), t - s):
                continue
            img = _rot(shape.pts, k) + (s - _rot(shape.a, k))
            if np.array_equal(np.sort(_keys(img)), target):
                return True
    return False


def refinement_depth(n, seed=CORNER):
    # enough extra levels to tell the pieces apart, within the segment budget
    edges = 2 if seed == CORNER else 1
    m = max(2 * n, 8)
    while m > 1 and (edges << (n + m)) > MAX_SEGMENTS:
        m -= 1
    return m


@dataclass
class BoundarySide:
    side: str
    pieces: list
    vertices: frozenset
    endpoints: tuple

    @property
    def counts(self):
        return tuple(self.pieces.count(x) for x in PIECES)


def classify_boundary(mp, side=None, m=None):
    """Split one side of a marked path into U, V, W pieces.

    side is "left" or "right"; for corner images it defaults to the concave side.
    """
    if side is None or side == "concave":
        side = mp.corner_side
    if side not in ("left", "right"):
        raise ValueError("side must be left or right")
    lab = mp.labels
    for i in range(1, len(lab)):
        if lab[i] == lab[i - 1]:
            raise ClassificationError("edge labels do not alternate h/v")
    n = len(mp.ops)
    if m is None:
        m = refinement_depth(n, mp.seed)
    pts1 = mp.path.points
    sel1 = side_indices(pts1)[side]
    deep = _drawn(interpret(apply_ops(mp.seed, ops_prefix(mp.ops, n + m))).points)
    seld = side_indices(deep)[side]
    canon = _canonical(mp.ops, m)
    f = 1 << m
    pieces = []
    for a, b in zip(sel1[:-1], sel1[1:]):
        lo, hi = a * f, b * f
        idx = seld[(seld >= lo) & (seld <= hi)]
        piece = deep[idx]
        names = [nm for nm in PIECES
                 if _matches(piece, deep[lo], deep[hi], canon[nm])]
        if len(names) != 1:
            raise ClassificationError(
                "%s side piece between vertices %d and %d %s" % (
                    side, a, b, "matches %s" % "/".join(names) if names else "matches no known piece"))
        pieces.append(names[0])
    verts = frozenset(tuple(int(v) for v in pts1[i]) for i in sel1[1:-1])
    ends = (tuple(int(v) for v in pts1[0]), tuple(int(v) for v in pts1[-1]))
    return BoundarySide(side, pieces, verts, ends)


@dataclass(frozen=True)
class DecompositionMatrix:
    M: tuple
    n: int

    @property
    def scale(self):
        return 2.0 ** (-self.n / 2)

    def array(self):
        return np.array(self.M, dtype=object)

    def tolist(self):
        return [list(r) for r in self.M]


def decomposition_matrix(B):
    B = parse_ops(B)
    seg = image_of_segment(B)
    cor = image_of_corner(B)
    rows = (
        classify_boundary(seg, "left").counts,
        classify_boundary(seg, "right").counts,
        classify_boundary(cor).counts,
    )
    return DecompositionMatrix(rows, len(B))


@dataclass(frozen=True)
class CharPoly:
    """x^3 - a x^2 - b x - c"""
    a: int
    b: int
    c: int

    def __str__(self):
        out = "x^3"
        for coef, mono in ((-self.a, "x^2"), (-self.b, "x"), (-self.c, "")):
            if coef:
                sign = " - " if coef < 0 else " + "
                mag = abs(coef)
                out += sign + (str(mag) if mag != 1 or not mono else "") + mono
        return out

    def __call__(self, x):
        return x ** 3 - self.a * x ** 2 - self.b * x - self.c

    def at_matrix(self, M):
        """c_M(M) with exact integer arithmetic."""
        A = _mat(M)
        I = [[int(i == j) for j in range(3)] for i in range(3)]
        A2 = _mul(A, A)
        A3 = _mul(A2, A)
        return [[A3[i][j] - self.a * A2[i][j] - self.b * A[i][j] - self.c * I[i][j]
                 for j in range(3)] for i in range(3)]


def _mat(M):
    if isinstance(M, DecompositionMatrix):
        M = M.M
    A = [[int(v) for v in r] for r in M]
    if len(A) != 3 or any(len(r) != 3 for r in A):
        raise ValueError("expected a 3x3 matrix")
    return A


def _mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def char_poly(M):
    A = _mat(M)
    tr = A[0][0] + A[1][1] + A[2][2]
    minors = 0
    for i, j in ((0, 1), (0, 2), (1, 2)):
        minors += A[i][i] * A[j][j] - A[i][j] * A[j][i]
    det = (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
           - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
           + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))
    return CharPoly(tr, -minors, det)


def is_applicable(poly):
    a, b, c = poly.a, poly.b, poly.c
    return a >= 0 and b >= 0 and c >= 0 and (a or b or c) and a + b + c > 1


def solve_lambda(poly, tol=1e-12):
    """Root in (0, 1) of c x^3 + b x^2 + a x = 1, by bisection."""
    a, b, c = poly.a, poly.b, poly.c
    f = lambda x: ((c * x + b) * x + a) * x - 1
    lo, hi = 0.0, 1.0
    if not (f(lo) < 0 <= f(hi)):
        raise ValueError("no sign change on [0, 1]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass
class SimValueReport:
    B: tuple
    M: DecompositionMatrix
    poly: CharPoly
    applicable: bool
    lam: float = None
    s: float = None
    diagnostic: str = None

    @property
    def n(self):
        return len(self.B)

    def to_dict(self):
        g = lambda x: None if x is None else float("%.15g" % x)
        d = {
            "B": "".join(str(b) for b in self.B),
            "M": self.M.tolist() if self.M else None,
            "charpoly": ({"a": self.poly.a, "b": self.poly.b, "c": self.poly.c}
                         if self.poly else None),
            "applicable": bool(self.applicable),
            "lambda": g(self.lam),
            "sim_value": g(self.s),
            "n": self.n,
        }
        if self.diagnostic:
            d["diagnostic"] = self.diagnostic
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def sim_value(B):
    B = parse_ops(B)
    if not B:
        raise ValueError("need at least one operation")
    try:
        M = decomposition_matrix(B)
    except ClassificationError as e:
        return SimValueReport(B, None, None, False, diagnostic=str(e))
    poly = char_poly(M)
    if not is_applicable(poly):
        return SimValueReport(B, M, poly, False,
                              diagnostic="coefficients of %s do not give a sim equation" % poly)
    lam = solve_lambda(poly)
    return SimValueReport(B, M, poly, True, lam, 2 * math.log2(1 / lam) / len(B))
