"""Lattice paths drawn from words, centre of tile to centre of tile.

Frame: x to the right, y up.  A crossing letter advances one unit step in
the current heading, L and R rotate the heading by a quarter turn (R is
clockwise).
"""
import math
from dataclasses import dataclass

import numpy as np

from .lsystem import MAX_SEGMENTS, apply_ops, as_word, ops_prefix

HEADINGS = "NESW"
STEPS = np.array([(0, 1), (1, 0), (0, -1), (-1, 0)], dtype=np.int64)


class ClosedMismatch(ValueError):
    pass


def heading_index(h):
    if isinstance(h, (int, np.integer)):
        return int(h) % 4
    if h not in HEADINGS:
        raise ValueError("heading must be one of N, E, S, W")
    return HEADINGS.index(h)


def turn(h, t):
    i = heading_index(h)
    return HEADINGS[(i + (1 if t == "R" else -1)) % 4]


class LatticePath:
    """Integer vertices, unit steps.  For closed paths points[-1] == points[0]."""

    def __init__(self, points, closed=False, check=True):
        pts = np.asarray(points, dtype=np.int64).reshape(-1, 2)
        if check:
            if len(pts) < 2:
                raise ValueError("a path needs at least one edge")
            d = np.abs(np.diff(pts, axis=0)).sum(axis=1)
            if np.any(d != 1):
                raise ValueError("consecutive points must be one unit step apart")
            if closed and (len(pts) < 5 or np.any(pts[0] != pts[-1])):
                raise ValueError("closed path must return to its start with >= 4 edges")
        self.points = pts
        self.closed = bool(closed)

    def __len__(self):
        return len(self.points)

    @property
    def n_edges(self):
        return len(self.points) - 1

    def steps(self):
        return np.diff(self.points, axis=0)

    def tolist(self):
        return [tuple(int(v) for v in p) for p in self.points]

    def __eq__(self, other):
        if isinstance(other, LatticePath):
            return self.closed == other.closed and np.array_equal(self.points, other.points)
        return self.tolist() == [tuple(p) for p in other]

    def __repr__(self):
        return "LatticePath(%d edges%s)" % (self.n_edges, ", closed" if self.closed else "")


def _codes(symbols):
    return np.frombuffer(symbols.encode("ascii"), dtype=np.uint8)


def headings_of(w, heading="S"):
    """Heading index used by each crossing, in order."""
    a = _codes(as_word(w).symbols)
    rot = np.zeros(len(a), dtype=np.int64)
    rot[a == ord("R")] = 1
    rot[a == ord("L")] = -1
    cross = (a == ord("h")) | (a == ord("v"))
    h = (heading_index(heading) + np.cumsum(rot)) % 4
    return h[cross], int(h[-1]) if len(h) else heading_index(heading)


def interpret(w, start=(0, 0), heading="S"):
    w = as_word(w)
    hd, final = headings_of(w, heading)
    pts = np.empty((len(hd) + 1, 2), dtype=np.int64)
    pts[0] = start
    np.cumsum(STEPS[hd], axis=0, out=pts[1:])
    pts[1:] += np.asarray(start, dtype=np.int64)
    if w.closed:
        if np.any(pts[-1] != pts[0]) or final != heading_index(heading):
            raise ClosedMismatch("closed word does not return to its start pose")
    return LatticePath(pts, closed=w.closed, check=False)


def crossing_labels(w):
    """The h/v letter of each edge of interpret(w)."""
    s = as_word(w).symbols
    return "".join(c for c in s if c in "hv")


def _dir_index(d):
    # unit step -> 0..3 in N, E, S, W order
    return np.where(d[:, 1] == 1, 0, np.where(d[:, 0] == 1, 1, np.where(d[:, 1] == -1, 2, 3)))


def _keys(p):
    return p[:, 0] * (1 << 32) + p[:, 1]


def is_non_crossing(p):
    pts = p.points
    steps = np.diff(pts, axis=0)
    # undirected edge = lower endpoint + axis
    lo = np.minimum(pts[:-1], pts[1:])
    axis = (steps[:, 0] != 0).astype(np.int64)
    ek = _keys(lo) * 2 + axis
    if len(np.unique(ek)) != len(ek):
        return False
    d = _dir_index(steps)
    if p.closed:
        vert = pts[:-1]
        din = (np.roll(d, 1) + 2) % 4  # edge into vertex k, seen from k
        dout = d
    else:
        vert = pts[1:-1]
        din = (d[:-1] + 2) % 4
        dout = d[1:]
    if len(vert) == 0:
        return True
    vk = _keys(vert)
    order = np.argsort(vk, kind="stable")
    vk = vk[order]
    din, dout = din[order], dout[order]
    same = vk[1:] == vk[:-1]
    if not np.any(same):
        return True
    if np.any(same[1:] & same[:-1]):
        # three passages need six edge slots at a degree-four vertex
        return False
    i = np.nonzero(same)[0]
    a1, b1, a2, b2 = din[i], dout[i], din[i + 1], dout[i + 1]
    span = (b1 - a1) % 4
    in_a2 = ((a2 - a1) % 4) < span
    in_b2 = ((b2 - a1) % 4) < span
    return not np.any(in_a2 != in_b2)


def endpoint_distance_and_box(p):
    if p.closed:
        raise ValueError("endpoint distance is only defined for open paths")
    d = p.points[-1] - p.points[0]
    lo = p.points.min(axis=0)
    hi = p.points.max(axis=0)
    return math.hypot(float(d[0]), float(d[1])), (int(lo[0]), int(lo[1]), int(hi[0]), int(hi[1]))


def squared_endpoint_distance(p):
    d = p.points[-1] - p.points[0]
    return int(d[0]) ** 2 + int(d[1]) ** 2


@dataclass(frozen=True)
class Similarity:
    scale: float
    rotation: float  # degrees, counter-clockwise
    translation: tuple

    def apply(self, pts):
        z = np.asarray(pts, dtype=float)
        z = z[:, 0] + 1j * z[:, 1]
        a = self.scale * np.exp(1j * math.radians(self.rotation))
        out = a * z + complex(*self.translation)
        return np.stack([out.real, out.imag], axis=1)


class PlanarPath:
    def __init__(self, points, transform, source=None, closed=False):
        self.points = np.asarray(points, dtype=float)
        self.transform = transform
        self.source = source
        self.closed = closed

    def __len__(self):
        return len(self.points)


def normalize(p, target_a=(0.0, 0.0), target_b=(0.0, 1.0)):
    ta, tb = complex(*target_a), complex(*target_b)
    if ta == tb:
        raise ValueError("target points coincide")
    if isinstance(p, LatticePath):
        src = p
        pts = p.points
    else:
        src = None
        pts = np.asarray(p, dtype=float)
    pa = complex(*map(float, pts[0]))
    pb = complex(*map(float, pts[-1]))
    if pa == pb:
        raise ValueError("path endpoints coincide")
    a = (tb - ta) / (pb - pa)
    b = ta - a * pa
    rot = math.degrees(math.atan2(a.imag, a.real))
    t = Similarity(abs(a), rot, (b.real, b.imag))
    # evaluate with the exact complex factor so endpoints land on the targets
    z = pts[:, 0] + 1j * pts[:, 1]
    z = a * z + b
    return PlanarPath(np.stack([z.real, z.imag], axis=1), t, src, closed=getattr(p, "closed", False))


def curve(B, k=None, seed="v", heading="S", limit=MAX_SEGMENTS):
    """Path of seed after k operations taken from B repeated (all of B if k is None)."""
    ops = tuple(B) if k is None else ops_prefix(B, k)
    return interpret(apply_ops(seed, ops, limit), heading=heading)


def containment_ratio(B, k):
    """Largest distance of the normalised curve from its original unit segment."""
    p = curve(B, k)
    q = normalize(p, (0.0, 0.0), (0.0, 1.0)).points
    x, y = q[:, 0], q[:, 1]
    t = np.clip(y, 0.0, 1.0)
    return float(np.sqrt(x * x + (y - t) ** 2).max())
