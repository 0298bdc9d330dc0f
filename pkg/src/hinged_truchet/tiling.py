"""Truchet tilings on a square grid and the hinge step between them.

Each tile carries two quarter arcs between edge midpoints.  Orientation 0
joins W-N and S-E, orientation 90 joins S-W and E-N.  Tile (i, j) is even when
(i + j + parity_origin) is even.

A toroidal grid is the quotient of the plane by the lattice spanned by
(width, 0) and (shift, height); shift is 0 for ordinary rectangles and only
becomes nonzero after an odd number of hinge steps.
"""
import json
import math
import random
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .lsystem import Word

EMPTY = -1

# new coordinates of an old tile centre, per operation
_MAPS = {
    0: np.array([[1, -1], [1, 1]]),
    1: np.array([[1, 1], [-1, 1]]),
}

# arcs as pairs of sides, sides numbered N, E, S, W
_N, _E, _S, _W = range(4)
ARCS = {
    0: ((_W, _N), (_S, _E)),
    1: ((_S, _W), (_E, _N)),
}


class TilingGrid:
    def __init__(self, orient, torus=False, parity_origin=0, shift=0):
        o = np.array(orient, dtype=np.int8)
        if o.ndim != 2 or o.size == 0:
            raise ValueError("orientations must be a nonempty 2-d array (rows by columns)")
        if not np.isin(o, (EMPTY, 0, 1)).all():
            raise ValueError("orientation codes are 0, 1 or -1 (no tile)")
        self.orient = o  # orient[j, i], 1 means 90 degrees
        self.orient.setflags(write=False)
        self.torus = bool(torus)
        self.parity_origin = int(parity_origin) & 1
        self.shift = int(shift) % o.shape[1] if torus else 0
        if torus and (o == EMPTY).any():
            raise ValueError("toroidal grids cannot have holes")

    @property
    def width(self):
        return self.orient.shape[1]

    @property
    def height(self):
        return self.orient.shape[0]

    def orientation(self, i, j):
        v = int(self.orient[j, i])
        return None if v == EMPTY else 90 * v

    def parity(self, i, j):
        return (i + j + self.parity_origin) % 2

    def tiles(self):
        jj, ii = np.nonzero(self.orient != EMPTY)
        return [(int(i), int(j)) for j, i in zip(jj, ii)]

    @property
    def n_tiles(self):
        return int((self.orient != EMPTY).sum())

    def wrap(self, i, j):
        k = j // self.height
        return (i - k * self.shift) % self.width, j - k * self.height

    def __eq__(self, other):
        return (isinstance(other, TilingGrid) and self.torus == other.torus
                and self.parity_origin == other.parity_origin and self.shift == other.shift
                and np.array_equal(self.orient, other.orient))

    def __repr__(self):
        return "TilingGrid(%dx%d%s%s)" % (self.width, self.height,
                                         ", torus" if self.torus else "",
                                         ", shift=%d" % self.shift if self.shift else "")

    def to_dict(self):
        d = {
            "width": self.width,
            "height": self.height,
            "torus": self.torus,
            "parity_origin": self.parity_origin,
            "orientations": [None if v == EMPTY else 90 * int(v) for v in self.orient.ravel()],
        }
        if self.shift:
            d["shift"] = self.shift
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        w, h = int(d["width"]), int(d["height"])
        vals = [EMPTY if v is None else int(v) // 90 for v in d["orientations"]]
        if len(vals) != w * h:
            raise ValueError("orientation list does not match width*height")
        return cls(np.array(vals).reshape(h, w), d.get("torus", False),
                   d.get("parity_origin", 0), d.get("shift", 0))

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


def uniform_grid(w, h, angle=0, torus=False):
    return TilingGrid(np.full((h, w), angle // 90), torus)


def random_grid(w, h, seed, torus=False):
    """Orientations from random.Random(seed).getrandbits(1), row by row."""
    if w < 1 or h < 1:
        raise ValueError("grid dimensions must be positive")
    rng = random.Random(seed)
    o = np.array([[rng.getrandbits(1) for i in range(w)] for j in range(h)])
    return TilingGrid(o, torus)


def _hnf(b1, b2):
    # reduce a basis of a rank-2 lattice to (W, 0), (s, H) with 0 <= s < W
    r1, r2 = list(b1), list(b2)
    while r2[1] != 0:
        q = r1[1] // r2[1]
        r1 = [r1[0] - q * r2[0], r1[1] - q * r2[1]]
        r1, r2 = r2, r1
    if r1[1] < 0:
        r1 = [-r1[0], -r1[1]]
    W = abs(r2[0])
    H = r1[1]
    if W == 0 or H == 0:
        raise ValueError("degenerate lattice")
    return W, r1[0] % W, H


def hinge_step(g, op):
    """One hinge operation: old tiles become the even tiles of a 45 degree lattice.

    Each old crossing (an old grid vertex, where four tile corners meet)
    becomes a new odd tile.  The new tile at the vertex above and to the right
    of old tile (x, y) gets orientation 90 when (x, y) is even and 0 otherwise;
    old odd tiles turn by 90 degrees relative to the new axes, even ones keep
    their orientation.  Both rules are the same for the two operations; the
    operations differ in which way the axes turn.
    """
    if op not in _MAPS:
        raise ValueError("operation must be 0 or 1")
    A = _MAPS[op]
    tiles = g.tiles()
    old = np.array(tiles, dtype=np.int64)
    old[:, 0] += g.parity_origin  # after this, parity is (x + y) % 2
    par = (old[:, 0] + old[:, 1]) % 2
    codes = np.array([g.orient[j, i] for i, j in tiles], dtype=np.int8)
    old_pos = old @ A.T
    old_code = np.where(par == 1, 1 - codes, codes)

    if g.torus:
        W, s, H = g.width, g.shift, g.height
        if W % 2 or (s + H) % 2:
            raise ValueError("hinging a torus needs even period vectors "
                             "(width and shift+height even); got %s" % g)
        verts = old  # one vertex per old tile, up and to the right of it
    else:
        xs = np.arange(old[:, 0].min() - 1, old[:, 0].max() + 1)
        ys = np.arange(old[:, 1].min() - 1, old[:, 1].max() + 1)
        verts = np.array([(x, y) for y in ys for x in xs], dtype=np.int64)
    vpar = (verts[:, 0] + verts[:, 1]) % 2
    # vertex (x + 1/2, y + 1/2) maps to A (x, y) plus the image of (1/2, 1/2)
    new_pos = verts @ A.T + np.array([0, 1] if op == 0 else [1, 0])
    new_code = np.where(vpar == 0, 1, 0).astype(np.int8)

    pos = np.concatenate([old_pos, new_pos])
    code = np.concatenate([old_code, new_code])

    if g.torus:
        b1 = A @ np.array([W, 0])
        b2 = A @ np.array([s, H])
        W2, s2, H2 = _hnf(b1, b2)
        k = pos[:, 1] // H2
        y = pos[:, 1] - k * H2
        x = (pos[:, 0] - k * s2) % W2
        orient = np.full((H2, W2), EMPTY, dtype=np.int8)
        if len(pos) != W2 * H2:
            raise AssertionError("tile count does not fill the new torus")
        orient[y, x] = code
        if (orient == EMPTY).any():
            raise AssertionError("two tiles landed on the same torus cell")
        # translations here are lattice vectors with even coordinate sum
        return TilingGrid(orient, True, 0, s2)

    lo = pos.min(axis=0)
    pos = pos - lo
    size = pos.max(axis=0) + 1
    orient = np.full((size[1], size[0]), EMPTY, dtype=np.int8)
    orient[pos[:, 1], pos[:, 0]] = code
    return TilingGrid(orient, False, int(lo.sum()) % 2)


def _edge_nodes(g):
    """Node ids of the N, E, S, W edge midpoints of every tile, shape (H, W, 4)."""
    W, H = g.width, g.height
    jj, ii = np.mgrid[0:H, 0:W]
    if g.torus:
        # vertical edge (i, j) is the left side of cell (i, j); horizontal is the bottom
        vid = lambda i, j: j * W + i
        hid = lambda i, j: W * H + j * W + i
        ie = (ii + 1) % W
        top_i, top_j = g.wrap(ii, jj + 1)
        n = hid(top_i, top_j)
        e = vid(ie, jj)
        s = hid(ii, jj)
        w = vid(ii, jj)
        total = 2 * W * H
    else:
        vid = lambda i, j: j * (W + 1) + i
        nv = (W + 1) * H
        hid = lambda i, j: nv + j * W + i
        n = hid(ii, jj + 1)
        e = vid(ii + 1, jj)
        s = hid(ii, jj)
        w = vid(ii, jj)
        total = nv + W * (H + 1)
    return np.stack([n, e, s, w], axis=-1), total


def _arc_pairs(g):
    nodes, total = _edge_nodes(g)
    present = g.orient != EMPTY
    a, b = [], []
    for code, arcs in ARCS.items():
        m = present & (g.orient == code)
        for p, q in arcs:
            a.append(nodes[..., p][m])
            b.append(nodes[..., q][m])
    return np.concatenate(a), np.concatenate(b), total


def components(g):
    """Number of connected strands; on a bounded grid an open strand counts once."""
    a, b, total = _arc_pairs(g)
    if len(a) == 0:
        return 0
    adj = coo_matrix((np.ones(len(a)), (a, b)), shape=(total, total))
    _, labels = connected_components(adj, directed=False)
    used = np.zeros(total, bool)
    used[a] = used[b] = True
    return len(np.unique(labels[used]))


def _partner(code, side):
    for p, q in ARCS[code]:
        if side == p:
            return q
        if side == q:
            return p
    raise AssertionError


_STEP = {_N: (0, 1), _E: (1, 0), _S: (0, -1), _W: (-1, 0)}


def trace_components(g):
    """Every strand of a toroidal grid as a closed word.

    Flow runs into an odd tile across a horizontal line and into an even tile
    across a vertical line; the crossing letter names the line crossed.
    """
    if not g.torus:
        raise ValueError("tracing words needs a toroidal grid")
    seen = set()
    words = []
    for (i, j) in g.tiles():
        for side in range(4):
            if (i, j, side) in seen:
                continue
            # choose the side through which flow enters tile (i, j)
            odd = g.parity(i, j) == 1
            if (side in (_N, _S)) != odd:
                continue
            words.append(_trace_from(g, i, j, side, seen))
    return words


def _trace_from(g, i, j, side, seen):
    out = []
    start = (i, j, side)
    while True:
        seen.add((i, j, side))
        code = int(g.orient[j, i])
        ex = _partner(code, side)
        travel_in = (side + 2) % 4   # heading while entering
        travel_out = ex
        out.append("L" if (travel_out - travel_in) % 4 == 3 else "R")
        out.append("h" if ex in (_N, _S) else "v")
        dx, dy = _STEP[ex]
        i, j = g.wrap(i + dx, j + dy)
        side = (ex + 2) % 4
        # flow rule check: horizontal lines lead into odd tiles
        if (side in (_N, _S)) != (g.parity(i, j) == 1):
            raise AssertionError("flow rule violated while tracing")
        if (i, j, side) == start:
            break
    return Word("".join(out), closed=True)


def scale_at(theta):
    t = math.radians(theta)
    return 1.0 / (math.cos(t) + math.sin(t))


@dataclass(frozen=True)
class HingePlacement:
    center: tuple
    rotation: float
    scale: float


def placements_at_angle(g, op, theta):
    if not 0 <= theta <= 45:
        raise ValueError("hinge angle must lie in [0, 45]")
    if op not in (0, 1):
        raise ValueError("operation must be 0 or 1")
    sc = scale_at(theta)
    out = []
    for (i, j) in g.tiles():
        even = g.parity(i, j) == 0
        # op 0 turns even tiles clockwise
        sign = -1 if even == (op == 0) else 1
        out.append(((i, j), HingePlacement((i + 0.5, j + 0.5), sign * float(theta), sc)))
    return out
