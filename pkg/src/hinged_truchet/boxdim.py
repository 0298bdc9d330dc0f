"""Box-counting estimate of the boundary dimension of a fractile.

The fractile is the region enclosed by the closed curve obtained from the
single loop LLLL after k operations.  The curve is rasterised at double
resolution (lattice vertices on even coordinates, edges on the midpoints in
between), the outside is flood-filled, and the boundary is the set of inside
raster cells touching the outside.  Those are folded back onto unit cells
centred on lattice vertices before counting boxes.
"""
import json
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .geometry import interpret
from .lsystem import apply_ops, expand_turns, ops_prefix

SEED = "LLLL"
MIN_DEPTH = 6
MIN_DIAMETER = 32


@dataclass(frozen=True, eq=False)
class CellSet:
    cells: np.ndarray   # (N, 2) unique integer cells
    depth: int = None

    def __len__(self):
        return len(self.cells)

    def shifted(self, d):
        return CellSet(self.cells + np.asarray(d, dtype=np.int64), self.depth)


@dataclass
class BoxDimEstimate:
    slope: float
    r2: float
    sizes: list
    counts: list

    def to_dict(self):
        return {"slope": float("%.15g" % self.slope), "r2": float("%.15g" % self.r2),
                "sizes": list(self.sizes), "counts": list(self.counts)}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def fractile_curve(B, depth):
    return interpret(apply_ops(expand_turns(SEED), ops_prefix(B, depth)))


def fractile_boundary_cells(B, depth):
    if depth < MIN_DEPTH:
        raise ValueError("depth %d is too small for a meaningful fill (need >= %d)"
                         % (depth, MIN_DEPTH))
    return CellSet(boundary_cells_of(fractile_curve(B, depth).points), depth)


def boundary_cells_of(pts):
    """Vertex-centred unit cells on the inside edge of a closed lattice loop."""
    pts = np.asarray(pts, dtype=np.int64)
    lo = pts.min(axis=0)
    D = 2 * (pts - lo) + 2      # two cells of padding all round
    shape = D.max(axis=0) + 3
    wall = np.zeros(shape, dtype=bool)
    wall[D[:, 0], D[:, 1]] = True
    mid = (D[:-1] + D[1:]) // 2
    wall[mid[:, 0], mid[:, 1]] = True
    lab, _ = ndimage.label(~wall)
    outside = lab == lab[0, 0]
    touch = np.zeros_like(outside)
    touch[1:] |= outside[:-1]
    touch[:-1] |= outside[1:]
    touch[:, 1:] |= outside[:, :-1]
    touch[:, :-1] |= outside[:, 1:]
    edge = np.argwhere(~outside & touch)
    Dabs = edge - 2 + 2 * lo
    return np.unique(np.floor_divide(Dabs + 1, 2), axis=0)


def _as_cells(cs):
    if isinstance(cs, CellSet):
        return cs.cells
    return np.asarray(cs, dtype=np.int64).reshape(-1, 2)


def _count(c, size, dense):
    if dense is not None:
        H, W = dense.shape
        # pad up to a multiple of size, then OR-reduce size x size blocks
        ph, pw = -H % size, -W % size
        g = np.pad(dense, ((0, ph), (0, pw)))
        g = g.reshape((H + ph) // size, size, (W + pw) // size, size).any(axis=(1, 3))
        return int(g.sum())
    q = c // size
    return len(np.unique(q[:, 0] * (1 << 32) + q[:, 1]))


def box_dimension(cs):
    """Slope of log N(size) against log(1/size), size = 2**m ... 1.

    Boxes are aligned with the lower-left corner of the set's bounding box,
    m = floor(log2(diameter)) - 2.
    """
    c = _as_cells(cs)
    if len(c) == 0:
        raise ValueError("empty cell set")
    c = c - c.min(axis=0)
    ext = c.max(axis=0) + 1
    diam = int(ext.max())
    if diam < MIN_DIAMETER:
        raise ValueError("cell set spans %d cells; need at least %d for 4 box sizes"
                         % (diam, MIN_DIAMETER))
    m = int(np.floor(np.log2(diam))) - 2
    sizes = [1 << i for i in range(m, -1, -1)]
    dense = None
    if ext[0] * ext[1] <= 1 << 26 and len(c) * 64 > ext[0] * ext[1]:
        # dense sets: count on a boolean raster, duplicates are harmless there
        dense = np.zeros((ext[0], ext[1]), dtype=bool)
        dense[c[:, 0], c[:, 1]] = True
    counts = [_count(c, s, dense) for s in sizes]
    x = np.log(1.0 / np.array(sizes, dtype=float))
    y = np.log(np.array(counts, dtype=float))
    slope, icpt = np.polyfit(x, y, 1)
    res = y - (slope * x + icpt)
    tot = ((y - y.mean()) ** 2).sum()
    r2 = 1.0 - (res ** 2).sum() / tot if tot > 0 else 1.0
    return BoxDimEstimate(float(slope), float(r2), sizes, counts)


def estimate(B, depth):
    return box_dimension(fractile_boundary_cells(B, depth))
