"""Deterministic SVG 1.1 output for curves, hinged tilings and animations.

Geometry is written in the math frame (y up) inside one flipping group, so
rotations keep their usual sense.  Every number goes out with six decimals.
"""
import colorsys
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import LatticePath, PlanarPath, Similarity
from .tiling import EMPTY, placements_at_angle, scale_at

ARCS = "arcs"
DIAGONALS = "diagonals"
MIDDEFORM = "middeform"
DESIGNS = (ARCS, DIAGONALS, MIDDEFORM)

BASE_PALETTE = ("#000000", "#ff0000", "#008000", "#0000ff")
NEW_TILE_COLOR = "#808080"
OUTLINE_COLOR = "#c0c0c0"


def palette_color(k, palette=BASE_PALETTE):
    if k < len(palette):
        return palette[k]
    # past the fixed colours, walk the hue circle by the golden angle
    h = ((k - len(palette)) * 0.381966011250105) % 1.0
    r, g, b = colorsys.hls_to_rgb(h, 0.45, 0.65)
    return "#%02x%02x%02x" % (round(r * 255), round(g * 255), round(b * 255))


@dataclass(frozen=True)
class RenderStyle:
    # design None draws curves centre to centre; tilings fall back to arcs
    design: str = None
    stroke_width: float = 0.15     # in lattice steps (curves) or tile widths (tilings)
    corner: str = "rounded"
    palette: tuple = BASE_PALETTE
    background: str = None

    def __post_init__(self):
        if self.design is not None and self.design not in DESIGNS:
            raise ValueError("design must be one of %s or None" % ", ".join(DESIGNS))
        if not self.stroke_width > 0:
            raise ValueError("stroke width must be positive")
        if self.corner not in ("rounded", "sharp"):
            raise ValueError("corner must be rounded or sharp")
        if not self.palette:
            raise ValueError("palette must not be empty")

    def color(self, k):
        return palette_color(k, tuple(self.palette))


def fmt(x):
    s = "%.6f" % x
    return "0.000000" if s == "-0.000000" else s


def _pt(p):
    return fmt(p[0]) + " " + fmt(p[1])


def _header(x0, y0, x1, y1, style):
    w, h = x1 - x0, y1 - y0
    m = 0.05 * max(w, h, 1e-9)
    x0, y0, w, h = x0 - m, y0 - m, w + 2 * m, h + 2 * m
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="%s %s %s %s">'
           % (fmt(x0), fmt(-(y0 + h)), fmt(w), fmt(h))]
    if style.background:
        out.append('<rect x="%s" y="%s" width="%s" height="%s" fill="%s"/>'
                   % (fmt(x0), fmt(-(y0 + h)), fmt(w), fmt(h), style.background))
    out.append('<g transform="scale(1 -1)">')
    return out


def _footer():
    return ["</g>", "</svg>", ""]


def _stroke_attrs(style, width):
    if style.corner == "rounded":
        j = 'stroke-linejoin="round" stroke-linecap="round"'
    else:
        j = 'stroke-linejoin="miter" stroke-linecap="butt"'
    return 'fill="none" stroke-width="%s" %s' % (fmt(width), j)


def _as_planar(p):
    if isinstance(p, PlanarPath):
        return p
    if isinstance(p, LatticePath):
        return PlanarPath(p.points.astype(float), Similarity(1.0, 0.0, (0.0, 0.0)), p, p.closed)
    raise TypeError("expected a LatticePath or PlanarPath")


def _corner_piece(m0, z, m1, design):
    """Path command from midpoint m0 around lattice vertex z to midpoint m1."""
    if design == DIAGONALS:
        return "L " + _pt(m1)
    if design == MIDDEFORM:
        c0 = m0 + 0.5 * (z - m0)
        c1 = m1 + 0.5 * (z - m1)
        return "C %s %s %s" % (_pt(c0), _pt(c1), _pt(m1))
    r = float(np.hypot(*(z - m0)))
    d0, d1 = z - m0, m1 - z
    cross = d0[0] * d1[1] - d0[1] * d1[0]
    if abs(cross) < 1e-12:
        return "L " + _pt(m1)
    sweep = 1 if cross > 0 else 0
    return "A %s %s 0 0 %d %s" % (fmt(r), fmt(r), sweep, _pt(m1))


def _curve_d(pts, closed, design):
    if design is None:
        d = "M " + _pt(pts[0]) + "".join(" L " + _pt(p) for p in pts[1:])
        return d[:-len(" L " + _pt(pts[-1]))] + " Z" if closed else d
    mids = 0.5 * (pts[:-1] + pts[1:])
    parts = []
    if closed:
        # corners at every vertex, starting from the midpoint of the last edge
        parts.append("M " + _pt(mids[-1]))
        for k in range(len(mids)):
            parts.append(_corner_piece(mids[k - 1], pts[k], mids[k], design))
        parts.append("Z")
    else:
        parts.append("M " + _pt(pts[0]))
        parts.append("L " + _pt(mids[0]))
        for k in range(1, len(mids)):
            parts.append(_corner_piece(mids[k - 1], pts[k], mids[k], design))
        parts.append("L " + _pt(pts[-1]))
    return " ".join(parts)


def svg_curve(paths, style=RenderStyle()):
    if isinstance(paths, (LatticePath, PlanarPath)):
        paths = [paths]
    paths = [_as_planar(p) for p in paths]
    if not paths:
        raise ValueError("nothing to draw")
    allp = np.concatenate([p.points for p in paths])
    x0, y0 = allp.min(axis=0)
    x1, y1 = allp.max(axis=0)
    out = _header(x0, y0, x1, y1, style)
    for k, p in enumerate(paths):
        width = style.stroke_width * p.transform.scale
        out.append('<path d="%s" stroke="%s" %s/>'
                   % (_curve_d(p.points, p.closed, style.design), style.color(k),
                      _stroke_attrs(style, width)))
    out += _footer()
    return "\n".join(out)


# tile-local arc geometry for orientation 0, in a unit tile centred at 0
_TILE_PATHS = {
    ARCS: "M -0.500000 0.000000 A 0.500000 0.500000 0 0 1 0.000000 0.500000 "
          "M 0.000000 -0.500000 A 0.500000 0.500000 0 0 0 0.500000 0.000000",
    DIAGONALS: "M -0.500000 0.000000 L 0.000000 0.500000 "
               "M 0.000000 -0.500000 L 0.500000 0.000000",
    MIDDEFORM: "M -0.500000 0.000000 C -0.250000 0.000000 0.000000 0.250000 0.000000 0.500000 "
               "M 0.000000 -0.500000 C 0.000000 -0.250000 0.250000 0.000000 0.500000 0.000000",
}


def _tile(center, rotation, scale, code, design, color, style, cls):
    tr = "translate(%s)" % _pt(center)
    if rotation:
        tr += " rotate(%s)" % fmt(rotation)
    if scale != 1.0:
        tr += " scale(%s)" % fmt(scale)
    inner = '<path d="%s" stroke="%s" %s/>' % (
        _TILE_PATHS[design], color, _stroke_attrs(style, style.stroke_width))
    if code:
        inner = '<g transform="rotate(90)">%s</g>' % inner
    return ('<g class="%s" transform="%s"><rect x="-0.500000" y="-0.500000" width="1.000000" '
            'height="1.000000" fill="none" stroke="%s" stroke-width="%s"/>%s</g>'
            % (cls, tr, OUTLINE_COLOR, fmt(style.stroke_width / 3), inner))


def _new_tiles(g, op):
    # tiles added at the old grid vertices, in the old frame
    if g.torus:
        verts = [(i, j) for (i, j) in g.tiles()]
    else:
        verts = [(i, j) for j in range(-1, g.height) for i in range(-1, g.width)]
    rot = -45.0 if op == 0 else 45.0
    out = []
    for i, j in verts:
        code = 1 if g.parity(i, j) == 0 else 0
        out.append(((i + 1.0, j + 1.0), rot, scale_at(45), code))
    return out


def svg_tiling(g, op, theta, style=RenderStyle(), with_new_tiles=False):
    if not 0 <= theta <= 45:
        raise ValueError("hinge angle must lie in [0, 45]")
    design = style.design or ARCS
    out = _header(-0.5, -0.5, g.width + 0.5, g.height + 0.5, style)
    base = style.color(0)
    for (i, j), hp in placements_at_angle(g, op, theta):
        out.append(_tile(hp.center, hp.rotation, hp.scale, int(g.orient[j, i]),
                         design, base, style, "tile"))
    if with_new_tiles:
        for c, rot, sc, code in _new_tiles(g, op):
            out.append(_tile(c, rot, sc, code, design, NEW_TILE_COLOR, style, "new-tile"))
    out += _footer()
    return "\n".join(out)


def animation_frames(g, op, frame_count, style=RenderStyle()):
    if frame_count < 2:
        raise ValueError("need at least two frames")
    frames = []
    for k in range(frame_count):
        theta = 45.0 * k / (frame_count - 1)
        frames.append(svg_tiling(g, op, theta, style, with_new_tiles=(k == frame_count - 1)))
    return frames
