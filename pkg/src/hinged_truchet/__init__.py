"""Hinged Truchet tilings, their L-system curves and boundary sim values."""
__version__ = "0.1.0"

from .lsystem import (Word, Script, WordError, DepthLimitError, apply_op, apply_ops,
                      parse_script, render_script, expand_turns, mirror, ops_prefix)
from .geometry import (LatticePath, PlanarPath, ClosedMismatch, interpret, is_non_crossing,
                       endpoint_distance_and_box, containment_ratio, normalize, curve)
from .tiling import (TilingGrid, HingePlacement, hinge_step, components, placements_at_angle,
                     random_grid, uniform_grid, trace_components, scale_at)
from .boundary import (MarkedPath, DecompositionMatrix, CharPoly, SimValueReport,
                       image_of_segment, image_of_corner, classify_boundary,
                       decomposition_matrix, char_poly, sim_value)
from .boxdim import CellSet, BoxDimEstimate, fractile_boundary_cells, box_dimension
from .render import RenderStyle, svg_curve, svg_tiling, animation_frames
