#!/usr/bin/env python3
"""Deterministic SVG figures of planar instances.

Draws the unit ball outline, the diameter-graph edges, and the points
colored by partition class. Output bytes are reproducible: running this
script twice produces identical files.
"""

import pathlib

from borsuk import borsuk_number, difference_body, plot2d_svg, point_set, vpolytope
from borsuk.bodies import body_from_vertices

out_dir = pathlib.Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

# Square vertices under the square norm: the complete graph, four parts.
C = body_from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])
S = point_set([(1, 1), (1, -1), (-1, 1), (-1, -1)])
cert = borsuk_number(C, S)
path = out_dir / "square_four_parts.svg"
plot2d_svg(C, S, cert.partition, str(path))
print("wrote", path, f"({cert.number} classes)")

# The triangle under its own difference norm: a 3-colored triangle.
triangle = vpolytope([(0, 0), (1, 0), (0, 1)])
D = difference_body(triangle)
S = point_set(triangle.vertices)
cert = borsuk_number(D, S)
path = out_dir / "triangle_difference_norm.svg"
plot2d_svg(D, S, cert.partition, str(path))
print("wrote", path, f"({cert.number} classes)")
