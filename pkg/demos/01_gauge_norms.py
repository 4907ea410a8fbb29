#!/usr/bin/env python3
"""Gauge norms of symmetric polytopes: evaluating distances exactly.

A centrally symmetric convex polytope C with the origin in its interior
is the unit ball of a norm: the gauge of x is the least r >= 0 with
x in r*C. This script builds a few unit balls in both vertex and facet
form and evaluates their norms at rational points, exactly.
"""

from fractions import Fraction as F

from borsuk import body_from_facets, body_from_vertices, distance, gauge, point_set, set_diameter

# The square [-1,1]^2 in both representations. Its gauge is the
# max-coordinate norm.
square_v = body_from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])
square_h = body_from_facets([((1, 0), 1), ((0, 1), 1)])

print("square norm of (2, 0)      :", gauge(square_v, (F(2), F(0))))
print("square norm of (1/2, -3/4) :", gauge(square_v, (F(1, 2), F(-3, 4))))
print("facet form agrees          :", gauge(square_h, (F(1, 2), F(-3, 4))))

# The cross-polytope: the sum-of-absolute-values norm.
cross = body_from_vertices([(1, 0), (-1, 0), (0, 1), (0, -1)])
print("\ncross norm of (1, 1)       :", gauge(cross, (F(1), F(1))))

# A hexagon: the difference body of the triangle conv{0, e1, e2}.
# Its norm is not any of the classical ones, and evaluating it solves a
# small exact linear program over the vertices.
hexagon = body_from_vertices([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
print("hexagon norm of (1, 1)     :", gauge(hexagon, (F(1), F(1))))

# Distances are gauges of differences; diameters are exact maxima.
S = point_set([(0, 0), (1, 0), (0, 1), (F(1, 2), F(1, 2))])
print("\ndistance (0,0)-(1,0) in hexagon norm:", distance(hexagon, S.points[0], S.points[1]))
diam, witnesses = set_diameter(hexagon, S)
print("diameter of the set:", diam)
print("attained by point pairs:", witnesses)
