#!/usr/bin/env python3
"""Exact partition numbers as chromatic numbers of diameter graphs.

A finite set S splits into parts of strictly smaller diameter exactly
when no part contains a pair attaining the diameter, so the minimal
number of parts is the chromatic number of the diameter graph. The
search is exact branch and bound; every answer comes with a partition
certificate and a clique lower bound.
"""

from borsuk import (
    borsuk_number,
    cube_body,
    cube_vertices,
    diameter_graph,
    parallelogram_body,
    point_set,
    verify_partition,
    vpolytope,
)
from borsuk.bodies import difference_body

# Cubes are the extremal bodies: the vertex set of the n-cube under the
# cube norm needs exactly 2^n parts (all pairwise distances equal 2, so
# the diameter graph is complete).
for n in (2, 3, 4):
    cert = borsuk_number(cube_body(n), cube_vertices(n))
    print(f"cube dimension {n}: partition number {cert.number} "
          f"(clique {len(cert.lower_bound_clique)}, optimal={cert.optimal})")

# A non-classical norm: the triangle under its own difference body.
triangle = vpolytope([(0, 0), (1, 0), (0, 1)])
D = difference_body(triangle)
S = point_set(triangle.vertices)
G = diameter_graph(D, S)
print("\ntriangle under its difference norm:")
print("  diameter:", G.diameter, " edges:", G.edges)
cert = borsuk_number(D, S)
print("  partition number:", cert.number)
print("  classes:", cert.partition.classes)
print("  verifies:", verify_partition(D, S, cert.partition))

# In the plane, four parts always suffice, and homothetic parallelogram
# pairs are the only way to need all four.
P = parallelogram_body()
S = point_set(P.vertices)
cert = borsuk_number(P, S)
print("\nparallelogram against itself needs", cert.number, "parts")
