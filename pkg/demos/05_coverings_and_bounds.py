#!/usr/bin/env python3
"""Covering a body by smaller homothets, and the closed-form bounds.

Covering a set with translates of a shrunk copy immediately partitions
it into pieces of smaller diameter: assign each point to the first
translate containing it. The greedy cover below is witness-certified
(it guarantees coverage of an explicit finite witness set), and the
resulting partition is then verified exactly.

The second half tabulates the closed-form upper bounds: the covering
bound 2^n (n ln n + n ln ln n + 5n), the partition bound obtained from
it one dimension up (exactly half the covering bound at n+1), and the
older binomial-coefficient bound it improves on.
"""

from fractions import Fraction as F

from borsuk import (
    binomial_bound,
    body_from_vertices,
    borsuk_number,
    cover_to_partition,
    covering_bound,
    greedy_cover,
    partition_bound,
    point_set,
    verify_partition,
    vpolytope,
)

K = vpolytope([(0, 0), (1, 0), (0, 1), (1, 1)])  # the unit square
cov = greedy_cover(K, F(3, 5), F(1, 4))
print("covering the unit square by 3/5-scaled copies:")
print("  centers:", [tuple(str(c) for c in ctr) for ctr in cov.centers])
print("  certificate level:", cov.certificate_level)
print("  witnesses covered:", len(cov.witnesses))

# Partition the 3x3 grid through the covering and verify it.
grid = point_set([(F(i, 2), F(j, 2)) for i in range(3) for j in range(3)])
C = body_from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])  # D(unit square)
P = cover_to_partition(grid, cov, C)
print("\ngrid partition classes:", P.classes)
print("verifies (all classes strictly smaller):", verify_partition(C, grid, P))
print("exact partition number of the grid:", borsuk_number(C, grid).number)

print("\nbounds (natural logarithms, double precision):")
print(f"{'n':>3} {'partition':>14} {'covering':>14} {'binomial':>16}")
for n in (2, 3, 4, 8, 16, 32, 64):
    print(
        f"{n:>3} {partition_bound(n).value:>14.2f} "
        f"{covering_bound(n).value:>14.2f} {binomial_bound(n).value:>16.6g}"
    )

print("\nidentity: partition_bound(n) == covering_bound(n+1)/2, exactly:")
print("  n=5:", partition_bound(5).value == covering_bound(6).value / 2)
