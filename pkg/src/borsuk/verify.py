"""Seeded verification suites for the constructive claims of the method.

Each suite runs ``count`` reproducible instances and records every
failed check together with a payload (child seed plus serialized
inputs) that regenerates the failure. All comparisons are exact except
in the bounds table, whose formulas are floating-point by design.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import jsonio
from .bodies import (
    VPolytope,
    difference_body,
    lift_body,
    lift_set,
    point_set,
    prune_redundant,
    scale_polytope,
)
from .covering import binomial_bound, covering_bound, partition_bound
from .errors import UnknownSuite
from .generators import cube_body, cube_vertices, gen_random_body, gen_random_points, gen_random_polytope
from .metric import distance, gauge, polytope_diameter, set_diameter
from .partition import borsuk_number, doubling_check, verify_partition

SUITES = (
    "difference_norm",
    "lifted_cross",
    "doubling",
    "grunbaum_plane",
    "cube_exact",
    "norm_domination",
    "bounds_table",
)


@dataclass
class VerificationReport:
    suite: str
    count: int
    seed: int
    instances_run: int = 0
    checks_passed: int = 0
    checks_failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checks_failed == 0

    def record(self, ok: bool, payload: dict, check: str):
        if ok:
            self.checks_passed += 1
        else:
            self.checks_failed += 1
            self.failures.append({**payload, "check": check})

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "count": self.count,
            "seed": self.seed,
            "instances_run": self.instances_run,
            "checks_passed": self.checks_passed,
            "checks_failed": self.checks_failed,
            "failures": self.failures,
        }


def _child_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def _suite_difference_norm(report, count, seed):
    """Containment and the three exact diameter identities of the
    difference norm, on random (K, C) pairs normalized to d_C(K) = 1."""
    for i in range(count):
        s = _child_seed(seed, i)
        dim = 2 + (i % 2)
        C = gen_random_body(s, dim, dim + 2, max_numerator=6, max_denominator=4)
        K = gen_random_polytope(s + 1, dim, dim + 3, max_numerator=6, max_denominator=4)
        diam = polytope_diameter(C, K)
        K = scale_polytope(K, Fraction(1) / diam)
        D = difference_body(K)
        payload = {
            "instance_seed": s,
            "dim": dim,
            "body": jsonio.body_to_obj(C),
            "polytope": jsonio.polytope_to_obj(K),
        }
        report.record(all(gauge(C, w) <= 1 for w in D.vertices), payload, "difference_body_inside_unit_ball")
        report.record(
            polytope_diameter(C, VPolytope(dim, D.vertices, pruned=True)) == 2,
            payload,
            "difference_body_diameter_two",
        )
        report.record(polytope_diameter(D, K) == 1, payload, "self_difference_diameter_one")
        report.instances_run += 1


def _suite_lifted_cross(report, count, seed):
    """Within-copy diameters of the two lifted copies equal 1 and every
    cross-copy distance equals 1 exactly, under the lifted difference
    norm."""
    for i in range(count):
        s = _child_seed(seed, i)
        dim = 1 + (i % 3)
        K = gen_random_polytope(s, dim, dim + 2, max_numerator=6, max_denominator=4)
        S = point_set(K.vertices)
        D_up = difference_body(lift_body(K).as_polytope())
        lifted = lift_set(S)
        n = len(S.points)
        payload = {"instance_seed": s, "dim": dim, "polytope": jsonio.polytope_to_obj(K)}
        if n >= 2:
            upper = point_set(lifted.points[:n])
            lower = point_set(lifted.points[n:])
            report.record(set_diameter(D_up, upper)[0] == 1, payload, "upper_copy_diameter_one")
            report.record(set_diameter(D_up, lower)[0] == 1, payload, "lower_copy_diameter_one")
        cross_ok = all(
            distance(D_up, lifted.points[a], lifted.points[n + b]) == 1
            for a in range(n)
            for b in range(n)
        )
        report.record(cross_ok, payload, "cross_copy_distances_one")
        report.instances_run += 1


def _doubling_sizes(i):
    dim = 1 + (i % 3)
    n_points = {1: 4 + (i % 5), 2: 5 + (i % 3), 3: 5 + (i % 2)}[dim]
    return dim, n_points


def _suite_doubling(report, count, seed):
    """Lifting doubles the exact partition number on every instance."""
    for i in range(count):
        s = _child_seed(seed, i)
        dim, n_points = _doubling_sizes(i)
        K = gen_random_polytope(s, dim, n_points, max_numerator=8, max_denominator=4)
        pts = list(K.vertices)
        if i % 4 == 0 and len(pts) >= 2:
            mid = tuple((a + b) / 2 for a, b in zip(pts[0], pts[1]))
            if mid not in pts:
                pts.append(mid)  # interior points keep the span
        S = point_set(pts)
        b1, b2, ok = doubling_check(K, S)
        payload = {
            "instance_seed": s,
            "dim": dim,
            "polytope": jsonio.polytope_to_obj(K),
            "points": jsonio.pointset_to_obj(S),
            "b_base": b1,
            "b_lifted": b2,
        }
        report.record(ok, payload, "lifted_number_is_doubled")
        report.instances_run += 1


def _planar_instance(s: int, i: int):
    """Random polygon plus a point set; every third instance includes the
    polygon's own vertices so the diameter graph has antipodal edges."""
    C = gen_random_body(s, 2, 3 + (i % 4), max_numerator=16, max_denominator=16)
    target = 4 + (i % 9)
    pts: list = []
    if i % 3 == 0:
        pts.extend(C.vertices[: min(len(C.vertices), target)])
    for p in gen_random_points(s + 1, 2, target, max_numerator=16, max_denominator=16).points:
        if len(pts) >= target and pts:
            break
        if p not in pts:
            pts.append(p)
    return C, point_set(pts)


def _suite_grunbaum_plane(report, count, seed):
    """Planar partition numbers never exceed four."""
    for i in range(count):
        s = _child_seed(seed, i)
        C, S = _planar_instance(s, i)
        cert = borsuk_number(C, S)
        payload = {
            "instance_seed": s,
            "body": jsonio.body_to_obj(C),
            "points": jsonio.pointset_to_obj(S),
            "number": cert.number,
        }
        report.record(cert.number <= 4, payload, "planar_number_at_most_four")
        report.record(verify_partition(C, S, cert.partition), payload, "partition_verifies")
        report.instances_run += 1


def _suite_cube_exact(report, count, seed):
    """The cube needs exactly 2^n parts, realized on its vertex set."""
    for n in (2, 3, 4):
        cert = borsuk_number(cube_body(n), cube_vertices(n))
        payload = {"dim": n, "number": cert.number, "expected": 2**n}
        report.record(cert.number == 2**n and cert.optimal, payload, "cube_number_is_2_pow_n")
        report.instances_run += 1


def _suite_norm_domination(report, count, seed):
    """With d_C(S) = 1 the partition number under C is at most the one
    under the difference norm of the hull."""
    for i in range(count):
        s = _child_seed(seed, i)
        dim = 2 + (i % 2)
        C = gen_random_body(s, dim, dim + 2, max_numerator=6, max_denominator=4)
        K = gen_random_polytope(s + 1, dim, dim + 3, max_numerator=6, max_denominator=4)
        diam = polytope_diameter(C, K)
        K = scale_polytope(K, Fraction(1) / diam)
        K = prune_redundant(K)
        D = difference_body(K)
        S = point_set(K.vertices)
        b_ambient = borsuk_number(C, S).number
        b_difference = borsuk_number(D, S).number
        payload = {
            "instance_seed": s,
            "dim": dim,
            "body": jsonio.body_to_obj(C),
            "polytope": jsonio.polytope_to_obj(K),
            "b_ambient": b_ambient,
            "b_difference": b_difference,
        }
        report.record(b_ambient <= b_difference, payload, "ambient_number_dominated")
        report.instances_run += 1


def _suite_bounds_table(report, count, seed):
    """Floating-point identities between the closed-form bounds."""
    for n in range(2, 65):
        payload = {"n": n}
        report.record(
            partition_bound(n).value == covering_bound(n + 1).value / 2.0,
            payload,
            "partition_equals_half_covering_up",
        )
        report.instances_run += 1
    for n in range(3, 64):
        report.record(
            covering_bound(n + 1).value > covering_bound(n).value,
            {"n": n},
            "covering_bound_monotone",
        )
    for n in range(3, 65):
        report.record(
            partition_bound(n).value < binomial_bound(n).value,
            {"n": n},
            "partition_bound_improves_binomial",
        )
    report.record(
        math.isclose(covering_bound(2).value, 42.613074, rel_tol=1e-6),
        {"n": 2},
        "covering_bound_spot_value",
    )


_SUITE_FUNCS = {
    "difference_norm": _suite_difference_norm,
    "lifted_cross": _suite_lifted_cross,
    "doubling": _suite_doubling,
    "grunbaum_plane": _suite_grunbaum_plane,
    "cube_exact": _suite_cube_exact,
    "norm_domination": _suite_norm_domination,
    "bounds_table": _suite_bounds_table,
}


def run_verify_suite(name: str, count: int = 10, seed: int = 0) -> VerificationReport:
    """Run the named suite on ``count`` seeded instances.

    ``cube_exact`` and ``bounds_table`` have fixed instance ranges and
    ignore ``count``. Unknown names raise :class:`UnknownSuite`.
    """
    if name not in _SUITE_FUNCS:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = VerificationReport(name, count, seed)
    _SUITE_FUNCS[name](report, count, seed)
    return report
