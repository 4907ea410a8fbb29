"""Exact polytope types and constructions.

Everything is immutable and carried in rational arithmetic: vertices
are tuples of ``Fraction``. Convexity work (redundancy removal, hull
membership, interior certification) is delegated to the exact simplex
in :mod:`borsuk.lp`, never to floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .errors import DegenerateBody, DimensionMismatch, NotSymmetric
from .linalg import ONE, ZERO, Vec, affine_rank, as_vec, matrix_rank, vadd, vneg

Facet = tuple[Vec, Fraction]  # normal a and offset b, encoding |<a, x>| <= b


@dataclass(frozen=True)
class VPolytope:
    """Convex polytope given by (a superset of) its vertices."""

    dim: int
    vertices: tuple[Vec, ...]
    pruned: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if not self.vertices:
            raise ValueError("a polytope needs at least one vertex")
        for v in self.vertices:
            if len(v) != self.dim:
                raise DimensionMismatch(f"vertex {v} does not have dim {self.dim}")


@dataclass(frozen=True)
class SymmetricBody:
    """Centrally symmetric convex body with the origin interior.

    Exactly one representation is present: ``vertices`` (closed under
    negation) or ``facets`` (pairs |<a, x>| <= b). Instances produced by
    :func:`validate_body` and the constructions below are certified.
    """

    dim: int
    vertices: tuple[Vec, ...] | None = None
    facets: tuple[Facet, ...] | None = None

    def __post_init__(self):
        if (self.vertices is None) == (self.facets is None):
            raise ValueError("exactly one of vertices/facets must be given")
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.vertices is not None:
            for v in self.vertices:
                if len(v) != self.dim:
                    raise DimensionMismatch(f"vertex {v} does not have dim {self.dim}")
        else:
            for a, _ in self.facets:
                if len(a) != self.dim:
                    raise DimensionMismatch(f"facet normal {a} does not have dim {self.dim}")


@dataclass(frozen=True)
class PointSet:
    """Finite labeled set of rational points, pairwise distinct."""

    dim: int
    points: tuple[Vec, ...]
    labels: tuple | None = None

    def __post_init__(self):
        if not self.points:
            raise ValueError("a point set needs at least one point")
        for p in self.points:
            if len(p) != self.dim:
                raise DimensionMismatch(f"point {p} does not have dim {self.dim}")
        if len(set(self.points)) != len(self.points):
            # duplicates would make partition counts bookkeeping artifacts
            raise ValueError("points must be pairwise distinct")
        if self.labels is not None and len(self.labels) != len(self.points):
            raise ValueError("labels must match points one to one")

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class LiftedBody:
    """Symmetric body one dimension up built from a polytope.

    The vertex set is (K x {1}) united with (-K x {-1}); ``provenance``
    keeps the source polytope so partitions of the lifted point set can
    be traced back to it.
    """

    base_dim: int
    body: SymmetricBody
    provenance: VPolytope

    def as_polytope(self) -> VPolytope:
        return VPolytope(self.body.dim, self.body.vertices, pruned=True)


def vpolytope(points, pruned=False) -> VPolytope:
    """Coercing constructor: accepts ints/strings/Fractions as coords."""
    verts = tuple(as_vec(p) for p in points)
    return VPolytope(len(verts[0]), verts, pruned=pruned)


def point_set(points, labels=None) -> PointSet:
    pts = tuple(as_vec(p) for p in points)
    return PointSet(len(pts[0]), pts, tuple(labels) if labels is not None else None)


def body_from_vertices(points) -> SymmetricBody:
    """Build and certify a symmetric body from its vertex list."""
    verts = tuple(as_vec(p) for p in points)
    return validate_body(SymmetricBody(len(verts[0]), vertices=verts))


def body_from_facets(facets) -> SymmetricBody:
    """Build and certify a symmetric body from facet pairs (a, b)."""
    fs = tuple((as_vec(a), Fraction(b)) for a, b in facets)
    return validate_body(SymmetricBody(len(fs[0][0]), facets=fs))


def contains_point(generators: tuple[Vec, ...], x: Vec) -> bool:
    """Exact test whether x lies in the convex hull of the generators."""
    dim = len(x)
    n = len(generators)
    A = [[g[k] for g in generators] for k in range(dim)]
    A.append([ONE] * n)
    b = list(x) + [ONE]
    return lp.solve_min([ZERO] * n, A, b).status == lp.OPTIMAL


def _axis_extent(vertices: tuple[Vec, ...], axis: int) -> Fraction:
    """Largest t with t*e_axis in conv(vertices), by exact LP.

    For a negation-closed vertex set the origin is interior exactly when
    this extent is positive along every axis (the hull then contains a
    small cross-polytope around the origin).
    """
    dim = len(vertices[0])
    n = len(vertices)
    A = []
    for k in range(dim):
        row = [v[k] for v in vertices]
        row.append(-ONE if k == axis else ZERO)
        A.append(row)
    A.append([ONE] * n + [ZERO])
    b = [ZERO] * dim + [ONE]
    res = lp.solve_min([ZERO] * n + [-ONE], A, b)
    if res.status != lp.OPTIMAL:
        return ZERO
    return -res.value


def validate_body(candidate: SymmetricBody) -> SymmetricBody:
    """Certify central symmetry and interiority of the origin.

    Vertex form: the vertex set must be closed under negation, and the
    origin must be interior (checked by one exact LP per axis). Facet
    form: offsets must be strictly positive and the normals must span
    the space, otherwise the "body" is unbounded.
    """
    if candidate.vertices is not None:
        vset = set(candidate.vertices)
        for v in candidate.vertices:
            if vneg(v) not in vset:
                raise NotSymmetric(f"vertex {v} has no mirror {vneg(v)}")
        for axis in range(candidate.dim):
            if _axis_extent(candidate.vertices, axis) <= 0:
                raise DegenerateBody("origin is not interior (body not full-dimensional)")
    else:
        for a, b in candidate.facets:
            if b <= 0:
                raise DegenerateBody(f"facet offset {b} is not strictly positive")
            if all(x == 0 for x in a):
                raise DegenerateBody("zero facet normal")
        if matrix_rank([a for a, _ in candidate.facets]) < candidate.dim:
            raise DegenerateBody("facet normals do not span the space (unbounded)")
    return candidate


def negate(K: VPolytope) -> VPolytope:
    """Reflect a polytope through the origin. Involutive; keeps pruning."""
    return VPolytope(K.dim, tuple(vneg(v) for v in K.vertices), pruned=K.pruned)


def prune_redundant(P: VPolytope) -> VPolytope:
    """Remove every point expressible from the others, via exact LPs.

    Candidates are scanned in sorted order; a point found inside the
    hull of the current survivors is dropped immediately, which never
    changes the hull and shrinks the later LPs. The survivors are
    exactly the extreme points of the hull.
    """
    unique = sorted(set(P.vertices))
    if len(unique) == 1:
        return VPolytope(P.dim, tuple(unique), pruned=True)
    survivors = list(unique)
    idx = 0
    while idx < len(survivors):
        candidate = survivors[idx]
        rest = survivors[:idx] + survivors[idx + 1 :]
        if contains_point(tuple(rest), candidate):
            del survivors[idx]
        else:
            idx += 1
    return VPolytope(P.dim, tuple(survivors), pruned=True)


def minkowski_sum(A: VPolytope, B: VPolytope) -> VPolytope:
    """Pruned hull of all pairwise vertex sums."""
    if A.dim != B.dim:
        raise DimensionMismatch(f"dims {A.dim} and {B.dim} differ")
    sums = {vadd(a, b) for a in A.vertices for b in B.vertices}
    return prune_redundant(VPolytope(A.dim, tuple(sorted(sums))))


def is_full_dimensional(K: VPolytope) -> bool:
    return affine_rank(list(K.vertices)) == K.dim


def difference_body(K: VPolytope) -> SymmetricBody:
    """The centrally symmetric body K - K, as a certified vertex body."""
    if not is_full_dimensional(K):
        raise DegenerateBody("difference body requires a full-dimensional polytope")
    diff = minkowski_sum(K, negate(K))
    return validate_body(SymmetricBody(K.dim, vertices=diff.vertices))


def lift_body(K: VPolytope) -> LiftedBody:
    """Symmetrize K one dimension up: hull of (K, +1) and (-K, -1).

    A lifted point (v, 1) is a convex combination of the other lifted
    points only if all weight sits at height +1, i.e. only if v was
    already redundant in K; so pruning K first makes the lift pruned.
    """
    if not is_full_dimensional(K):
        raise DegenerateBody("lift requires a full-dimensional polytope")
    base = K if K.pruned else prune_redundant(K)
    up = [v + (ONE,) for v in base.vertices]
    down = [vneg(v) + (-ONE,) for v in base.vertices]
    body = validate_body(SymmetricBody(K.dim + 1, vertices=tuple(sorted(up + down))))
    return LiftedBody(base_dim=K.dim, body=body, provenance=K)


def lift_set(S: PointSet) -> PointSet:
    """Two labeled copies one dimension up: (S, +1) and (-S, -1).

    Labels record (source index, sign) so partitions of the lifted set
    can be mapped back to the original indices.
    """
    up = [p + (ONE,) for p in S.points]
    down = [vneg(p) + (-ONE,) for p in S.points]
    labels = [(i, 1) for i in range(len(S.points))] + [(i, -1) for i in range(len(S.points))]
    return PointSet(S.dim + 1, tuple(up + down), tuple(labels))


def scale_polytope(K: VPolytope, t: Fraction) -> VPolytope:
    if t == 0:
        raise ValueError("scale factor must be nonzero")
    return VPolytope(K.dim, tuple(tuple(t * x for x in v) for v in K.vertices), pruned=K.pruned)


def scale_points(S: PointSet, t: Fraction) -> PointSet:
    return PointSet(S.dim, tuple(tuple(t * x for x in p) for p in S.points), S.labels)
