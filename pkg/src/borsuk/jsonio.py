"""JSON wire formats with bit-exact rational round-trips.

All coordinates travel as strings in lowest terms ("p/q", or "p" for
integers), so parse -> serialize -> parse is the identity. Emission is
deterministic: sorted keys, fixed indentation, trailing newline.
"""

from __future__ import annotations

import json

from .bodies import LiftedBody, PointSet, SymmetricBody, VPolytope
from .covering import Covering
from .linalg import format_rational, parse_rational
from .metric import DiameterGraph
from .partition import BorsukCertificate, Partition


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _vec_to_obj(v):
    return [format_rational(c) for c in v]


def _vec_from_obj(coords):
    return tuple(parse_rational(c) for c in coords)


def _freeze(value):
    # labels are opaque JSON; tuples keep parsed sets hashable/immutable
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def polytope_to_obj(K: VPolytope) -> dict:
    return {"dim": K.dim, "vertices": [_vec_to_obj(v) for v in K.vertices]}


def polytope_from_obj(obj) -> VPolytope:
    verts = tuple(_vec_from_obj(v) for v in obj["vertices"])
    return VPolytope(int(obj["dim"]), verts)


def body_to_obj(C: SymmetricBody) -> dict:
    if C.vertices is not None:
        return {"dim": C.dim, "vertices": [_vec_to_obj(v) for v in C.vertices]}
    return {
        "dim": C.dim,
        "facets": [{"a": _vec_to_obj(a), "b": format_rational(b)} for a, b in C.facets],
    }


def body_from_obj(obj) -> SymmetricBody:
    dim = int(obj["dim"])
    if "vertices" in obj:
        return SymmetricBody(dim, vertices=tuple(_vec_from_obj(v) for v in obj["vertices"]))
    facets = tuple(
        (_vec_from_obj(f["a"]), parse_rational(f["b"])) for f in obj["facets"]
    )
    return SymmetricBody(dim, facets=facets)


def pointset_to_obj(S: PointSet) -> dict:
    obj = {"dim": S.dim, "points": [_vec_to_obj(p) for p in S.points]}
    if S.labels is not None:
        obj["labels"] = [list(l) if isinstance(l, tuple) else l for l in S.labels]
    return obj


def pointset_from_obj(obj) -> PointSet:
    points = tuple(_vec_from_obj(p) for p in obj["points"])
    labels = obj.get("labels")
    if labels is not None:
        labels = tuple(_freeze(l) for l in labels)
    return PointSet(int(obj["dim"]), points, labels)


def lifted_body_to_obj(L: LiftedBody) -> dict:
    return {
        "base_dim": L.base_dim,
        "body": body_to_obj(L.body),
        "provenance": polytope_to_obj(L.provenance),
    }


def graph_to_obj(G: DiameterGraph) -> dict:
    return {
        "n_points": G.n_points,
        "diameter": format_rational(G.diameter),
        "edges": [list(e) for e in G.edges],
    }


def graph_from_obj(obj) -> DiameterGraph:
    return DiameterGraph(
        int(obj["n_points"]),
        parse_rational(obj["diameter"]),
        tuple((int(i), int(j)) for i, j in obj["edges"]),
    )


def certificate_to_obj(cert: BorsukCertificate, elapsed: float | None = None) -> dict:
    return {
        "number": cert.number,
        "classes": [list(cls) for cls in cert.partition.classes],
        "clique": list(cert.lower_bound_clique),
        "optimal": cert.optimal,
        "stats": {"nodes": cert.nodes, "time": elapsed},
    }


def partition_from_obj(obj, n_points: int | None = None) -> Partition:
    """Accepts either a bare partition object or a certificate."""
    classes = tuple(tuple(int(i) for i in cls) for cls in obj["classes"])
    if n_points is None:
        n_points = int(obj.get("n_points") or sum(len(c) for c in classes))
    return Partition(n_points, classes)


def covering_to_obj(cov: Covering) -> dict:
    return {
        "ratio": format_rational(cov.ratio),
        "centers": [_vec_to_obj(c) for c in cov.centers],
        "certificate_level": cov.certificate_level,
        "witness_count": len(cov.witnesses),
    }


def parse_rational_point(text: str):
    """Parse a JSON array of rational strings into a point."""
    return _vec_from_obj(json.loads(text))
