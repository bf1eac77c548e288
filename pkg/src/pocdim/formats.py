"""JSON (and edge-list text) encodings for every object the CLI reads or writes.

Rationals travel as canonical "num/den" strings, "num" when the denominator
is 1. Every document carries a schema version "v" and a "kind".
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional

from .builder import CliqueCertificate, Representation, TriangleFamily, VerificationReport
from .exactgeom import Apex
from .graphs import Graph
from .poset import PointSet

SCHEMA_VERSION = 1


class FormatError(ValueError):
    """Malformed input document."""


def document(kind: str, **body: Any) -> dict:
    return {"v": SCHEMA_VERSION, "kind": kind, **body}


def rat_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def rat_from(obj: Any) -> Fraction:
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise FormatError("rational must be an integer or a 'num/den' string, got %r" % (obj,))
    try:
        return Fraction(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError("bad rational %r" % (obj,)) from exc


def coords_to_json(p: Iterable) -> list[str]:
    return [rat_to_str(c) for c in p]


def coords_from_json(obj: Any, dim: Optional[int] = None) -> tuple[Fraction, ...]:
    if not isinstance(obj, list):
        raise FormatError("coordinates must be a list")
    t = tuple(rat_from(c) for c in obj)
    if dim is not None and len(t) != dim:
        raise FormatError("expected %d coordinates, got %d" % (dim, len(t)))
    return t


def _check_version(obj: Any) -> dict:
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    v = obj.get("v", SCHEMA_VERSION)
    if v != SCHEMA_VERSION:
        raise FormatError("unsupported schema version %r" % (v,))
    return obj


# ----------------------------------------------------------------------------
# graphs
# ----------------------------------------------------------------------------

def graph_to_json(G: Graph) -> dict:
    return document("graph", vertices=list(G.vertices), edges=[list(e) for e in G.edge_list()])


def graph_from_json(obj: Any) -> Graph:
    obj = _check_version(obj)
    if obj.get("kind") in ("family", "representation") and "graph" in obj:
        obj = obj["graph"]
    if "vertices" not in obj or "edges" not in obj:
        raise FormatError("graph needs 'vertices' and 'edges'")
    try:
        return Graph(obj["vertices"], [tuple(e) for e in obj["edges"]])
    except (TypeError, ValueError) as exc:
        raise FormatError("bad graph: %s" % exc) from exc


def graph_from_text(text: str) -> Graph:
    """Edge-list text: one 'u v' per line, a lone label is an isolated vertex;
    blank lines and '#' comments are skipped."""
    verts: list[str] = []
    edges = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) > 2:
            raise FormatError("line %d: expected 'u v' or a single label" % n)
        for p in parts:
            if p not in verts:
                verts.append(p)
        if len(parts) == 2:
            edges.append((parts[0], parts[1]))
    try:
        return Graph(verts, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_graph(text: str) -> Graph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(parse_json(text))
    return graph_from_text(text)


# ----------------------------------------------------------------------------
# point sets, apexes, families
# ----------------------------------------------------------------------------

def points_to_json(points: Mapping[str, Iterable]) -> dict:
    return {lab: coords_to_json(p) for lab, p in points.items()}


def pointset_to_json(S: PointSet) -> dict:
    return document("pointset", dim=S.dim, points=points_to_json(S.points))


def pointset_from_json(obj: Any) -> PointSet:
    obj = _check_version(obj)
    if "dim" not in obj or "points" not in obj:
        raise FormatError("point set needs 'dim' and 'points'")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise FormatError("bad dimension %r" % (dim,))
    return PointSet(dim, {lab: coords_from_json(c, dim) for lab, c in obj["points"].items()})


def apexes_from_json(obj: Any) -> dict[str, Apex]:
    if not isinstance(obj, dict):
        raise FormatError("apex map must be an object")
    return {lab: Apex.of(coords_from_json(c, 3)) for lab, c in obj.items()}


def certificates_to_json(certs: Iterable[CliqueCertificate]) -> list[dict]:
    return [{"clique": list(c.clique), "order": list(c.order), "type": c.type_k} for c in certs]


def certificates_from_json(obj: Any) -> list[CliqueCertificate]:
    out = []
    for c in obj or []:
        try:
            out.append(CliqueCertificate(tuple(c["clique"]), tuple(c["order"]), int(c["type"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError("bad certificate %r" % (c,)) from exc
    return out


def family_to_json(family: TriangleFamily, G: Optional[Graph] = None) -> dict:
    body: dict = {"family": points_to_json(family.apexes),
                  "certificates": certificates_to_json(family.certificates)}
    if G is not None:
        body["graph"] = graph_to_json(G)
    return document("family", **body)


def family_from_json(obj: Any) -> tuple[TriangleFamily, Optional[Graph]]:
    obj = _check_version(obj)
    if "family" not in obj:
        raise FormatError("document has no 'family'")
    try:
        fam = TriangleFamily(apexes_from_json(obj["family"]), certificates_from_json(obj.get("certificates")))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    G = graph_from_json(obj["graph"]) if "graph" in obj else None
    return fam, G


def representation_to_json(rep: Representation) -> dict:
    """Bundle that also reads as a point set (dim + points)."""
    return document(
        "representation",
        graph=graph_to_json(rep.target),
        family=points_to_json(rep.family.apexes),
        witnesses=points_to_json(rep.witnesses),
        certificates=certificates_to_json(rep.certificates),
        dim=3,
        points=points_to_json(rep.point_set().points),
    )


def representation_from_json(obj: Any) -> Representation:
    obj = _check_version(obj)
    for key in ("graph", "family", "witnesses"):
        if key not in obj:
            raise FormatError("representation needs %r" % key)
    certs = certificates_from_json(obj.get("certificates"))
    fam = TriangleFamily(apexes_from_json(obj["family"]), certs)
    return Representation(fam, apexes_from_json(obj["witnesses"]), graph_from_json(obj["graph"]), tuple(certs))


# ----------------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------------

def dimbound_to_json(b) -> dict:
    return document(
        "dimbound",
        lower=b.lower,
        upper=b.upper if b.upper is not None else "UNKNOWN",
        exact=b.exact,
        reasons=[{"rule": r, "citation": c} for r, c in b.reasons],
        witness=b.witness,
        notes=list(b.notes),
        certificate=representation_to_json(b.certificate) if b.certificate is not None else None,
    )


def harness_to_json(report) -> dict:
    return document("harness", **report.as_dict())


def verification_to_json(report: VerificationReport) -> dict:
    return document("verification", ok=report.ok, intersection_ok=report.intersection_ok,
                cliques_ok=report.cliques_ok, problems=list(report.problems),
                certificates=certificates_to_json(report.certificates))


# ----------------------------------------------------------------------------
# text helpers
# ----------------------------------------------------------------------------

def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON: %s" % exc) from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
