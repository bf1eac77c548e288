"""d-partial orders given by rational point sets and their competition graphs."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional

from .graphs import Graph

__all__ = [
    "Digraph",
    "IsolatedMatch",
    "PointSet",
    "competition_graph",
    "digraph",
    "dominates",
    "equals_with_isolated",
]


class PointSet:
    """Labeled points of R^d. Coordinates are stored as Fractions."""

    __slots__ = ("dim", "points")

    def __init__(self, dim: int, points: Mapping[str, Iterable]):
        if dim < 1:
            raise ValueError("dimension must be positive")
        pts: dict[str, tuple[Fraction, ...]] = {}
        for label, coords in points.items():
            t = tuple(Fraction(c) for c in coords)
            if len(t) != dim:
                raise ValueError("point %r has %d coordinates, expected %d" % (label, len(t), dim))
            pts[str(label)] = t
        self.dim = dim
        self.points = pts

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, label: str) -> tuple[Fraction, ...]:
        return self.points[label]

    def labels(self) -> list[str]:
        return list(self.points)

    def merged(self, other: Mapping[str, Iterable]) -> "PointSet":
        clash = set(self.points) & set(other)
        if clash:
            raise ValueError("duplicate labels: %s" % sorted(clash))
        return PointSet(self.dim, {**self.points, **other})

    def __repr__(self) -> str:
        return "PointSet(dim=%d, n=%d)" % (self.dim, len(self.points))


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[str, ...]
    arcs: frozenset[tuple[str, str]]

    def out_neighbors(self, v: str) -> set[str]:
        return {b for a, b in self.arcs if a == v}


def dominates(x: tuple, v: tuple) -> bool:
    """True iff v precedes x strictly in every coordinate."""
    return all(a < b for a, b in zip(v, x))


def digraph(S: PointSet) -> Digraph:
    """Arc (x, v) whenever v precedes x."""
    arcs = set()
    for x, v in itertools.permutations(S.points, 2):
        if dominates(S.points[x], S.points[v]):
            arcs.add((x, v))
    return Digraph(tuple(S.points), frozenset(arcs))


def _scaled(S: PointSet) -> dict[str, tuple[int, ...]]:
    # a common positive denominator turns every comparison into an int compare
    den = 1
    for t in S.points.values():
        for c in t:
            den = math.lcm(den, c.denominator)
    return {k: tuple(c.numerator * (den // c.denominator) for c in t) for k, t in S.points.items()}


def competition_graph(S: PointSet) -> Graph:
    """Two points are adjacent iff some third point is dominated by both."""
    pts = _scaled(S)
    labels = list(pts)
    edges = set()
    for z in labels:
        pz = pts[z]
        preds = [x for x in labels if x != z and dominates(pts[x], pz)]
        for a, b in itertools.combinations(preds, 2):
            edges.add((a, b))
    return Graph(labels, edges)


class IsolatedMatch(NamedTuple):
    ok: bool
    extra: int
    problem: Optional[str] = None


def equals_with_isolated(C: Graph, G: Graph) -> IsolatedMatch:
    """Is C exactly G plus isolated vertices (matching labels verbatim)?

    ``extra`` counts the vertices of C that are not in G.
    """
    missing = [v for v in G.vertices if v not in C]
    extras = [v for v in C.vertices if v not in G]
    if missing:
        return IsolatedMatch(False, len(extras), "vertex %r of G missing from C" % missing[0])
    for v in sorted(extras):
        if C.degree(v):
            nb = sorted(C.neighbors(v))[0]
            return IsolatedMatch(False, len(extras), "extra vertex %r is adjacent to %r" % (v, nb))
    for a, b in G.edge_list():
        if not C.has_edge(a, b):
            return IsolatedMatch(False, len(extras), "edge %s-%s of G missing from C" % (a, b))
    for a, b in C.edge_list():
        if not G.has_edge(a, b):
            return IsolatedMatch(False, len(extras), "edge %s-%s of C not in G" % (a, b))
    return IsolatedMatch(True, len(extras))
