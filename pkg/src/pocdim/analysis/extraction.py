"""Colouring crossing pairs by arrow type, monochromatic cliques, tournaments.

Together these turn a pairwise-crossing point set into a tail-biting sequence
whenever a monochromatic clique of the requested size exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ..exactgeom import Apex, arrow, crossing, is_tail_biting
from ..graphs import Graph, maximal_cliques
from ..poset import Digraph, PointSet

FORWARD = "forward"
BACKWARD = "backward"


def crossing_color(x: Sequence, y: Sequence) -> tuple[int, str]:
    """Smallest k with x ->k y or y ->k x, and which way the arrow points."""
    if not crossing(x, y):
        raise ValueError("points are not crossing")
    for k in (1, 2, 3):
        if arrow(x, y, k):
            return k, FORWARD
        if arrow(y, x, k):
            return k, BACKWARD
    raise AssertionError("crossing pair without a corner inside the other triangle")


@dataclass
class EdgeColoring:
    base: tuple[str, ...]
    color: dict[frozenset, int] = field(default_factory=dict)
    direction: dict[frozenset, tuple[str, str]] = field(default_factory=dict)

    def get(self, a: str, b: str) -> int:
        return self.color[frozenset((a, b))]

    @classmethod
    def from_points(cls, points: dict[str, Apex], labels: Sequence[str]) -> "EdgeColoring":
        col = cls(tuple(labels))
        for a, b in itertools.combinations(labels, 2):
            k, way = crossing_color(points[a], points[b])
            key = frozenset((a, b))
            col.color[key] = k
            col.direction[key] = (a, b) if way == FORWARD else (b, a)
        return col


def mono_clique(coloring: EdgeColoring, m: int) -> Optional[tuple[list[str], int]]:
    """Backtracking search for m base vertices with all pairs one colour."""
    if m < 2:
        raise ValueError("m must be at least 2")
    base = list(coloring.base)
    colors = sorted(set(coloring.color.values()))
    for c in colors:
        nbr = {a: {b for b in base if b != a and coloring.color.get(frozenset((a, b))) == c} for a in base}

        def grow(chosen: list[str], cands: list[str]) -> Optional[list[str]]:
            if len(chosen) == m:
                return chosen
            if len(chosen) + len(cands) < m:
                return None
            for idx, v in enumerate(cands):
                rest = [w for w in cands[idx + 1:] if w in nbr[v]]
                got = grow(chosen + [v], rest)
                if got:
                    return got
            return None

        found = grow([], base)
        if found:
            return found, c
    return None


def is_tournament(T: Digraph) -> bool:
    verts = set(T.vertices)
    seen = set()
    for a, b in T.arcs:
        if a == b or a not in verts or b not in verts:
            return False
        key = frozenset((a, b))
        if key in seen:
            return False
        seen.add(key)
    n = len(verts)
    return len(seen) == n * (n - 1) // 2


def tournament_ham_path(T: Digraph) -> list[str]:
    """Directed Hamiltonian path by insertion: each vertex goes just before the
    first path vertex it beats."""
    if not is_tournament(T):
        raise ValueError("not a tournament")
    arcs = T.arcs
    path: list[str] = []
    for v in T.vertices:
        for i, p in enumerate(path):
            if (v, p) in arcs:
                path.insert(i, v)
                break
        else:
            path.append(v)
    return path


def crossing_clique(points: dict[str, Apex]) -> list[str]:
    """Largest pairwise-crossing subset (ties broken lexicographically)."""
    labels = sorted(points)
    G = Graph(labels, [(a, b) for a, b in itertools.combinations(labels, 2)
                       if crossing(points[a], points[b])])
    return list(max(maximal_cliques(G), key=len))


def all_subsequences_tail_biting(seq: Sequence[Sequence], k: int) -> bool:
    n = len(seq)
    for size in range(2, n + 1):
        for idx in itertools.combinations(range(n), size):
            if not is_tail_biting([seq[i] for i in idx], k):
                return False
    return True


def extract_tail_biting_clique(S: PointSet, m: int) -> Optional[tuple[list[str], int]]:
    """Colour the crossing pairs, find a monochromatic K_m, orient it by the
    arrows and read off a Hamiltonian path; the path is tail-biting."""
    if S.dim != 3:
        raise ValueError("need a point set in R^3")
    points = {lab: Apex.of(c) for lab, c in S.points.items()}
    if any(p.height <= 0 for p in points.values()):
        raise ValueError("all points must have positive height")
    labels = crossing_clique(points)
    if len(labels) < m:
        return None
    coloring = EdgeColoring.from_points(points, labels)
    found = mono_clique(coloring, m)
    if found is None:
        return None
    members, k = found
    arcs = frozenset(coloring.direction[frozenset(e)] for e in itertools.combinations(members, 2))
    seq = tournament_ham_path(Digraph(tuple(members), arcs))
    if not all_subsequences_tail_biting([points[a] for a in seq], k):
        raise AssertionError("extracted sequence is not tail-biting")
    return seq, k


def random_tournament(labels: Iterable[str], rng) -> Digraph:
    labels = list(labels)
    arcs = set()
    for a, b in itertools.combinations(labels, 2):
        arcs.add((a, b) if rng.random() < 0.5 else (b, a))
    return Digraph(tuple(labels), frozenset(arcs))
