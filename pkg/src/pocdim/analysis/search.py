"""Randomised search for triangle representations of small graphs."""

from __future__ import annotations

import itertools
import random
from typing import Optional

from ..builder import Representation, TriangleFamily, find_tail_biting_order, to_partial_order
from ..exactgeom import Apex
from ..graphs import Graph, maximal_cliques

DEFAULT_GRID = 12
RESTART_EVERY = 400


def _mismatch(coords: dict[str, list[int]], G: Graph, pairs: list[tuple[str, str]]) -> int:
    bad = 0
    for v, c in coords.items():
        if c[0] + c[1] + c[2] <= 0:
            bad += 2
    for a, b in pairs:
        ca, cb = coords[a], coords[b]
        touch = min(ca[0], cb[0]) + min(ca[1], cb[1]) + min(ca[2], cb[2]) >= 0
        if touch != G.has_edge(a, b):
            bad += 1
    return bad


def _random_coords(rng: random.Random, labels, grid: int) -> dict[str, list[int]]:
    out = {}
    for v in labels:
        while True:
            c = [rng.randint(-grid, grid) for _ in range(3)]
            if sum(c) > 0:
                break
        out[v] = c
    return out


def search_representation(G: Graph, budget: int = 20000, seed: int = 0,
                          grid: int = DEFAULT_GRID) -> Optional[Representation]:
    """Hill-climb integer apexes until their closed-intersection graph is G.

    Each step nudges one coordinate of one apex and keeps the move unless it
    raises the mismatch count; the search restarts from a fresh random layout
    every few hundred steps without progress. A zero-mismatch layout is handed
    to ``to_partial_order``, whose own postcondition checks the competition
    graph, so anything returned is fully verified.
    """
    rng = random.Random(seed)
    labels = list(G.vertices)
    if not labels:
        return None
    pairs = list(itertools.combinations(labels, 2))
    coords = _random_coords(rng, labels, grid)
    score = _mismatch(coords, G, pairs)
    stale = 0
    steps = 0
    while score > 0 and steps < budget:
        steps += 1
        v = rng.choice(labels)
        i = rng.randrange(3)
        delta = rng.choice((-3, -2, -1, 1, 2, 3))
        coords[v][i] += delta
        new = _mismatch(coords, G, pairs)
        if new <= score:
            stale = 0 if new < score else stale + 1
            score = new
        else:
            coords[v][i] -= delta
            stale += 1
        if stale > RESTART_EVERY:
            coords = _random_coords(rng, labels, grid)
            score = _mismatch(coords, G, pairs)
            stale = 0
    if score > 0:
        return None
    apexes = {v: Apex(*c) for v, c in coords.items()}
    certs = [c for c in (find_tail_biting_order(apexes, C) for C in maximal_cliques(G)) if c]
    family = TriangleFamily(apexes, certs)
    return to_partial_order(family, G)
