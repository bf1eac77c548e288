"""Partial order competition dimension for recognised graph classes.

The classifier only ever reports what a passing recognition test or a
verified construction backs up; everything else stays UNKNOWN.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..builder import Representation, build_block_representation, to_partial_order, verify_representation
from ..graphs import (
    Graph,
    Shape,
    find_asteroidal_triple,
    find_chordless_cycle,
    is_block_graph,
    is_chordal,
    is_interval,
    match_gn,
    shape,
)
from ..poset import competition_graph, equals_with_isolated
from .search import search_representation

# r(5,5,5) <= r(5, r(5,5)) <= C(51, 4) using r(5,5) <= 48
R555_UPPER = 249900

CITATIONS = {
    "dim0": "dim_poc(G) = 0 exactly when G is K1",
    "dim1": "dim_poc(G) = 1 exactly when G is K_{t+1} or K_t plus an isolated vertex",
    "dim2": "dim_poc(G) = 2 exactly for the other interval graphs",
    "non-interval": "dim_poc(G) <= 2 forces G to be an interval graph, so a non-interval graph has dim_poc >= 3",
    "block": "every block (diamond-free chordal) graph has dim_poc <= 3; certificate built and round-tripped",
    "tree": "trees have dim_poc <= 3, with equality exactly for non-caterpillars",
    "cycle": "cycles of length at least four have dim_poc = 3",
    "gn": "G_n has dim_poc > 3 once n >= r(5,5,5)",
    "search": "a closed-triangle family found by search realises G with isolated witnesses (verified)",
}


@dataclass
class DimBound:
    lower: int
    upper: Optional[int]  # None means unknown
    reasons: list[tuple[str, str]] = field(default_factory=list)
    certificate: Optional[Representation] = None
    notes: list[str] = field(default_factory=list)
    witness: dict = field(default_factory=dict)

    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.upper == self.lower else None

    def cite(self, rule: str) -> None:
        self.reasons.append((rule, CITATIONS[rule]))


def _block_certificate(G: Graph) -> Representation:
    fam = build_block_representation(G)
    report = verify_representation(fam, G)
    if not report.ok:
        raise AssertionError("builder output failed verification: %s" % report.problems)
    rep = to_partial_order(fam, G)
    match = equals_with_isolated(competition_graph(rep.point_set()), G)
    if not (match.ok and match.extra == len(G.edges)):
        raise AssertionError("poset round-trip failed: %s" % match.problem)
    return rep


def _non_interval_witness(G: Graph) -> dict:
    if not is_chordal(G)[0]:
        return {"chordless_cycle": find_chordless_cycle(G)}
    at = find_asteroidal_triple(G)
    if at is None:
        raise AssertionError("non-interval chordal graph without an asteroidal triple")
    return {"asteroidal_triple": list(at)}


def classify_dimension(G: Graph, r555_upper: int = R555_UPPER, certify: bool = True,
                       search_budget: int = 0, seed: int = 0) -> DimBound:
    """Bounds on dim_poc(G) from the recognised cases.

    With ``certify`` off, block graphs still get upper bound 3 but no
    constructed certificate is attached. A positive ``search_budget`` lets
    otherwise unresolved graphs try the heuristic search for an upper bound.
    """
    if not G.vertices:
        raise ValueError("graph has no vertices")
    kind, _ = shape(G)
    if kind is Shape.K1:
        out = DimBound(0, 0)
        out.cite("dim0")
        return out
    if kind in (Shape.COMPLETE, Shape.COMPLETE_PLUS_K1):
        out = DimBound(1, 1)
        out.cite("dim1")
        return out
    if is_interval(G):
        out = DimBound(2, 2)
        out.cite("dim2")
        return out

    out = DimBound(3, None, witness=_non_interval_witness(G))
    out.cite("non-interval")
    if kind is Shape.CYCLE:
        out.upper = 3
        out.cite("cycle")
    if kind is Shape.TREE:
        out.upper = 3
        out.cite("tree")
    if is_block_graph(G):
        out.upper = 3
        out.cite("block")
        if certify:
            out.certificate = _block_certificate(G)
    if out.upper is None and search_budget > 0:
        rep = search_representation(G, budget=search_budget, seed=seed)
        if rep is not None:
            out.upper = 3
            out.certificate = rep
            out.cite("search")
    n = match_gn(G)
    if n is not None:
        out.cite("gn")
        out.notes.append(
            "G is G_%d; dim_poc(G_n) > 3 is only known for n >= r(5,5,5), and r(5,5,5) <= %d, "
            "so nothing beyond the lower bound 3 is claimed here" % (n, r555_upper))
    return out
