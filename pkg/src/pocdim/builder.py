"""Triangle representations of block graphs and their conversion to 3-partial orders.

The construction peels leaf cliques off a block graph, lays out the first
clique of every component as a tail-biting run of translates, and re-attaches
each peeled clique as a run of small triangles straddling a free stretch of a
side of the cut vertex's triangle.  ``to_partial_order`` then turns any
closed-triangle family into a point set whose competition graph is the
intersection graph plus one isolated witness per edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .exactgeom import Apex, arrow, height, is_tail_biting, meet, meet_height
from .graphs import Graph, blocks_and_cut_vertices, is_block_graph, leaf_clique, maximal_cliques
from .poset import PointSet, competition_graph, equals_with_isolated

__all__ = [
    "CliqueCertificate",
    "FreeSegment",
    "Representation",
    "TriangleFamily",
    "VerificationReport",
    "build_block_representation",
    "clique_layout",
    "free_side_segment",
    "find_tail_biting_order",
    "intersection_graph",
    "to_partial_order",
    "verify_representation",
]

MAX_SHRINK_STEPS = 12


class CliqueCertificate(NamedTuple):
    clique: tuple[str, ...]
    order: tuple[str, ...]
    type_k: int


class TriangleFamily:
    """Label -> apex map, every apex of positive height."""

    __slots__ = ("apexes", "certificates")

    def __init__(self, apexes: Mapping[str, Iterable], certificates: Iterable[CliqueCertificate] = ()):
        out: dict[str, Apex] = {}
        for label, v in apexes.items():
            a = v if isinstance(v, Apex) else Apex.of(v)
            if a.height <= 0:
                raise ValueError("apex of %r has non-positive height" % label)
            out[str(label)] = a
        self.apexes = out
        self.certificates = tuple(certificates)

    def __len__(self) -> int:
        return len(self.apexes)

    def __getitem__(self, label: str) -> Apex:
        return self.apexes[label]

    def __iter__(self):
        return iter(self.apexes)

    def labels(self) -> list[str]:
        return list(self.apexes)

    def __repr__(self) -> str:
        return "TriangleFamily(n=%d)" % len(self.apexes)


@dataclass(frozen=True)
class Representation:
    family: TriangleFamily  # inflated apexes of the original vertices
    witnesses: dict[str, Apex]
    target: Graph
    certificates: tuple[CliqueCertificate, ...] = ()

    def point_set(self) -> PointSet:
        return PointSet(3, {**self.family.apexes, **self.witnesses})


def intersection_graph(family: TriangleFamily) -> Graph:
    """Closed-intersection graph: uv is an edge iff tri(u) and tri(v) meet."""
    ap = family.apexes
    labels = list(ap)
    edges = [(a, b) for a, b in itertools.combinations(labels, 2) if meet_height(ap[a], ap[b]) >= 0]
    return Graph(labels, edges)


# ----------------------------------------------------------------------------
# layouts
# ----------------------------------------------------------------------------

def _drift(k: int) -> tuple[int, int, int]:
    """Translation direction of a Type-k run: coordinate k up, the next one down."""
    d = k % 3 + 1
    vec = [0, 0, 0]
    vec[k - 1] = 1
    vec[d - 1] = -1
    return tuple(vec)  # type: ignore[return-value]


def clique_layout(labels: Sequence[str], base: Apex, k: int) -> TriangleFamily:
    """Translates of tri(base) forming a consecutively tail-biting run of Type k.

    Step j moves the apex by j * height / (m + 1) along the Type-k drift, so any
    two members overlap in a triangle of positive height and neither contains
    the other.
    """
    if k not in (1, 2, 3):
        raise ValueError("type must be 1, 2 or 3")
    base = Apex.of(base)
    h = base.height
    if h <= 0:
        raise ValueError("base apex must have positive height")
    m = len(labels)
    if m < 1:
        raise ValueError("need at least one label")
    step = h / (m + 1)
    dv = _drift(k)
    seq = [base.shifted(*(j * step * c for c in dv)) for j in range(m)]
    if not is_tail_biting(seq, k):
        raise AssertionError("clique layout failed its tail-biting check")
    cert = CliqueCertificate(tuple(sorted(labels)), tuple(labels), k)
    return TriangleFamily(dict(zip(labels, seq)), [cert])


# ----------------------------------------------------------------------------
# free segments on the sides of a triangle
# ----------------------------------------------------------------------------

class FreeSegment(NamedTuple):
    side: tuple[int, int]
    k: int  # corner opposite the side
    t0: Fraction
    t1: Fraction
    start: tuple
    end: tuple


def _side_point(w: Sequence, k: int, t: Fraction) -> tuple:
    """Point of the side opposite corner k, t=0 at corner j and t=1 at corner i (i<j)."""
    i, j = [x for x in (1, 2, 3) if x != k]
    h = height(w)
    q = list(w)
    q[i - 1] -= t * h
    q[j - 1] -= (1 - t) * h
    return tuple(q)


def _side_gaps(family: TriangleFamily, w: str, k: int) -> list[tuple[Fraction, Fraction]]:
    """Maximal open parameter intervals of the side opposite k not covered by
    any other closed triangle."""
    W = family[w]
    h = W.height
    i, j = [x for x in (1, 2, 3) if x != k]
    covers = []
    for label, Y in family.apexes.items():
        if label == w or Y[k - 1] < W[k - 1]:
            continue
        lo = max(Fraction(0), (W[i - 1] - Y[i - 1]) / h)
        hi = min(Fraction(1), 1 - (W[j - 1] - Y[j - 1]) / h)
        if lo <= hi:
            covers.append((lo, hi))
    covers.sort()
    gaps = []
    pos = Fraction(0)
    for lo, hi in covers:
        if lo > pos:
            gaps.append((pos, lo))
        pos = max(pos, hi)
    if pos < 1:
        gaps.append((pos, Fraction(1)))
    return [(a, b) for a, b in gaps if a < b]


def free_side_segment(family: TriangleFamily, w: str) -> FreeSegment:
    """Longest stretch of a side of tri(w) missed by every other triangle.

    The returned closed segment is the middle half of the widest gap, so it
    keeps a positive distance from all other triangles.
    """
    if family[w].height <= 0:
        raise ValueError("degenerate apex")
    best = None
    for k in (3, 2, 1):
        for a, b in _side_gaps(family, w, k):
            if best is None or b - a > best[2] - best[1]:
                best = (k, a, b)
    if best is None:
        raise ValueError("every side of the triangle of %r is covered; family is corrupted" % w)
    k, a, b = best
    quarter = (b - a) / 4
    t0, t1 = a + quarter, b - quarter
    W = family[w]
    i, j = [x for x in (1, 2, 3) if x != k]
    return FreeSegment((i, j), k, t0, t1, _side_point(W, k, t0), _side_point(W, k, t1))


# ----------------------------------------------------------------------------
# construction
# ----------------------------------------------------------------------------

def _attach(apexes: dict[str, Apex], w: str, new: Sequence[str]) -> CliqueCertificate:
    """Place ``new`` as small triangles crossing the free side of tri(w)."""
    fam = TriangleFamily(apexes)
    seg = free_side_segment(fam, w)
    k = seg.k
    i, j = seg.side
    W = apexes[w]
    mid = tuple((a + b) / 2 for a, b in zip(seg.start, seg.end))
    r = len(new)
    dv = _drift(k)
    others = [Y for lab, Y in apexes.items() if lab != w]
    s = min(W.height, W[i - 1] - mid[i - 1], W[j - 1] - mid[j - 1]) / 2
    for _ in range(200):
        step = s / (r + 1)
        delta = step / 2
        g = (s - delta) / 2
        B = [mid[0] + g, mid[1] + g, mid[2] + g]
        B[k - 1] = W[k - 1] + delta
        seq = [Apex(*(B[c] + t * step * dv[c] for c in range(3))) for t in range(r)]
        hull = Apex(*(max(z[c] for z in seq) for c in range(3)))
        if all(meet_height(hull, Y) < 0 for Y in others):
            break
        s /= 2
    else:
        raise AssertionError("could not shrink attached clique clear of its neighbours")
    full = [W] + seq
    if not is_tail_biting(full, k):
        raise AssertionError("attached clique is not tail-biting")
    for lab, z in zip(new, seq):
        apexes[lab] = z
    order = (w,) + tuple(new)
    return CliqueCertificate(tuple(sorted(order)), order, k)


def _peel_order(G: Graph) -> tuple[tuple[str, ...], list[tuple[tuple[str, ...], str]]]:
    """Repeatedly remove a leaf clique from a connected block graph.

    Returns the surviving clique and the removed (clique, cut vertex) pairs in
    removal order.
    """
    peeled = []
    H = G
    while True:
        dec = blocks_and_cut_vertices(H)
        if not dec.cut_vertices:
            (root,) = dec.blocks
            return root, peeled
        X, w = leaf_clique(H)
        peeled.append((X, w))
        H = H.subgraph(set(H.vertices) - (set(X) - {w}))


def build_block_representation(G: Graph) -> TriangleFamily:
    """Family of homothetic closed triangles whose intersection graph is G and
    in which every maximal clique is consecutively tail-biting."""
    if not is_block_graph(G):
        raise ValueError("input is not a block graph")
    apexes: dict[str, Apex] = {}
    certs: list[CliqueCertificate] = []
    reach = None  # largest first coordinate reached by the triangles so far
    for comp in G.components():
        local: dict[str, Apex] = {}
        root, peeled = _peel_order(G.subgraph(comp))
        first = clique_layout(list(root), Apex(1, 1, 1), 3)
        local.update(first.apexes)
        certs.extend(first.certificates)
        for X, w in reversed(peeled):
            new = [v for v in X if v != w]
            certs.append(_attach(local, w, new))
        # slide the component along (1, -1, 0) so it clears everything placed before
        low = min(a[0] - a.height for a in local.values())
        shift = Fraction(0) if reach is None else reach - low + 1
        for lab, a in local.items():
            apexes[lab] = a.shifted(shift, -shift, 0)
        top = max(a[0] for a in apexes.values())
        reach = top if reach is None else max(reach, top)
    ordered = {v: apexes[v] for v in G.vertices}
    fam = TriangleFamily(ordered, sorted(certs))
    if intersection_graph(fam) != G:
        raise AssertionError("constructed family does not realise the input graph")
    return fam


# ----------------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------------

def find_tail_biting_order(apexes: Mapping[str, Apex], clique: Sequence[str]) -> Optional[CliqueCertificate]:
    """Search every type for an ordering of ``clique`` that is tail-biting.

    For each type the arrow relation restricted to the clique is sorted
    topologically (greedy sources first) and then validated on all pairs.
    """
    clique = tuple(sorted(clique))
    if len(clique) == 1:
        return CliqueCertificate(clique, clique, 1)
    for k in (1, 2, 3):
        remaining = list(clique)
        order = []
        while remaining:
            src = [a for a in remaining
                   if not any(arrow(apexes[b], apexes[a], k) for b in remaining if b != a)]
            if not src:
                break
            order.append(src[0])
            remaining.remove(src[0])
        if remaining:
            continue
        if is_tail_biting([apexes[a] for a in order], k):
            return CliqueCertificate(clique, tuple(order), k)
    return None


@dataclass
class VerificationReport:
    ok: bool
    intersection_ok: bool
    cliques_ok: bool
    problems: list[str] = field(default_factory=list)
    certificates: list[CliqueCertificate] = field(default_factory=list)


def verify_representation(family: TriangleFamily, G: Graph) -> VerificationReport:
    problems = []
    if set(family.labels()) != set(G.vertices):
        problems.append("family labels differ from graph vertices")
        return VerificationReport(False, False, False, problems)
    IG = intersection_graph(family)
    inter_ok = True
    for a, b in G.edge_list():
        if not IG.has_edge(a, b):
            problems.append("edge %s-%s: triangles do not intersect" % (a, b))
            inter_ok = False
            break
    if inter_ok:
        for a, b in IG.edge_list():
            if not G.has_edge(a, b):
                problems.append("non-edge %s-%s: triangles intersect" % (a, b))
                inter_ok = False
                break
    certs = []
    cl_ok = True
    for C in maximal_cliques(G):
        cert = find_tail_biting_order(family.apexes, C)
        if cert is None:
            problems.append("clique %s is not consecutively tail-biting" % (list(C),))
            cl_ok = False
            break
        certs.append(cert)
    return VerificationReport(inter_ok and cl_ok, inter_ok, cl_ok, problems, certs)


# ----------------------------------------------------------------------------
# triangles -> 3-partial order
# ----------------------------------------------------------------------------

def _inflation(ap: Mapping[str, Apex]) -> Fraction:
    gaps = [-meet_height(a, b) for a, b in itertools.combinations(ap.values(), 2)]
    gaps = [g for g in gaps if g > 0]
    return min(gaps) / 6 if gaps else Fraction(1)


def _witness_label(u: str, v: str, taken: set[str]) -> str:
    lab = "z(%s,%s)" % (u, v)
    while lab in taken:
        lab += "'"
    return lab


def to_partial_order(family: TriangleFamily, G: Graph) -> Representation:
    """Point set realising G plus |E(G)| isolated vertices as a competition graph.

    Every apex is pushed up by the same epsilon, which turns touching pairs
    into overlapping ones while keeping disjoint pairs disjoint.  Each edge uv
    then gets a witness at the centre of the overlap, dominated by u and v.
    All witnesses share one small height, so none dominates another and none
    is dominated by an original vertex.
    """
    if intersection_graph(family) != G:
        raise ValueError("family's intersection graph is not G")
    eps = _inflation(family.apexes)
    inflated = {lab: a.shifted(eps, eps, eps) for lab, a in family.apexes.items()}
    meets = {(a, b): meet(inflated[a], inflated[b]) for a, b in G.edge_list()}
    heights = [a.height for a in inflated.values()] + [m.height for m in meets.values()]
    eta = min(heights) / 2 if heights else Fraction(1)
    taken = set(inflated)
    labels = {}
    for a, b in meets:
        labels[(a, b)] = _witness_label(a, b, taken)
        taken.add(labels[(a, b)])
    fam = TriangleFamily(inflated, family.certificates)
    last = None
    for _ in range(MAX_SHRINK_STEPS + 1):
        witnesses = {}
        for e, m in meets.items():
            d = (m.height - eta) / 3
            witnesses[labels[e]] = m.shifted(-d, -d, -d)
        rep = Representation(fam, witnesses, G, family.certificates)
        last = equals_with_isolated(competition_graph(rep.point_set()), G)
        if last.ok and last.extra == len(witnesses):
            return rep
        eta /= 2
    raise RuntimeError("witness placement failed after %d halvings: %s" % (MAX_SHRINK_STEPS, last.problem))
