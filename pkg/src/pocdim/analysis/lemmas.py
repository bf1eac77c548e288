"""Executable checks of the corner/region lemmas on concrete 3-partial orders.

Every checker first tests its hypotheses on the given configuration and only
then evaluates the conclusion, returning a three-valued :class:`Verdict`.
The harnesses sample seeded point sets, enumerate every configuration inside
each sample and count how many were non-vacuous.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from ..exactgeom import (
    Apex,
    RegionId,
    arrow,
    corner,
    crossing,
    is_tail_biting,
    leq,
    meet,
    meet_height,
    region_memberships,
)
from ..graphs import Graph
from ..poset import PointSet, competition_graph

DEFAULT_GRID_N = 20


class Verdict(enum.Enum):
    HYPOTHESES_UNMET = "hypotheses-unmet"
    HOLDS = "holds"
    VIOLATION = "VIOLATION"


def _others(k: int) -> tuple[int, int]:
    i, j = [x for x in (1, 2, 3) if x != k]
    return i, j


def in_cone(v: Sequence, q: Sequence, k: int) -> bool:
    return RegionId.cone(k) in region_memberships(v, q)


def diamond_corner_status(v: Sequence, x: Sequence, k: int) -> tuple[bool, bool]:
    """(p_i(x) in R_i(v), p_j(x) in R_j(v)) for the two indices i < j other than k."""
    i, j = _others(k)
    return in_cone(v, corner(x, i), i), in_cone(v, corner(x, j), j)


def _ambient_ok(S: PointSet) -> bool:
    return S.dim == 3 and all(sum(p) > 0 for p in S.points.values())


def _induces(G: Graph, verts: Sequence[str], edges: set[frozenset]) -> bool:
    for a, b in itertools.combinations(verts, 2):
        if G.has_edge(a, b) != (frozenset((a, b)) in edges):
            return False
    return True


def check_diamond_lemma(ambient: PointSet, u: str, v: str, w: str, x: str, k: int,
                        graph: Optional[Graph] = None) -> Verdict:
    """Diamond u,v,w,x missing the edge vx, with (u, v, w) tail-biting of Type k:
    exactly one of p_i(x) in R_i(v), p_j(x) in R_j(v) must hold."""
    if not _ambient_ok(ambient):
        return Verdict.HYPOTHESES_UNMET
    G = graph if graph is not None else competition_graph(ambient)
    want = {frozenset(e) for e in ((u, v), (u, w), (v, w), (u, x), (w, x))}
    if not _induces(G, (u, v, w, x), want):
        return Verdict.HYPOTHESES_UNMET
    P = ambient.points
    if not is_tail_biting([P[u], P[v], P[w]], k):
        return Verdict.HYPOTHESES_UNMET
    a, b = diamond_corner_status(P[v], P[x], k)
    return Verdict.HOLDS if a != b else Verdict.VIOLATION


def hbar_implications(P: dict, t: str, u: str, v: str, w: str, x: str, y: str,
                      k: int) -> list[tuple[bool, bool]]:
    """(antecedent, consequent) of p_i(x) in R_i(u) => p_j(y) in R_j(v) for both (i, j)."""
    i, j = _others(k)
    out = []
    for a, b in ((i, j), (j, i)):
        out.append((in_cone(P[u], corner(P[x], a), a), in_cone(P[v], corner(P[y], b), b)))
    return out


def check_hbar_lemma(ambient: PointSet, t: str, u: str, v: str, w: str, x: str, y: str, k: int,
                     graph: Optional[Graph] = None) -> Verdict:
    if not _ambient_ok(ambient):
        return Verdict.HYPOTHESES_UNMET
    G = graph if graph is not None else competition_graph(ambient)
    want = {frozenset(e) for e in itertools.combinations((t, u, v, w), 2)}
    want |= {frozenset(e) for e in ((x, t), (x, v), (y, u), (y, w))}
    if not _induces(G, (t, u, v, w, x, y), want):
        return Verdict.HYPOTHESES_UNMET
    P = ambient.points
    if not is_tail_biting([P[t], P[u], P[v], P[w]], k):
        return Verdict.HYPOTHESES_UNMET
    ok = all(cons or not ante for ante, cons in hbar_implications(P, t, u, v, w, x, y, k))
    return Verdict.HOLDS if ok else Verdict.VIOLATION


# ----------------------------------------------------------------------------
# sampling
# ----------------------------------------------------------------------------

def grid_apex(rng: random.Random, grid_n: int = DEFAULT_GRID_N) -> Apex:
    """Uniform point of {-N..N}^3 / q, q in {1, 2, 3}, with positive height."""
    while True:
        q = rng.choice((1, 2, 3))
        a = Apex(*(Fraction(rng.randint(-grid_n, grid_n), q) for _ in range(3)))
        if a.height > 0:
            return a


def random_point_set(rng: random.Random, size: int, grid_n: int = DEFAULT_GRID_N,
                     prefix: str = "p") -> PointSet:
    return PointSet(3, {"%s%d" % (prefix, i): grid_apex(rng, grid_n) for i in range(size)})


def with_center_prey(apexes: dict[str, Apex]) -> PointSet:
    """Add one small prey point in the overlap of every openly intersecting pair.

    All prey share a height below every apex height and every overlap height,
    so the competition graph on the apexes is their open-intersection graph.
    """
    pairs = [(a, b) for a, b in itertools.combinations(sorted(apexes), 2)
             if meet_height(apexes[a], apexes[b]) > 0]
    hs = [p.height for p in apexes.values()] + [meet_height(apexes[a], apexes[b]) for a, b in pairs]
    eta = min(hs) / 2
    pts = dict(apexes)
    for a, b in pairs:
        m = meet(apexes[a], apexes[b])
        d = (m.height - eta) / 3
        pts["_%s_%s" % (a, b)] = m.shifted(-d, -d, -d)
    return PointSet(3, pts)


def point_in(rng: random.Random, a: Sequence, fine: int = 12) -> tuple[Fraction, ...]:
    """Random interior point of the triangle with apex a (rational barycentrics)."""
    r = [rng.randint(1, fine) for _ in range(3)]
    s = sum(r)
    h = sum(a)
    return tuple(a[c] - h * Fraction(r[c], s) for c in range(3))


def _float_leq(q: Sequence[float], c: Sequence[float]) -> bool:
    return q[0] <= c[0] and q[1] <= c[1] and q[2] <= c[2]


def sample_point(rng: random.Random, a: Sequence, avoid: Sequence[Sequence] = (),
                 fine: int = 200, tries: int = 200) -> Optional[tuple[Fraction, ...]]:
    """Interior point of triangle a lying outside every closed triangle in ``avoid``.

    Candidates are screened in floating point and the survivor is rebuilt and
    rechecked exactly, so the float screen only affects which points are tried.
    """
    af = [float(c) for c in a]
    hf = sum(af)
    avf = [[float(c) for c in z] for z in avoid]
    h = sum(a)
    for _ in range(tries):
        r = [rng.randint(1, fine) for _ in range(3)]
        s = sum(r)
        qf = [af[c] - hf * r[c] / s for c in range(3)]
        if any(_float_leq(qf, z) for z in avf):
            continue
        q = tuple(a[c] - h * Fraction(r[c], s) for c in range(3))
        if not any(leq(q, z) for z in avoid):
            return q
    return None


def join_apex(rng: random.Random, points: Sequence[Sequence]) -> Apex:
    """Smallest triangle holding the given points of H, padded by a random margin."""
    pad = Fraction(rng.randint(1, 12), 36)
    return Apex(*(max(p[c] for p in points) + pad for c in range(3)))


def with_edge_prey(rng: random.Random, apexes: dict[str, Apex], edges: Sequence[tuple[str, str]],
                   fine: int = 200, tries: int = 200) -> Optional[PointSet]:
    """Add prey so the competition graph on the apexes is exactly ``edges``.

    For each edge ab a point q of H is drawn inside A(a) & A(b) such that the
    triangles whose interior holds q form a clique of the target graph; the
    prey is q lifted slightly off H. All prey share one height, small enough
    that no prey dominates another point. Returns None when some edge finds
    no such spot.
    """
    want = {frozenset(e) for e in edges}
    labels = list(apexes)
    fl = {c: [float(x) for x in apexes[c]] for c in labels}

    def clique(group):
        return all(frozenset(e) in want for e in itertools.combinations(group, 2))

    spots = []
    for a, b in edges:
        m = meet(apexes[a], apexes[b])
        if m.height <= 0:
            return None
        mf = [float(c) for c in m]
        hf = sum(mf)
        for _ in range(tries):
            r = [rng.randint(1, fine) for _ in range(3)]
            s = sum(r)
            qf = [mf[c] - hf * r[c] / s for c in range(3)]
            if not clique([c for c in labels if all(qf[i] < fl[c][i] for i in range(3))]):
                continue
            q = tuple(m[c] - m.height * Fraction(r[c], s) for c in range(3))
            group = [c for c in labels if all(q[i] < apexes[c][i] for i in range(3))]
            if clique(group):
                break
        else:
            return None
        slack = min(apexes[c][i] - q[i] for c in group for i in range(3))
        spots.append(((a, b), q, slack))
    pts: dict[str, Sequence] = dict(apexes)
    if spots:
        # below every slack, and low enough that no prey can dominate an apex
        lift = min([s for _, _, s in spots] + [p.height / 3 for p in apexes.values()]) / 2
        for (a, b), q, _ in spots:
            pts["_%s_%s" % (a, b)] = tuple(c + lift for c in q)
    return PointSet(3, pts)


def tail_biting_run(rng: random.Random, labels: Sequence[str], grid_n: int = DEFAULT_GRID_N) -> dict[str, Apex]:
    """Random Type-k run: each step adds a random positive amount to coordinate k,
    subtracts one from another coordinate and jitters the size a little."""
    k = rng.choice((1, 2, 3))
    d = rng.choice([c for c in (1, 2, 3) if c != k])
    cur = grid_apex(rng, grid_n)
    while cur.height < 6:
        cur = grid_apex(rng, grid_n)
    out = {}
    for lab in labels:
        out[lab] = cur
        h = cur.height
        step = Fraction(rng.randint(1, 6), 12) * h / len(labels)
        wiggle = [Fraction(rng.randint(-2, 2), 24) * h / len(labels) for _ in range(3)]
        vec = list(wiggle)
        vec[k - 1] += step
        vec[d - 1] -= step
        cur = cur.shifted(*vec)
        if cur.height <= 0:
            cur = cur.shifted(1, 1, 1)
    return out


def _permute_to(a: Sequence, k: int) -> Apex:
    # send coordinate 3 to position k, keeping the other two in order
    order = {3: (0, 1, 2), 2: (0, 2, 1), 1: (2, 0, 1)}[k]
    return Apex(*(a[i] for i in order))


def _frac(rng: random.Random, lo: int, hi: int, den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def staircase_run(rng: random.Random, labels: Sequence[str], k: Optional[int] = None) -> tuple[dict[str, Apex], int]:
    """Tail-biting run of Type k with strongly varying triangle sizes.

    Built for k = 3, where coordinates 1 and 2 weakly decrease and coordinate 3
    increases along the run, then the coordinates are permuted.
    """
    k = k or rng.choice((1, 2, 3))
    n = len(labels)
    while True:
        a = [_frac(rng, -3, 3)]
        b = [_frac(rng, -3, 3)]
        for _ in range(n - 1):
            a.append(a[-1] + _frac(rng, 0, 4))
            b.append(b[-1] + _frac(rng, 0, 4))
        a.reverse()
        b.reverse()
        c = [-(a[-1] + b[-1]) + Fraction(rng.randint(1, 12), 4)]
        for _ in range(n - 1):
            c.append(c[-1] + Fraction(rng.randint(1, 16), 4))
        seq = [Apex(a[i], b[i], c[i]) for i in range(n)]
        if all(p.height > 0 for p in seq) and is_tail_biting(seq, 3):
            return {lab: _permute_to(p, k) for lab, p in zip(labels, seq)}, k


# ----------------------------------------------------------------------------
# harnesses
# ----------------------------------------------------------------------------

@dataclass
class HarnessReport:
    name: str
    samples: int = 0
    hypotheses_met: int = 0
    violations: int = 0
    extra: dict = field(default_factory=dict)
    first_violation: Optional[dict] = None

    def as_dict(self) -> dict:
        return asdict(self)

    def merge(self, other: "HarnessReport") -> "HarnessReport":
        extra = dict(self.extra)
        for key, val in other.extra.items():
            extra[key] = extra.get(key, 0) + val
        return HarnessReport(self.name, self.samples + other.samples,
                             self.hypotheses_met + other.hypotheses_met,
                             self.violations + other.violations, extra,
                             self.first_violation or other.first_violation)


def _record(report: HarnessReport, verdict: Verdict, detail: Callable[[], dict]) -> None:
    if verdict is Verdict.HYPOTHESES_UNMET:
        return
    report.hypotheses_met += 1
    if verdict is Verdict.VIOLATION:
        report.violations += 1
        if report.first_violation is None:
            report.first_violation = detail()


def _coords(S: PointSet, labels: Sequence[str]) -> dict:
    return {lab: [str(c) for c in S.points[lab]] for lab in labels}


DIAMOND_EDGES = (("u", "v"), ("u", "w"), ("v", "w"), ("u", "x"), ("w", "x"))


def _diamond_sample(rng: random.Random, grid_n: int) -> PointSet:
    """A plain random point set now and then, otherwise a staircase run (u, v, w)
    plus a pendant x joining a point of A(u) and a point of A(w)."""
    if rng.random() < 0.2:
        return random_point_set(rng, rng.randint(5, 9), grid_n)
    P, _ = staircase_run(rng, ["u", "v", "w"])
    a = sample_point(rng, P["u"], [P["v"]])
    b = sample_point(rng, P["w"], [P["v"]])
    if a is None or b is None:
        return PointSet(3, P)
    P["x"] = join_apex(rng, [a, b])
    return with_edge_prey(rng, P, DIAMOND_EDGES) or PointSet(3, P)


def harness_diamond(samples: int, seed: int = 0, grid_n: int = DEFAULT_GRID_N) -> HarnessReport:
    rng = random.Random(seed)
    rep = HarnessReport("diamond")
    for _ in range(samples):
        S = _diamond_sample(rng, grid_n)
        rep.samples += 1
        G = competition_graph(S)
        for a, b in G.edge_list():
            common = sorted(G.neighbors(a) & G.neighbors(b))
            for c, d in itertools.combinations(common, 2):
                if G.has_edge(c, d):
                    continue
                for (u, w), (v, x), k in itertools.product(((a, b), (b, a)), ((c, d), (d, c)), (1, 2, 3)):
                    verdict = check_diamond_lemma(S, u, v, w, x, k, graph=G)
                    _record(rep, verdict, lambda: {"k": k, "points": _coords(S, (u, v, w, x))})
    return rep


HBAR_EDGES = (("t", "u"), ("t", "v"), ("t", "w"), ("u", "v"), ("u", "w"), ("v", "w"),
              ("x", "t"), ("x", "v"), ("y", "u"), ("y", "w"))


def _hbar_sample(rng: random.Random) -> PointSet:
    """Staircase run (t, u, v, w) with pendants x on t, v and y on u, w.

    A failed construction still yields a (vacuous) sample.
    """
    P, _ = staircase_run(rng, ["t", "u", "v", "w"])
    ends = [sample_point(rng, P["t"], [P["u"], P["w"]]), sample_point(rng, P["v"], [P["u"], P["w"]])]
    if None in ends:
        return PointSet(3, P)
    P["x"] = join_apex(rng, ends)
    ends = [sample_point(rng, P[c], [P["t"], P["v"], P["x"]]) for c in ("u", "w")]
    if None in ends:
        return PointSet(3, P)
    P["y"] = join_apex(rng, ends)
    return with_edge_prey(rng, P, HBAR_EDGES) or PointSet(3, P)


def harness_hbar(samples: int, seed: int = 0) -> HarnessReport:
    rng = random.Random(seed)
    rep = HarnessReport("hbar", extra={"antecedent_true": 0})
    for _ in range(samples):
        S = _hbar_sample(rng)
        rep.samples += 1
        G = competition_graph(S)
        for k in (1, 2, 3):
            verdict = check_hbar_lemma(S, "t", "u", "v", "w", "x", "y", k, graph=G)
            _record(rep, verdict, lambda: {"k": k, "points": _coords(S, "tuvwxy")})
            if verdict is not Verdict.HYPOTHESES_UNMET:
                if any(a for a, _ in hbar_implications(S.points, "t", "u", "v", "w", "x", "y", k)):
                    rep.extra["antecedent_true"] += 1
    return rep


def _open_contained(a: Sequence, b: Sequence, c: Sequence) -> bool:
    """A(a) & A(b) is a subset of A(c)."""
    m = meet(a, b)
    return m.height <= 0 or leq(m, c)


def _induced_paths(G: Graph, length: int) -> Iterator[tuple[str, ...]]:
    """Induced paths with ``length`` edges, each listed once per direction."""
    def extend(path):
        if len(path) == length + 1:
            yield tuple(path)
            return
        last = path[-1]
        for nb in sorted(G.neighbors(last)):
            if nb in path:
                continue
            if any(G.has_edge(nb, p) for p in path[:-1]):
                continue
            yield from extend(path + [nb])
    for v in sorted(G.vertices):
        yield from extend([v])


def _path_sample(rng: random.Random, grid_n: int) -> PointSet:
    """Half plain random point sets, half chains x, u, v, w where each triangle
    joins a point of its predecessor with a random nearby point."""
    if rng.random() < 0.5:
        return random_point_set(rng, rng.randint(6, 10), grid_n)
    small = max(2, grid_n // 4)
    P = {"x": grid_apex(rng, small)}
    for prev, lab in (("x", "u"), ("u", "v"), ("v", "w")):
        inside = sample_point(rng, P[prev], [P[c] for c in P if c != prev]) or point_in(rng, P[prev])
        far = grid_apex(rng, small)
        P[lab] = join_apex(rng, [inside, tuple(c - far.height / 3 for c in far)])
    return with_edge_prey(rng, P, (("x", "u"), ("u", "v"), ("v", "w"))) or PointSet(3, P)


def harness_paths(samples: int, seed: int = 0, grid_n: int = DEFAULT_GRID_N) -> tuple[HarnessReport, HarnessReport]:
    """Induced P3 uvw: neither A(u)&A(v) nor A(v)&A(w) inside the third triangle.
    Induced P4 xuvw: u and v cross."""
    rng = random.Random(seed)
    r3 = HarnessReport("lemma-induced-p3")
    r4 = HarnessReport("lemma-induced-p4")
    for _ in range(samples):
        S = _path_sample(rng, grid_n)
        r3.samples += 1
        r4.samples += 1
        G = competition_graph(S)
        P = S.points
        for u, v, w in _induced_paths(G, 2):
            bad = _open_contained(P[u], P[v], P[w]) or _open_contained(P[v], P[w], P[u])
            _record(r3, Verdict.VIOLATION if bad else Verdict.HOLDS,
                    lambda: {"path": [u, v, w], "points": _coords(S, (u, v, w))})
        for x, u, v, w in _induced_paths(G, 3):
            ok = crossing(P[u], P[v])
            _record(r4, Verdict.HOLDS if ok else Verdict.VIOLATION,
                    lambda: {"path": [x, u, v, w], "points": _coords(S, (x, u, v, w))})
    return r3, r4


def harness_corner(samples: int, seed: int = 0, grid_n: int = DEFAULT_GRID_N) -> HarnessReport:
    """Crossing pairs always have a corner of one triangle inside the other."""
    rng = random.Random(seed)
    rep = HarnessReport("lemma-crossing-corner")
    for _ in range(samples):
        a = grid_apex(rng, grid_n)
        b = grid_apex(rng, max(2, grid_n // 4)).shifted(*(a[c] - a.height / 3 for c in range(3)))
        rep.samples += 1
        if b.height <= 0 or not crossing(a, b):
            continue
        ok = any(leq(corner(x, k), y) for x, y in ((a, b), (b, a)) for k in (1, 2, 3))
        _record(rep, Verdict.HOLDS if ok else Verdict.VIOLATION,
                lambda: {"a": [str(c) for c in a], "b": [str(c) for c in b]})
    return rep


def harness_transitivity(samples: int, seed: int = 0, grid_n: int = DEFAULT_GRID_N) -> HarnessReport:
    """x ->k y, y ->k z and x, z crossing imply x ->k z."""
    rng = random.Random(seed)
    rep = HarnessReport("lemma-transitivity")
    for _ in range(samples):
        rep.samples += 1
        if rng.random() < 0.5:
            run = tail_biting_run(rng, "xyz", grid_n)
            x, y, z = run["x"], run["y"], run["z"]
        else:
            base = grid_apex(rng, grid_n)
            x, y, z = (base.shifted(*(Fraction(rng.randint(-8, 8), 2) for _ in range(3))) for _ in range(3))
        if min(x.height, y.height, z.height) <= 0:
            continue
        for k in (1, 2, 3):
            if not (arrow(x, y, k) and arrow(y, z, k) and crossing(x, z)):
                continue
            ok = arrow(x, z, k)
            _record(rep, Verdict.HOLDS if ok else Verdict.VIOLATION,
                    lambda: {"k": k, "x": [str(c) for c in x], "y": [str(c) for c in y],
                             "z": [str(c) for c in z]})
    return rep
