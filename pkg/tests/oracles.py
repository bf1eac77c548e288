"""Independent reference implementations used by the tests.

Nothing here imports the package's predicates: geometry goes through exact
linear solves over the corner points, graph properties through subset
enumeration straight from the definitions.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional, Sequence

# ----------------------------------------------------------------------------
# geometry
# ----------------------------------------------------------------------------


def corner_points(v: Sequence) -> list[tuple[Fraction, ...]]:
    """The three corners written out from their coordinate formulas."""
    v1, v2, v3 = (Fraction(c) for c in v)
    return [(-v2 - v3, v2, v3), (v1, -v1 - v3, v3), (v1, v2, -v1 - v2)]


def solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Exact Gauss-Jordan elimination; unique solution of a consistent system or None."""
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    n = len(rows[0])
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][n] != 0:
            return None
    if len(piv_cols) < n:
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][n]
    return sol


def barycentrics(v: Sequence, q: Sequence) -> list[Fraction]:
    """lambda with q = sum lambda_i p_i and sum lambda_i = 1."""
    P = corner_points(v)
    rows = [[P[0][c], P[1][c], P[2][c]] for c in range(3)] + [[1, 1, 1]]
    sol = solve(rows, list(q) + [1])
    assert sol is not None, "corners are affinely independent for positive height"
    return sol


def bary_closed(v, q) -> bool:
    return all(x >= 0 for x in barycentrics(v, q))


def bary_open(v, q) -> bool:
    return all(x > 0 for x in barycentrics(v, q))


def _alpha_beta(base, a, b, q) -> list[Fraction]:
    # q = base + alpha (a - base) + beta (b - base)
    rows = [[a[c] - base[c], b[c] - base[c]] for c in range(3)]
    sol = solve(rows, [q[c] - base[c] for c in range(3)])
    assert sol is not None
    return sol


def in_slab(v, q, i: int, j: int) -> bool:
    """q = (1 - alpha - beta) p_k + alpha p_i + beta p_j with alpha, beta >= 0, alpha + beta >= 1."""
    k = 6 - i - j
    P = corner_points(v)
    al, be = _alpha_beta(P[k - 1], P[i - 1], P[j - 1], q)
    return al >= 0 and be >= 0 and al + be >= 1


def in_cone(v, q, k: int) -> bool:
    """q = (1 + alpha + beta) p_k - alpha p_i - beta p_j with alpha, beta >= 0."""
    i, j = [x for x in (1, 2, 3) if x != k]
    P = corner_points(v)
    # q - p_k = alpha (p_k - p_i) + beta (p_k - p_j)
    pk, pi, pj = P[k - 1], P[i - 1], P[j - 1]
    rows = [[pk[c] - pi[c], pk[c] - pj[c]] for c in range(3)]
    sol = solve(rows, [q[c] - pk[c] for c in range(3)])
    assert sol is not None
    return sol[0] >= 0 and sol[1] >= 0


def region_names(v, q) -> set[str]:
    out = set()
    if bary_closed(v, q):
        out.add("TRI")
    for k in (1, 2, 3):
        if in_cone(v, q, k):
            out.add("R%d" % k)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        if in_slab(v, q, i, j):
            out.add("R%d%d" % (i, j))
    return out


def random_apex(rng: random.Random, n: int = 6, den=(1, 2, 3)) -> tuple[Fraction, ...]:
    while True:
        d = rng.choice(den)
        v = tuple(Fraction(rng.randint(-n, n), d) for _ in range(3))
        if sum(v) > 0:
            return v


def random_h_point(rng: random.Random, n: int = 8, den=(1, 2, 3)) -> tuple[Fraction, ...]:
    d = rng.choice(den)
    a, b = Fraction(rng.randint(-n, n), d), Fraction(rng.randint(-n, n), d)
    return (a, b, -a - b)


# ----------------------------------------------------------------------------
# graphs (vertex set + set of frozenset edges)
# ----------------------------------------------------------------------------


def _adj(vertices, edges):
    adj = {v: set() for v in vertices}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _connected(verts, adj) -> bool:
    verts = set(verts)
    if not verts:
        return True
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x] & verts:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == verts


def brute_chordal(vertices, edges) -> bool:
    """No induced cycle of length >= 4: no vertex subset of size >= 4 inducing a connected 2-regular graph."""
    adj = _adj(vertices, edges)
    for r in range(4, len(vertices) + 1):
        for sub in itertools.combinations(vertices, r):
            s = set(sub)
            if all(len(adj[x] & s) == 2 for x in sub) and _connected(sub, adj):
                return False
    return True


def brute_diamond_free(vertices, edges) -> bool:
    E = set(edges)
    for sub in itertools.combinations(vertices, 4):
        if sum(frozenset(p) in E for p in itertools.combinations(sub, 2)) == 5:
            return False
    return True


def _two_connected(verts, adj) -> bool:
    if len(verts) < 3 or not _connected(verts, adj):
        return False
    return all(_connected([y for y in verts if y != x], adj) for x in verts)


def brute_block_graph(vertices, edges) -> bool:
    """Every 2-connected induced subgraph is complete (so every block is)."""
    adj = _adj(vertices, edges)
    E = set(edges)
    for r in range(3, len(vertices) + 1):
        for sub in itertools.combinations(vertices, r):
            if _two_connected(sub, adj) and not all(frozenset(p) in E for p in itertools.combinations(sub, 2)):
                return False
    return True


def brute_maximal_cliques(vertices, edges) -> set[frozenset]:
    E = set(edges)
    cliques = []
    for r in range(1, len(vertices) + 1):
        for sub in itertools.combinations(vertices, r):
            if all(frozenset(p) in E for p in itertools.combinations(sub, 2)):
                cliques.append(frozenset(sub))
    return {c for c in cliques if not any(c < d for d in cliques)}


def brute_asteroidal_triple(vertices, edges) -> bool:
    adj = _adj(vertices, edges)

    def joined(a, b, avoid):
        banned = adj[avoid] | {avoid}
        if a in banned or b in banned:
            return False
        allowed = set(vertices) - banned
        return b in _reach(a, adj, allowed)

    for a, b, c in itertools.combinations(vertices, 3):
        if b in adj[a] or c in adj[a] or c in adj[b]:
            continue
        if joined(a, b, c) and joined(a, c, b) and joined(b, c, a):
            return True
    return False


def _reach(s, adj, allowed):
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for y in adj[x] & allowed:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def random_graph(rng: random.Random, n: int, p: float) -> tuple[list[str], set[frozenset]]:
    vs = ["n%d" % i for i in range(n)]
    es = {frozenset(e) for e in itertools.combinations(vs, 2) if rng.random() < p}
    return vs, es


def atlas_graphs(max_order: int = 6):
    """All graphs of order 1..max_order from the networkx atlas, as (vertices, edges)."""
    import networkx as nx

    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= max_order:
            vs = ["n%d" % i for i in g.nodes]
            yield vs, {frozenset(("n%d" % a, "n%d" % b)) for a, b in g.edges}
