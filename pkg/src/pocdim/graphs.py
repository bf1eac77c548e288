"""Undirected labeled graphs, recognition routines and generators.

Everything here is plain Python over string labels.  Outputs that are sets of
vertices are returned as sorted tuples so results are reproducible.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

__all__ = [
    "BlockDecomposition",
    "Graph",
    "Shape",
    "blocks_and_cut_vertices",
    "catalog",
    "find_asteroidal_triple",
    "find_chordless_cycle",
    "gen_gn",
    "gen_hbar",
    "gen_random_block",
    "is_block_graph",
    "is_caterpillar",
    "is_chordal",
    "is_diamond_free",
    "is_interval",
    "is_tree",
    "leaf_clique",
    "match_gn",
    "maximal_cliques",
    "shape",
]

MAX_CLIQUE_SIZE = 5  # cap for gen_random_block


class Graph:
    """Simple undirected graph on string labels. Treated as immutable."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        verts = tuple(str(v) for v in vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        adj: dict[str, set[str]] = {v: set() for v in verts}
        es = set()
        for e in edges:
            a, b = (str(x) for x in e)
            if a == b:
                raise ValueError("loop at %r" % a)
            if a not in adj or b not in adj:
                raise ValueError("edge (%r, %r) uses an undeclared vertex" % (a, b))
            adj[a].add(b)
            adj[b].add(a)
            es.add(frozenset((a, b)))
        self.vertices = verts
        self.edges = frozenset(es)
        self._adj = {v: frozenset(s) for v, s in adj.items()}

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[str]], isolated: Iterable[str] = ()) -> "Graph":
        edges = [tuple(e) for e in edges]
        verts: dict[str, None] = {}
        for e in edges:
            for x in e:
                verts.setdefault(str(x))
        for x in isolated:
            verts.setdefault(str(x))
        return cls(verts, edges)

    @classmethod
    def complete(cls, labels: Iterable[str]) -> "Graph":
        labels = list(labels)
        return cls(labels, itertools.combinations(labels, 2))

    @classmethod
    def path(cls, n: int, prefix: str = "p") -> "Graph":
        labels = ["%s%d" % (prefix, i) for i in range(n)]
        return cls(labels, zip(labels, labels[1:]))

    @classmethod
    def cycle(cls, n: int, prefix: str = "c") -> "Graph":
        labels = ["%s%d" % (prefix, i) for i in range(n)]
        return cls(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self) -> str:
        return "Graph(n=%d, m=%d)" % (len(self.vertices), len(self.edges))

    @property
    def adj(self) -> dict[str, frozenset[str]]:
        return self._adj

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, a: str, b: str) -> bool:
        return b in self._adj.get(a, ())

    def edge_list(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)  # type: ignore[misc]

    def subgraph(self, keep: Iterable[str]) -> "Graph":
        keep = set(keep)
        verts = [v for v in self.vertices if v in keep]
        return Graph(verts, [e for e in self.edges if e <= keep])

    def is_clique(self, vs: Iterable[str]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(vs, 2))

    def relabel(self, mapping: dict[str, str]) -> "Graph":
        return Graph([mapping[v] for v in self.vertices],
                     [(mapping[a], mapping[b]) for a, b in self.edge_list()])

    def disjoint_union(self, other: "Graph") -> "Graph":
        clash = set(self.vertices) & set(other.vertices)
        if clash:
            raise ValueError("labels shared by both graphs: %s" % sorted(clash))
        return Graph(self.vertices + other.vertices, list(self.edges) + list(other.edges))

    def components(self) -> list[tuple[str, ...]]:
        seen: set[str] = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = _bfs_component(self._adj, s, seen)
            out.append(tuple(sorted(comp)))
        return sorted(out)

    def is_connected(self) -> bool:
        return len(self.vertices) <= 1 or len(self.components()) == 1


def _bfs_component(adj, start, seen, banned=frozenset()) -> set:
    comp = {start}
    seen.add(start)
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen and b not in banned:
                seen.add(b)
                comp.add(b)
                queue.append(b)
    return comp


# ----------------------------------------------------------------------------
# chordality
# ----------------------------------------------------------------------------

def _mcs_order(G: Graph) -> list[str]:
    """Maximum cardinality search; returns vertices in visit order."""
    weight = {v: 0 for v in G.vertices}
    unvisited = set(G.vertices)
    order = []
    for _ in range(len(G.vertices)):
        # ties broken by label for determinism
        v = max(sorted(unvisited), key=lambda x: weight[x])
        unvisited.discard(v)
        order.append(v)
        for w in G.neighbors(v):
            if w in unvisited:
                weight[w] += 1
    return order


def _is_peo(G: Graph, peo: list[str]) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in G.neighbors(v) if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = set(later) - {parent}
        if not rest <= G.neighbors(parent):
            return False
    return True


def is_chordal(G: Graph) -> tuple[bool, Optional[list[str]]]:
    """Chordality test; on success also returns a perfect elimination ordering.

    The reverse of a maximum cardinality search order is a PEO exactly when the
    graph is chordal, so we build that candidate and verify it.
    """
    peo = list(reversed(_mcs_order(G)))
    if _is_peo(G, peo):
        return True, peo
    return False, None


def find_chordless_cycle(G: Graph) -> Optional[list[str]]:
    """Return an induced cycle of length >= 4, or None when G is chordal.

    For every induced path a-b-c, look for a shortest a..c path avoiding the
    rest of N[b]. Such a path closes a hole through b, and every hole arises
    this way.
    """
    for b in sorted(G.vertices):
        nb = G.neighbors(b)
        for a, c in itertools.combinations(sorted(nb), 2):
            if G.has_edge(a, c):
                continue
            banned = (nb | {b}) - {a, c}
            prev = {a: None}
            queue = deque([a])
            while queue and c not in prev:
                x = queue.popleft()
                for y in sorted(G.neighbors(x)):
                    if y in banned or y in prev:
                        continue
                    if x == a and y == c:
                        continue
                    prev[y] = x
                    queue.append(y)
            if c in prev:
                path = [c]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return [b] + path[::-1]
    return None


# ----------------------------------------------------------------------------
# diamonds, blocks
# ----------------------------------------------------------------------------

def find_diamond(G: Graph) -> Optional[tuple[str, str, str, str]]:
    """Return (a, b, c, d) inducing K4 - cd, i.e. ab is the shared edge.

    A diamond exists iff some edge has two non-adjacent common neighbours.
    """
    for a, b in G.edge_list():
        common = sorted(G.neighbors(a) & G.neighbors(b))
        for c, d in itertools.combinations(common, 2):
            if not G.has_edge(c, d):
                return a, b, c, d
    return None


def is_diamond_free(G: Graph) -> bool:
    return find_diamond(G) is None


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces, bridges, isolated vertices) and cut vertices."""

    blocks: tuple[tuple[str, ...], ...]
    cut_vertices: frozenset[str] = field(default_factory=frozenset)

    def blocks_containing(self, v: str) -> list[tuple[str, ...]]:
        return [b for b in self.blocks if v in b]


def blocks_and_cut_vertices(G: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan low-link decomposition, iterative to stay off the call stack."""
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    blocks: list[tuple[str, ...]] = []
    cuts: set[str] = set()
    counter = 0
    for root in sorted(G.vertices):
        if root in disc:
            continue
        if not G.neighbors(root):
            disc[root] = low[root] = counter
            counter += 1
            blocks.append((root,))
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[str, str]] = []
        stack = [(root, None, iter(sorted(G.neighbors(root))))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(sorted(G.neighbors(w)))))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp: set[str] = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (parent, u):
                        break
                blocks.append(tuple(sorted(comp)))
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(sorted(blocks)), frozenset(cuts))


def is_block_graph(G: Graph) -> bool:
    return all(G.is_clique(b) for b in blocks_and_cut_vertices(G).blocks)


def leaf_clique(G: Graph) -> tuple[tuple[str, ...], str]:
    """A maximal clique holding exactly one cut vertex, plus that cut vertex.

    Follows the existence argument: take a simplicial vertex of the subgraph
    induced by the cut vertices and inspect the blocks through it.
    """
    dec = blocks_and_cut_vertices(G)
    if not dec.cut_vertices:
        raise ValueError("graph has no cut vertex")
    if not all(G.is_clique(b) for b in dec.blocks):
        raise ValueError("graph is not a block graph")
    H = G.subgraph(dec.cut_vertices)
    for v in sorted(H.vertices):
        if not H.is_clique(H.neighbors(v)):
            continue
        for X in dec.blocks_containing(v):
            if len(dec.cut_vertices.intersection(X)) == 1:
                return X, v
    raise AssertionError("no leaf clique found; block decomposition is inconsistent")


def maximal_cliques(G: Graph) -> list[tuple[str, ...]]:
    chordal, peo = is_chordal(G)
    found: list[frozenset[str]]
    if chordal:
        assert peo is not None
        pos = {v: i for i, v in enumerate(peo)}
        cands = {frozenset({v} | {w for w in G.neighbors(v) if pos[w] > pos[v]}) for v in peo}
        found = [c for c in cands if not any(c < d for d in cands)]
    else:
        found = list(_bron_kerbosch(G))
    return sorted(tuple(sorted(c)) for c in found)


def _bron_kerbosch(G: Graph) -> Iterator[frozenset[str]]:
    adj = G.adj
    stack = [(frozenset(), frozenset(G.vertices), frozenset())]
    while stack:
        R, P, X = stack.pop()
        if not P and not X:
            yield R
            continue
        pivot = max(P | X, key=lambda u: (len(adj[u] & P), u))
        for v in sorted(P - adj[pivot]):
            stack.append((R | {v}, P & adj[v], X & adj[v]))
            P = P - {v}
            X = X | {v}


# ----------------------------------------------------------------------------
# interval graphs, trees, caterpillars
# ----------------------------------------------------------------------------

def find_asteroidal_triple(G: Graph) -> Optional[tuple[str, str, str]]:
    """Three pairwise non-adjacent vertices, each pair joined by a path that
    avoids the closed neighbourhood of the third."""
    verts = sorted(G.vertices)
    comp_of: dict[str, dict[str, int]] = {}
    for x in verts:
        banned = G.neighbors(x) | {x}
        seen: set[str] = set(banned)
        label: dict[str, int] = {}
        cid = 0
        for s in verts:
            if s in seen:
                continue
            for y in _bfs_component(G.adj, s, seen, banned):
                label[y] = cid
            cid += 1
        comp_of[x] = label
    for a, b, c in itertools.combinations(verts, 3):
        if G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c):
            continue
        ca, cb, cc = comp_of[a], comp_of[b], comp_of[c]
        if ca[b] == ca[c] and cb[a] == cb[c] and cc[a] == cc[b]:
            return a, b, c
    return None


def is_interval(G: Graph) -> bool:
    """Lekkerkerker-Boland: chordal and free of asteroidal triples."""
    return is_chordal(G)[0] and find_asteroidal_triple(G) is None


def is_tree(G: Graph) -> bool:
    return len(G.vertices) >= 1 and len(G.edges) == len(G.vertices) - 1 and G.is_connected()


def is_caterpillar(G: Graph) -> bool:
    if not is_tree(G):
        return False
    spine = [v for v in G.vertices if G.degree(v) > 1]
    if len(spine) <= 1:
        return True
    S = G.subgraph(spine)
    return S.is_connected() and all(S.degree(v) <= 2 for v in S.vertices)


class Shape(enum.Enum):
    K1 = "K1"
    COMPLETE = "COMPLETE"
    COMPLETE_PLUS_K1 = "COMPLETE_PLUS_K1"
    CYCLE = "CYCLE>=4"
    TREE = "TREE"
    OTHER = "OTHER"


def shape(G: Graph) -> tuple[Shape, dict]:
    """Coarse structural type used by the dimension classifier.

    Checked in order, so K2 reports COMPLETE rather than TREE.
    """
    n = len(G.vertices)
    if n == 1:
        return Shape.K1, {}
    if n == 0:
        return Shape.OTHER, {}
    if G.is_clique(G.vertices):
        return Shape.COMPLETE, {"n": n}
    isolated = [v for v in G.vertices if G.degree(v) == 0]
    if len(isolated) >= 1:
        rest = [v for v in G.vertices if v != isolated[0]]
        if G.is_clique(rest):
            return Shape.COMPLETE_PLUS_K1, {"t": n - 1}
    if n >= 4 and G.is_connected() and all(G.degree(v) == 2 for v in G.vertices):
        return Shape.CYCLE, {"n": n}
    if is_tree(G):
        return Shape.TREE, {"n": n, "caterpillar": is_caterpillar(G)}
    return Shape.OTHER, {}


# ----------------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------------

def _gn_labels(n: int) -> tuple[list[str], dict[tuple[int, int], str]]:
    sep = "" if n < 10 else "_"
    singles = ["v%d" % i for i in range(1, n + 1)]
    pairs = {(i, j): "v%d%s%d" % (i, sep, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return singles, pairs


def gen_gn(n: int) -> Graph:
    """K_n with a path of length two added between every pair of its vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    singles, pairs = _gn_labels(n)
    edges = list(itertools.combinations(singles, 2))
    for (i, j), lab in pairs.items():
        edges.append((singles[i - 1], lab))
        edges.append((singles[j - 1], lab))
    return Graph(singles + list(pairs.values()), edges)


def match_gn(G: Graph) -> Optional[int]:
    """If G is isomorphic to G_n for some n >= 3 return n, else None."""
    subdiv = [v for v in G.vertices
              if G.degree(v) == 2 and G.is_clique(G.neighbors(v))]
    core = [v for v in G.vertices if v not in set(subdiv)]
    n = len(core)
    if n < 3 or len(subdiv) != n * (n - 1) // 2 or not G.is_clique(core):
        return None
    pairs = {G.neighbors(v) for v in subdiv}
    if len(pairs) != len(subdiv) or any(not p <= set(core) for p in pairs):
        return None
    if len(G.edges) != 3 * n * (n - 1) // 2:
        return None
    return n


def gen_hbar() -> Graph:
    """K4 on t,u,v,w with x joined to t,v and y joined to u,w."""
    k4 = list(itertools.combinations("tuvw", 2))
    return Graph("tuvwxy", k4 + [("x", "t"), ("x", "v"), ("y", "u"), ("y", "w")])


def gen_random_block(n: int, seed: int, new_component_prob: float = 0.1) -> Graph:
    """Seeded random block graph on n vertices grown as a tree of cliques.

    Each step either starts a new component (a clique of 1..5 vertices) or glues
    a clique of total size 2..5 onto a uniformly chosen existing vertex.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    labels = ["b%02d" % i for i in range(n)]
    verts: list[str] = []
    edges: list[tuple[str, str]] = []

    def fresh(k: int) -> list[str]:
        k = min(k, n - len(verts))
        out = labels[len(verts):len(verts) + k]
        verts.extend(out)
        return out

    first = fresh(rng.randint(1, MAX_CLIQUE_SIZE))
    edges.extend(itertools.combinations(first, 2))
    while len(verts) < n:
        if rng.random() < new_component_prob:
            new = fresh(rng.randint(1, MAX_CLIQUE_SIZE))
            edges.extend(itertools.combinations(new, 2))
        else:
            anchor = rng.choice(verts)
            new = fresh(rng.randint(2, MAX_CLIQUE_SIZE) - 1)
            edges.extend(itertools.combinations([anchor] + new, 2))
    return Graph(verts, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    labels = ["t%02d" % i for i in range(n)]
    edges = [(labels[i], labels[rng.randrange(i)]) for i in range(1, n)]
    return Graph(labels, edges)


def spider(legs: int = 3, length: int = 2) -> Graph:
    edges = []
    for a in range(legs):
        prev = "c"
        for b in range(length):
            cur = "l%d_%d" % (a, b)
            edges.append((prev, cur))
            prev = cur
    return Graph.from_edges(edges)


def catalog() -> dict[str, Graph]:
    """Named small graphs used across tests and the CLI."""
    bowtie = Graph("abcdw", [("a", "b"), ("a", "w"), ("b", "w"), ("c", "d"), ("c", "w"), ("d", "w")])
    # bowtie with a pendant path p1-p2-p3 hanging off a; still an interval graph
    bowtie_tail = Graph(
        list(bowtie.vertices) + ["p1", "p2", "p3"],
        list(bowtie.edge_list()) + [("a", "p1"), ("p1", "p2"), ("p2", "p3")],
    )
    # path off b plus a leaf on a: asteroidal triple (c, p1, q), so a non-interval block graph
    bowtie_branches = Graph(
        list(bowtie.vertices) + ["p1", "p2", "p3", "q"],
        list(bowtie.edge_list()) + [("b", "p1"), ("p1", "p2"), ("p2", "p3"), ("a", "q")],
    )
    k5 = ["v1", "v2", "v3", "v4", "v5"]
    k5_edges = [e for e in itertools.combinations(k5, 2) if e not in {("v1", "v2"), ("v3", "v4")}]
    k5_sub = Graph(k5 + ["v6", "v7"],
                   k5_edges + [("v1", "v6"), ("v6", "v2"), ("v3", "v7"), ("v7", "v4")])
    star5 = Graph.from_edges([("c", "l%d" % i) for i in range(5)])
    cat = Graph.from_edges([("s0", "s1"), ("s1", "s2"), ("s0", "a0"), ("s1", "a1"),
                            ("s1", "a2"), ("s2", "a3"), ("s2", "a4")])
    diamond = Graph("abcd", [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    clique_path = Graph.from_edges(
        list(itertools.combinations(["a", "b", "c"], 2))
        + list(itertools.combinations(["c", "d", "e", "f"], 2))
        + [("f", "g")]
    )
    return {
        "K1": Graph(["a"]),
        "K2": Graph.complete("ab"),
        "K3": Graph.complete("abc"),
        "K4": Graph.complete("abcd"),
        "K3+K1": Graph("abcd", [("a", "b"), ("a", "c"), ("b", "c")]),
        "I2": Graph("ab"),
        "P3": Graph.path(3),
        "P4": Graph.path(4),
        "P6": Graph.path(6),
        "C4": Graph.cycle(4),
        "C5": Graph.cycle(5),
        "C6": Graph.cycle(6),
        "star5": star5,
        "caterpillar": cat,
        "spider3": spider(3, 2),
        "bowtie": bowtie,
        "bowtie_tail": bowtie_tail,
        "bowtie_branches": bowtie_branches,
        "clique_path": clique_path,
        "two_components": Graph.complete("abc").disjoint_union(Graph.path(3)),
        "diamond": diamond,
        "hbar": gen_hbar(),
        "G3": gen_gn(3),
        "G4": gen_gn(4),
        "K5_subdivision": k5_sub,
    }
