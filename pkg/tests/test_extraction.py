import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from pocdim.analysis.extraction import (
    BACKWARD,
    FORWARD,
    EdgeColoring,
    all_subsequences_tail_biting,
    crossing_color,
    extract_tail_biting_clique,
    is_tournament,
    mono_clique,
    random_tournament,
    tournament_ham_path,
)
from pocdim.builder import clique_layout
from pocdim.exactgeom import Apex, crossing, is_tail_biting
from pocdim.poset import Digraph, PointSet


def coloring(labels, color):
    c = EdgeColoring(tuple(labels))
    for a, b in itertools.combinations(labels, 2):
        c.color[frozenset((a, b))] = color(a, b)
    return c


def brute_mono(col, m):
    for sub in itertools.combinations(col.base, m):
        if len({col.get(a, b) for a, b in itertools.combinations(sub, 2)}) == 1:
            return True
    return False


def valid_ham_path(T, path):
    return sorted(path) == sorted(T.vertices) and all((a, b) in T.arcs for a, b in zip(path, path[1:]))


# -- crossing colours -------------------------------------------------------

def test_crossing_color_tie_takes_smallest_type():
    x, y = (3, 3, 3), (2, 3, 4)
    # x ->3 y and y ->1 x both hold: corner 3 of y lies in tri(x), corner 1 of x in tri(y)
    assert oracles.bary_closed(x, oracles.corner_points(y)[2])
    assert oracles.bary_closed(y, oracles.corner_points(x)[0])
    assert crossing_color(x, y) == (1, BACKWARD)
    assert crossing_color(y, x) == (1, FORWARD)


def test_crossing_color_single_type():
    seq = clique_layout(["a", "b"], Apex(1, 1, 1), 2)
    assert crossing_color(seq["a"], seq["b"]) == (2, FORWARD)
    assert crossing_color(seq["b"], seq["a"]) == (2, BACKWARD)


def test_crossing_color_rejects_non_crossing():
    with pytest.raises(ValueError):
        crossing_color((1, 1, 1), (2, 2, 2))


@settings(max_examples=200)
@given(st.integers(0, 10**9))
def test_crossing_color_swap_symmetry(seed):
    rng = random.Random(seed)
    base = oracles.random_apex(rng, 4)
    x = Apex.of(base)
    y = x.shifted(*(F(rng.randint(-6, 6), 3) for _ in range(3)))
    if y.height <= 0 or not crossing(x, y):
        return
    k, way = crossing_color(x, y)
    assert crossing_color(y, x) == (k, BACKWARD if way == FORWARD else FORWARD)


# -- monochromatic cliques --------------------------------------------------

def test_mono_all_one_colour():
    col = coloring("abcdef", lambda a, b: 1)
    assert mono_clique(col, 4) == (list("abcd"), 1)


def test_mono_pentagon_pentagram():
    labels = list(range(5))
    col = coloring([str(i) for i in labels], lambda a, b: 1 if (int(a) - int(b)) % 5 in (1, 4) else 2)
    assert not brute_mono(col, 3)
    assert mono_clique(col, 3) is None


def test_mono_k17_three_colours_always_has_triangle():
    rng = random.Random(17)
    labels = ["v%d" % i for i in range(17)]
    for _ in range(50):
        col = coloring(labels, lambda a, b: rng.randint(1, 3))
        assert brute_mono(col, 3)
        members, c = mono_clique(col, 3)
        assert all(col.get(a, b) == c for a, b in itertools.combinations(members, 2))


@settings(max_examples=100)
@given(st.integers(3, 8), st.integers(2, 4), st.integers(0, 10**9))
def test_mono_matches_brute_force(n, m, seed):
    rng = random.Random(seed)
    col = coloring(["v%d" % i for i in range(n)], lambda a, b: rng.randint(1, 3))
    got = mono_clique(col, m)
    assert (got is not None) == brute_mono(col, m)


# -- tournaments ------------------------------------------------------------

def test_transitive_tournament():
    labels = list("abcde")
    T = Digraph(tuple(reversed(labels)), frozenset(itertools.combinations(labels, 2)))
    assert tournament_ham_path(T) == labels


def test_three_cycle():
    T = Digraph(("a", "b", "c"), frozenset({("a", "b"), ("b", "c"), ("c", "a")}))
    valid = [p for p in itertools.permutations("abc") if valid_ham_path(T, list(p))]
    assert len(valid) == 3
    assert tuple(tournament_ham_path(T)) in valid


def test_non_tournament_rejected():
    T = Digraph(("a", "b", "c"), frozenset({("a", "b")}))
    assert not is_tournament(T)
    with pytest.raises(ValueError):
        tournament_ham_path(T)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 120), st.integers(0, 10**9))
def test_random_tournaments(n, seed):
    T = random_tournament(["t%d" % i for i in range(n)], random.Random(seed))
    assert is_tournament(T)
    assert valid_ham_path(T, tournament_ham_path(T))


# -- full pipeline ----------------------------------------------------------

# translates along the Type-3 drift are also Type-1 tail-biting in reverse,
# and the smallest-type tie-break reports that
@pytest.mark.parametrize("k,reported,reverse", [(1, 1, False), (2, 2, False), (3, 1, True)])
def test_extract_from_layout(k, reported, reverse):
    labels = ["a%d" % i for i in range(6)]
    fam = clique_layout(labels, Apex(1, 1, 1), k)
    seq, kk = extract_tail_biting_clique(PointSet(3, fam.apexes), 4)
    assert kk == reported and len(seq) == 4
    assert all_subsequences_tail_biting([fam[a] for a in seq], kk)
    assert seq == sorted(seq, key=labels.index, reverse=reverse)


def test_extract_pair_any_colours():
    # three pairwise crossing triangles
    S = PointSet(3, {"x": (3, 3, 3), "y": (2, 3, 4), "z": (4, 2, 3)})
    seq, k = extract_tail_biting_clique(S, 2)
    assert is_tail_biting([S[a] for a in seq], k)


def test_extract_mixed_too_large_returns_none():
    S = PointSet(3, {"x": (3, -3, 5), "y": (0, 4, 4), "z": (5, 0, 2)})
    pts = {a: Apex.of(S[a]) for a in "xyz"}
    col = EdgeColoring.from_points(pts, list("xyz"))
    assert set(col.color.values()) == {1, 2, 3} and not brute_mono(col, 3)
    assert extract_tail_biting_clique(S, 3) is None


def test_extract_mixed_family():
    # a Type-1 run with a short Type-3 run laid over it, so colours mix
    a = clique_layout(["a%d" % i for i in range(5)], Apex(1, 1, 1), 1)
    b = clique_layout(["b%d" % i for i in range(2)], Apex(F(3, 2), F(1, 2), 1), 3)
    pts = {**a.apexes, **b.apexes}
    col = EdgeColoring.from_points(pts, ["a0", "a1", "a2", "a3", "a4", "b1"])
    assert set(col.color.values()) == {1, 3}
    seq_k = extract_tail_biting_clique(PointSet(3, pts), 4)
    assert seq_k is not None
    seq, k = seq_k
    assert all_subsequences_tail_biting([pts[x] for x in seq], k)


def test_extract_validation():
    with pytest.raises(ValueError):
        extract_tail_biting_clique(PointSet(2, {"a": (1, 1)}), 2)
    with pytest.raises(ValueError):
        extract_tail_biting_clique(PointSet(3, {"a": (1, 1, -3)}), 2)
    with pytest.raises(ValueError):
        mono_clique(coloring("ab", lambda a, b: 1), 1)
