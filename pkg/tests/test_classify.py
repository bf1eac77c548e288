import itertools
import math

import pytest

from oracles import brute_asteroidal_triple, brute_chordal
from pocdim.analysis import R555_UPPER, classify_dimension
from pocdim.graphs import Graph, catalog, gen_gn, gen_random_block, gen_random_tree, is_caterpillar, spider
from pocdim.poset import competition_graph, equals_with_isolated


def exact(G, **kw):
    return classify_dimension(G, **kw).exact


def test_ramsey_bound_value():
    # r(5,5,5) <= r(5, r(5,5)) <= C(r(5,5) + 3, 4) with r(5,5) <= 48
    assert R555_UPPER == math.comb(48 + 3, 4) == 249900


def test_k1():
    b = classify_dimension(Graph(["a"]))
    assert (b.lower, b.upper, b.exact) == (0, 0, 0)
    assert b.reasons[0][0] == "dim0"


@pytest.mark.parametrize("G", [Graph.complete("abcd"), Graph("abcd", [("a", "b"), ("a", "c"), ("b", "c")]),
                               Graph.complete("ab"), Graph("ab")])
def test_dim_one(G):
    assert exact(G) == 1


def test_p4_and_caterpillars():
    assert exact(Graph.path(4)) == 2
    assert exact(catalog()["caterpillar"]) == 2
    assert exact(catalog()["star5"]) == 2


@pytest.mark.parametrize("n", range(4, 13))
def test_cycles(n):
    b = classify_dimension(Graph.cycle(n))
    assert b.exact == 3
    assert "chordless_cycle" in b.witness


def test_spider():
    b = classify_dimension(spider(3, 2))
    assert b.exact == 3
    assert b.certificate is not None
    a, c, d = b.witness["asteroidal_triple"]
    assert not any(spider(3, 2).has_edge(x, y) for x, y in ((a, c), (a, d), (c, d)))


def test_non_interval_block_with_certificate():
    G = catalog()["bowtie_branches"]
    b = classify_dimension(G)
    assert b.exact == 3
    m = equals_with_isolated(competition_graph(b.certificate.point_set()), G)
    assert m.ok and m.extra == len(G.edges)


def test_gn_left_open():
    for n in (3, 4):
        b = classify_dimension(gen_gn(n))
        assert b.lower == 3 and b.upper is None and b.exact is None
        assert any(r == "gn" for r, _ in b.reasons)
        assert str(R555_UPPER) in b.notes[0]
    b = classify_dimension(gen_gn(3))
    assert set(b.witness["asteroidal_triple"]) == {"v12", "v13", "v23"}


def test_non_block_non_interval_unknown():
    b = classify_dimension(catalog()["K5_subdivision"])
    assert b.lower == 3 and b.upper is None


def test_search_budget_can_close_the_gap():
    b = classify_dimension(gen_gn(3), search_budget=20000, seed=0)
    assert b.upper == 3 and b.certificate is not None
    m = equals_with_isolated(competition_graph(b.certificate.point_set()), gen_gn(3))
    assert m.ok


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        classify_dimension(Graph([]))


def test_certify_off():
    b = classify_dimension(spider(3, 2), certify=False)
    assert b.exact == 3 and b.certificate is None


def test_random_trees():
    seen = 0
    for seed in itertools.count():
        T = gen_random_tree(9 + seed % 8, seed)
        if is_caterpillar(T):
            assert exact(T) == 2
            continue
        b = classify_dimension(T)
        assert b.exact == 3 and b.certificate is not None
        seen += 1
        if seen == 20:
            break


def test_lower_bound_is_backed_by_oracle():
    # a lower bound of 3 always comes with a non-interval witness the oracle confirms
    for seed in range(40):
        G = gen_random_block(12, seed)
        b = classify_dimension(G, certify=False)
        vs, es = list(G.vertices), set(G.edges)
        non_interval = not brute_chordal(vs, es) or brute_asteroidal_triple(vs, es)
        assert (b.lower == 3) == non_interval
