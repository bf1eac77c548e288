import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pocdim import formats
from pocdim.analysis import classify_dimension
from pocdim.builder import build_block_representation, to_partial_order
from pocdim.graphs import Graph, catalog, spider
from pocdim.poset import PointSet


@given(st.fractions())
def test_rational_roundtrip(x):
    assert formats.rat_from(formats.rat_to_str(x)) == x


def test_rational_forms():
    assert formats.rat_to_str(F(3)) == "3"
    assert formats.rat_to_str(F(-3, 4)) == "-3/4"
    assert formats.rat_from(5) == 5
    for bad in (1.5, True, None, "1/0", "abc", [1]):
        with pytest.raises(formats.FormatError):
            formats.rat_from(bad)


def test_graph_json_roundtrip():
    for G in catalog().values():
        doc = json.loads(formats.dumps(formats.graph_to_json(G)))
        assert doc["v"] == 1 and doc["kind"] == "graph"
        assert formats.graph_from_json(doc) == G


def test_graph_text():
    G = formats.graph_from_text("# comment\na b\nb c  # trailing\n\nz\n")
    assert G == Graph("abcz", [("a", "b"), ("b", "c")])
    with pytest.raises(formats.FormatError):
        formats.graph_from_text("a b c")
    assert formats.load_graph('{"vertices": ["a"], "edges": []}') == Graph(["a"])
    assert formats.load_graph("a b") == Graph("ab", [("a", "b")])


def test_bad_documents():
    with pytest.raises(formats.FormatError):
        formats.parse_json("{nope")
    with pytest.raises(formats.FormatError):
        formats.graph_from_json({"v": 2, "vertices": [], "edges": []})
    with pytest.raises(formats.FormatError):
        formats.graph_from_json({"vertices": ["a"], "edges": [["a", "b"]]})
    with pytest.raises(formats.FormatError):
        formats.pointset_from_json({"dim": 3, "points": {"a": ["1", "2"]}})
    with pytest.raises(formats.FormatError):
        formats.family_from_json({"kind": "family"})


def test_pointset_roundtrip():
    S = PointSet(3, {"a": (F(1, 3), 2, -5), "b": (0, 0, 0)})
    back = formats.pointset_from_json(json.loads(formats.dumps(formats.pointset_to_json(S))))
    assert back.points == S.points


def test_family_and_representation_roundtrip():
    G = catalog()["bowtie_branches"]
    fam = build_block_representation(G)
    fam2, G2 = formats.family_from_json(json.loads(formats.dumps(formats.family_to_json(fam, G))))
    assert fam2.apexes == fam.apexes and G2 == G
    assert fam2.certificates == fam.certificates
    rep = to_partial_order(fam, G)
    doc = json.loads(formats.dumps(formats.representation_to_json(rep)))
    assert formats.pointset_from_json(doc).points == rep.point_set().points
    back = formats.representation_from_json(doc)
    assert back.witnesses == rep.witnesses and back.target == G
    assert formats.graph_from_json(doc) == G


def test_dimbound_json():
    doc = formats.dimbound_to_json(classify_dimension(spider()))
    assert doc["lower"] == doc["upper"] == doc["exact"] == 3
    assert doc["certificate"]["kind"] == "representation"
    doc = formats.dimbound_to_json(classify_dimension(catalog()["G3"]))
    assert doc["upper"] == "UNKNOWN" and doc["exact"] is None
