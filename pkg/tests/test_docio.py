import json

import pytest

from kgraphs import docio, families
from kgraphs.classify import kp_report
from kgraphs.kgraph import validate
from kgraphs.monoid import DEFAULT_BOUNDS, TElement


FINITE = ["fan3", "one-vertex-3x3", "one-vertex-3x2", "cycle4", "arrow",
          "loop-pair-tail", "looptail"]


@pytest.mark.parametrize("name", FINITE)
def test_graph_roundtrip(name):
    g = families.FAMILIES[name]()
    text = docio.dump_graph(g)
    g2 = docio.load_graph(text)
    assert validate(g2).ok == validate(g).ok
    assert g2.k == g.k
    assert len(g2.vertices) == len(g.vertices)
    assert len(g2.edges) == len(g.edges)
    assert len(g2.squares) == len(g.squares)
    # serializing again is stable
    assert docio.dump_graph(g2) == docio.dump_graph(docio.load_graph(docio.dump_graph(g2)))


def test_bad_documents():
    with pytest.raises(docio.ParseError):
        docio.load_graph("not json at all {")
    with pytest.raises(docio.ParseError):
        docio.load_graph(json.dumps({"format_version": 99, "k": 2,
                                     "vertices": [], "edges": [], "squares": []}))
    with pytest.raises(docio.ParseError):
        docio.load_graph(json.dumps({
            "format_version": 1, "k": 2, "vertices": ["v"],
            "edges": [{"id": "e", "color": 7, "range": "v", "source": "v"}],
            "squares": []}))


def test_element_syntax():
    a = docio.parse_element("v(1,2)*3 + u(0,-1)", 2)
    assert dict(a.items) == {("v", (1, 2)): 3, ("u", (0, -1)): 1}
    assert docio.parse_element(docio.format_element(a), 2) == a
    assert docio.parse_element("0", 2).is_zero()
    assert docio.format_element(TElement.zero()) == "0"
    with pytest.raises(docio.ParseError):
        docio.parse_element("v(1)", 2)
    with pytest.raises(docio.ParseError):
        docio.parse_element("v(1,2)*0", 2)
    with pytest.raises(docio.ParseError):
        docio.parse_element("garbage", 2)


def test_dot_export(loop_pair_tail):
    dot = docio.to_dot(loop_pair_tail)
    assert dot.count("->") == 4
    assert dot.count('"u" -> "u"') == 2  # the two loops
    assert "colorindex=0" in dot and "colorindex=1" in dot


def test_report_document_roundtrip(loop_pair_tail):
    rep = kp_report(loop_pair_tail, DEFAULT_BOUNDS)
    doc = docio.report_to_document(rep, DEFAULT_BOUNDS, {"total": 0.5})
    text = doc.to_json()
    back = docio.ReportDocument.from_json(text)
    assert back == doc
    assert back.properties["cofinal"]["verdict"] == "yes"
    assert back.extras["periodicWitness"]["period"] == [1, 0]
