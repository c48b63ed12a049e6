import json

import pytest

from toricposet import serialize as ser
from toricposet.flips import canonical, flip_classes
from toricposet.graph import Graph, enumerate_acyclic


def test_graph_round_trip_default_labels():
    obj = {"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}
    g = ser.graph_from_json(obj)
    assert g.edges == Graph.cycle(4).edges and g.vertex_labels == (1, 2, 3, 4)
    assert ser.graph_from_json(ser.graph_to_json(g)) == g
    assert "vertices" not in ser.graph_to_json(g)


def test_graph_custom_labels_sorted():
    g = ser.graph_from_json({"vertices": ["c", "a", "b"], "edges": [["a", "c"]]})
    assert g.vertex_labels == ("a", "b", "c")
    out = ser.graph_to_json(g)
    assert out["vertices"] == ["a", "b", "c"] and out["edges"] == [["a", "c"]]


@pytest.mark.parametrize("obj, field", [
    ([], "graph"),
    ({"n": -1}, "n"),
    ({"n": "4"}, "n"),
    ({"n": 3, "edges": [[1, 2, 3]]}, "edges[0]"),
    ({"n": 3, "edges": [[1, 9]]}, "edges"),
    ({"n": 3, "edges": [[1, 1]]}, "edges"),
    ({"vertices": [1, 1]}, "vertices"),
    ({"n": 2, "vertices": [1, 2, 3]}, "n"),
    ({"n": 2, "edges": [[True, 2]]}, "edges[0]"),
])
def test_graph_errors_name_field(obj, field):
    with pytest.raises(ser.InputError) as e:
        ser.graph_from_json(obj)
    assert e.value.field == field


def test_orientation_round_trip():
    g = Graph.cycle(4)
    for w in enumerate_acyclic(g):
        assert ser.orientation_from_json(g, json.loads(json.dumps(ser.orientation_to_json(w)))) == w


def test_orientation_errors():
    g = Graph.cycle(4)
    with pytest.raises(ser.InputError):
        ser.orientation_from_json(g, {"arcs": [[1, 3]]})
    with pytest.raises(ser.InputError):
        ser.orientation_from_json(g, {"arcs": [[1, 2]]})
    with pytest.raises(ser.InputError):
        ser.orientation_from_json(g, {"edges": []})


def test_arcset_round_trip():
    d, base = ser.arcset_from_json({"arcs": [[1, 2], [2, 3], [1, 4]]})
    assert base.vertex_labels == (1, 2, 3, 4)
    assert ser.arcset_to_json(d, base) == {"arcs": [[1, 2], [1, 4], [2, 3]]}
    d2, base2 = ser.arcset_from_json({"n": 5, "arcs": [[1, 2]]})
    assert base2.n == 5


def test_poset_json_and_dot():
    P = flip_classes(Graph.cycle(4))[0]
    obj = ser.toric_poset_to_json(P)
    assert obj["class_size"] == P.class_size and obj["n"] == 4
    dot = ser.orientation_to_dot(P.rep)
    assert dot.startswith("digraph G {") and dot.count("->") == 4
    assert ser.graph_to_dot(Graph.cycle(4)).count("--") == 4


def test_dumps_stable():
    assert ser.dumps({"b": 1, "a": [2]}) == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'
