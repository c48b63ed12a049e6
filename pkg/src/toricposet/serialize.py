"""JSON and DOT encodings.  External vertex labels are used throughout."""

from __future__ import annotations

import json
from typing import Any, Hashable, Iterable

from .cyclic import CyclicWord
from .flips import ToricPoset
from .graph import DirectedEdgeSet, Graph, GraphError, Orientation


class InputError(ValueError):
    """Malformed input; ``field`` names the offending JSON field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _label(x, field: str) -> Hashable:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(field, f"vertex labels must be integers or strings, got {x!r}")
    return x


def _sorted_labels(labels: Iterable[Hashable]) -> list[Hashable]:
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return labels


def _pairs(obj: Any, field: str) -> list[tuple[Hashable, Hashable]]:
    if not isinstance(obj, list):
        raise InputError(field, "expected a list of pairs")
    out = []
    for k, p in enumerate(obj):
        if not isinstance(p, list) or len(p) != 2:
            raise InputError(f"{field}[{k}]", f"expected a pair, got {p!r}")
        out.append((_label(p[0], f"{field}[{k}]"), _label(p[1], f"{field}[{k}]")))
    return out


def graph_from_json(obj: Any) -> Graph:
    """``{"n": 4, "edges": [[1, 2], ...]}``, labels 1..n unless ``"vertices"`` is given."""
    if not isinstance(obj, dict):
        raise InputError("graph", "expected a JSON object")
    if "vertices" in obj:
        verts = obj["vertices"]
        if not isinstance(verts, list):
            raise InputError("vertices", "expected a list of labels")
        verts = [_label(v, "vertices") for v in verts]
        if "n" in obj and obj["n"] != len(verts):
            raise InputError("n", f"n={obj['n']} but {len(verts)} vertices listed")
    else:
        n = obj.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InputError("n", f"expected a non-negative integer, got {n!r}")
        verts = list(range(1, n + 1))
    if len(set(verts)) != len(verts):
        raise InputError("vertices", "duplicate labels")
    edges = _pairs(obj.get("edges", []), "edges")
    try:
        return Graph.from_labeled_edges(_sorted_labels(verts), edges)
    except GraphError as exc:
        raise InputError("edges", str(exc)) from None


def graph_to_json(g: Graph) -> dict:
    out: dict[str, Any] = {
        "n": g.n,
        "edges": [[g.label(i), g.label(j)] for i, j in g.edges],
    }
    if list(g.vertex_labels) != list(range(1, g.n + 1)):
        out["vertices"] = list(g.vertex_labels)
    return out


def _labelled_arcs(g: Graph, arcs: Iterable[tuple[int, int]]) -> list[list[Hashable]]:
    return [[g.label(i), g.label(j)] for i, j in arcs]


def orientation_from_json(g: Graph, obj: Any) -> Orientation:
    if not isinstance(obj, dict) or "arcs" not in obj:
        raise InputError("arcs", "expected an object with an 'arcs' list")
    pairs = _pairs(obj["arcs"], "arcs")
    try:
        arcs = [(g.index(a), g.index(b)) for a, b in pairs]
        return Orientation.from_arcs(g, arcs)
    except GraphError as exc:
        raise InputError("arcs", str(exc)) from None


def orientation_to_json(w: Orientation) -> dict:
    return {"arcs": _labelled_arcs(w.graph, w.arcs)}


def arcset_from_json(obj: Any) -> tuple[DirectedEdgeSet, Graph]:
    """An arc set plus the (edgeless) labelled vertex set it lives on."""
    if not isinstance(obj, dict) or "arcs" not in obj:
        raise InputError("arcs", "expected an object with an 'arcs' list")
    pairs = _pairs(obj["arcs"], "arcs")
    if "vertices" in obj or "n" in obj:
        verts = graph_from_json({k: obj[k] for k in ("n", "vertices") if k in obj}).vertex_labels
    else:
        verts = _sorted_labels({v for p in pairs for v in p})
    base = Graph(len(verts), (), tuple(verts))
    try:
        arcs = frozenset((base.index(a), base.index(b)) for a, b in pairs)
        return DirectedEdgeSet(base.n, arcs), base
    except GraphError as exc:
        raise InputError("arcs", str(exc)) from None


def arcset_to_json(d: DirectedEdgeSet, base: Graph) -> dict:
    return {"arcs": _labelled_arcs(base, sorted(d.arcs))}


def cyclic_word_to_json(g: Graph, w: CyclicWord) -> list:
    # vertex indices follow label order, so the rotation is already canonical
    return [g.label(v) for v in CyclicWord(w)]


def vertex_set_to_json(g: Graph, s: Iterable[int]) -> list:
    return [g.label(v) for v in sorted(s)]


def vertex_set_from_json(g: Graph, obj: Any, field: str = "vertices") -> frozenset[int]:
    if not isinstance(obj, list):
        raise InputError(field, "expected a list of vertex labels")
    try:
        return frozenset(g.index(_label(v, field)) for v in obj)
    except GraphError as exc:
        raise InputError(field, str(exc)) from None


def toric_poset_to_json(P: ToricPoset) -> dict:
    out = graph_to_json(P.graph)
    out["rep"] = _labelled_arcs(P.graph, P.rep.arcs)
    out["class_size"] = P.class_size
    return out


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  "{g.label(v)}";' for v in range(g.n)]
    lines += [f'  "{g.label(i)}" -- "{g.label(j)}";' for i, j in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def arcs_to_dot(g: Graph, arcs: Iterable[tuple[int, int]], name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  "{g.label(v)}";' for v in range(g.n)]
    lines += [f'  "{g.label(i)}" -> "{g.label(j)}";' for i, j in arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def orientation_to_dot(w: Orientation, name: str = "G") -> str:
    return arcs_to_dot(w.graph, w.arcs, name)
