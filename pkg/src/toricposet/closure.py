"""Toric transitive closure, extreme points and toric Hasse diagrams."""

from __future__ import annotations

from itertools import combinations

from .flips import ToricPoset, canonical
from .graph import CyclicOrientationError, DirectedEdgeSet, Graph, Orientation, reachability
from .toric import toric_directed_paths


def _reach(A: DirectedEdgeSet) -> list[int]:
    try:
        return reachability(A.n, A.successors())
    except CyclicOrientationError:
        raise CyclicOrientationError("closure needs an acyclic arc set") from None


def toric_closure_step(A: DirectedEdgeSet) -> DirectedEdgeSet:
    """One pass: add ``i -> j`` whenever some toric directed path visits ``i`` before ``j``.

    For an arc ``a -> b`` the toric directed paths with that long arc cover
    exactly the vertices between ``a`` and ``b``, and any two of them that
    are comparable appear on a common such path.
    """
    n = A.n
    reach = _reach(A)
    below = [0] * n  # vertices that reach v
    for u in range(n):
        m = reach[u]
        while m:
            low = m & -m
            below[low.bit_length() - 1] |= 1 << u
            m ^= low
    arcs = set(A.arcs)
    for a, b in A.arcs:
        mid = ((reach[a] | 1 << a) & (below[b] | 1 << b))
        verts = [v for v in range(n) if mid >> v & 1]
        for i in verts:
            for j in verts:
                if reach[i] >> j & 1:
                    arcs.add((i, j))
    return DirectedEdgeSet(n, frozenset(arcs))


def toric_closure(A: DirectedEdgeSet) -> DirectedEdgeSet:
    """Toric transitive closure, iterated until nothing changes."""
    cur = A
    while True:
        nxt = toric_closure_step(cur)
        if nxt.arcs == cur.arcs:
            return cur
        cur = nxt


def ordinary_closure(A: DirectedEdgeSet) -> DirectedEdgeSet:
    reach = _reach(A)
    arcs = {(i, j) for i in range(A.n) for j in range(A.n) if reach[i] >> j & 1}
    return DirectedEdgeSet(A.n, frozenset(arcs))


def extreme_points(A: DirectedEdgeSet) -> DirectedEdgeSet:
    """Arcs of ``A`` that the closure of the remaining arcs does not recover."""
    _reach(A)
    keep = [a for a in A.arcs if a not in toric_closure(A - {a}).arcs]
    return DirectedEdgeSet(A.n, frozenset(keep))


def chord_removal(A: DirectedEdgeSet) -> DirectedEdgeSet:
    """Drop every chord of every toric directed path with at least 4 vertices.

    Cross-check for :func:`extreme_points`.  Arcs of ``A`` are read as an
    orientation of their underlying graph.
    """
    w = A.as_orientation()
    chords = set()
    for path in toric_directed_paths(w):
        if len(path) < 4:
            continue
        for s, t in combinations(range(len(path)), 2):
            if t - s >= 2 and not (s == 0 and t == len(path) - 1):
                chords.add((path[s], path[t]))
    return A - chords


def _poset_on(g: Graph, arcs: DirectedEdgeSet) -> ToricPoset:
    sub = g.with_edges((min(a), max(a)) for a in arcs.arcs)
    return canonical(Orientation.from_arcs(sub, arcs.arcs))


def closure_poset(P: ToricPoset) -> ToricPoset:
    """The same chamber carried by its largest graph."""
    return _poset_on(P.graph, toric_closure(P.rep.edge_set()))


def toric_hasse(P: ToricPoset) -> ToricPoset:
    """The same chamber carried by its smallest graph (the toric Hasse diagram)."""
    return _poset_on(P.graph, extreme_points(P.rep.edge_set()))


def graphs_between(P: ToricPoset) -> tuple[Graph, Graph]:
    """``(Hasse graph, closure graph)``: ``P``'s chamber is a chamber of ``G`` iff ``G`` lies between."""
    return toric_hasse(P).graph, closure_poset(P).graph


def chamber_graphs(P: ToricPoset) -> list[Graph]:
    """Every graph carrying the chamber of ``P``."""
    low, high = graphs_between(P)
    optional = sorted(set(high.edges) - set(low.edges))
    out = []
    for r in range(len(optional) + 1):
        for extra in combinations(optional, r):
            out.append(P.graph.with_edges(low.edges + extra))
    return out


def same_chamber(P: ToricPoset, Q: ToricPoset) -> bool:
    """Whether two toric posets, possibly on different graphs, are the same open chamber."""
    return P.graph.n == Q.graph.n and closure_poset(P) == closure_poset(Q)
