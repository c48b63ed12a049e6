"""Toric directed paths, toric chains and toric total extensions."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .cyclic import CyclicWord, all_cyclic_words, cyclic_restriction
from .flips import ToricPoset, equivalent
from .graph import GraphError, Orientation, orientation_from_order

__all__ = [
    "CyclicWord",
    "cyclic_restriction",
    "toric_directed_paths",
    "chain_order",
    "is_toric_chain",
    "all_toric_chains",
    "toric_total_extensions",
    "is_toric_extension",
]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def toric_directed_paths(w: Orientation) -> set[tuple[int, ...]]:
    """Every toric directed path of size >= 2 in ``w``.

    A sequence ``(i_1, ..., i_m)`` qualifies when every consecutive arc
    ``i_k -> i_{k+1}`` and the long arc ``i_1 -> i_m`` are all present.
    """
    succ = w.successors
    reach = w.reach
    paths: set[tuple[int, ...]] = set()
    for a, b in w.arcs:
        stack = [(a,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            if last == b:
                paths.add(path)
                continue
            for nxt in _bits(succ[last]):
                if nxt == b or reach[nxt] >> b & 1:
                    stack.append(path + (nxt,))
    return paths


def chain_order(w: Orientation, vertices: Iterable[int]) -> tuple[int, ...] | None:
    """``vertices`` sorted by the poset P(G, w), or ``None`` if not totally ordered there."""
    vs = list(vertices)
    reach = w.reach
    # in a total order the rank of v is the number of elements below it
    ranked = sorted(vs, key=lambda v: sum(reach[u] >> v & 1 for u in vs))
    for u, v in zip(ranked, ranked[1:]):
        if not reach[u] >> v & 1:
            return None
    return tuple(ranked)


def _on_toric_path(w: Orientation, order: tuple[int, ...]) -> bool:
    """Whether the chain ``order`` of ``w`` sits inside some toric directed path.

    In an acyclic orientation any walk is a path, so it is enough to find an
    arc ``a -> b`` with ``a <= order[0]`` and ``order[-1] <= b``.
    """
    lo, hi = order[0], order[-1]
    reach = w.reach
    for a, b in w.arcs:
        if (a == lo or reach[a] >> lo & 1) and (b == hi or reach[hi] >> b & 1):
            return True
    return False


def _check_vertices(P: ToricPoset, C: Iterable[int]) -> frozenset[int]:
    C = frozenset(C)
    bad = [v for v in C if not (isinstance(v, int) and 0 <= v < P.graph.n)]
    if bad:
        raise GraphError(f"unknown vertices {sorted(bad, key=repr)}")
    return C


def is_toric_chain(P: ToricPoset, C: Iterable[int]) -> CyclicWord | None:
    """The cyclic order ``P|_C`` if ``C`` is a toric chain of ``P``, else ``None``.

    Searches the class for a representative in which ``C`` occurs as a
    subsequence of a toric directed path.
    """
    C = _check_vertices(P, C)
    if len(C) <= 1:
        return CyclicWord(sorted(C))
    for w in P.members:
        order = chain_order(w, C)
        if order is not None and _on_toric_path(w, order):
            return CyclicWord(order)
    return None


def all_toric_chains(P: ToricPoset) -> dict[frozenset[int], CyclicWord]:
    """Every toric chain of ``P`` mapped to its cyclic order.

    Vertex sets of toric directed paths over the whole class, closed under
    taking subsets.  Includes the empty set and all singletons.
    """
    words = set()
    for w in P.members:
        for path in toric_directed_paths(w):
            words.add(CyclicWord(path))
    chains: dict[frozenset[int], CyclicWord] = {frozenset(): CyclicWord()}
    for v in range(P.graph.n):
        chains[frozenset((v,))] = CyclicWord((v,))
    for word in words:
        for r in range(2, len(word) + 1):
            for sub in combinations(word, r):
                key = frozenset(sub)
                if key not in chains:
                    chains[key] = CyclicWord(sub)
    return chains


def toric_total_extensions(P: ToricPoset) -> set[CyclicWord]:
    """Cyclic orders ``[w]`` of all vertices whose chamber lies in ``P``'s chamber.

    One rotation per cyclic class is enough: rotating ``w`` by one step
    flips its first vertex from source to sink.
    """
    g = P.graph
    return {
        word
        for word in all_cyclic_words(range(g.n))
        if orientation_from_order(g, word) in P
    }


def is_toric_extension(finer: ToricPoset, coarser: ToricPoset) -> bool:
    """Chamber containment ``c(finer) <= c(coarser)``.

    Only decided when ``coarser.graph`` is an edge-subgraph of ``finer.graph``:
    then the finer chamber lies in exactly one chamber of the smaller
    arrangement, found by restricting any representative.
    """
    if finer.graph.n != coarser.graph.n:
        raise GraphError("toric posets on different vertex sets")
    if not coarser.graph.is_edge_subgraph_of(finer.graph):
        raise NotImplementedError("toric extension is only decided for edge-subgraphs")
    return equivalent(finer.rep.restrict(coarser.graph), coarser.rep)
