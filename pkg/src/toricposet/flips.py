"""Source-to-sink flips and toric posets as flip-equivalence classes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .cyclic import CyclicWord
from .graph import Graph, GraphError, Orientation, enumerate_acyclic


@lru_cache(maxsize=256)
def _out_bits(g: Graph) -> tuple[tuple[tuple[int, int], ...], ...]:
    # per vertex: (edge position, direction bit meaning "arc leaves v")
    return tuple(
        tuple((k, 0 if g.edges[k][0] == v else 1) for k in g.incident[v])
        for v in range(g.n)
    )


def _flip_neighbours(g: Graph, dirs: tuple[int, ...]):
    """Yield ``(v, dirs')`` for each source or sink ``v`` of ``dirs``."""
    for v, inc in enumerate(_out_bits(g)):
        if not inc:
            continue
        first = dirs[inc[0][0]] == inc[0][1]
        if all((dirs[k] == b) == first for k, b in inc):
            new = list(dirs)
            for k, _ in inc:
                new[k] ^= 1
            yield v, tuple(new)


def flip_sources(w: Orientation) -> list[tuple[int, Orientation]]:
    """Flip each source of ``w`` into a sink.

    Isolated vertices count as sources; flipping one changes nothing.
    """
    out = []
    for v in range(w.graph.n):
        if w.is_source(v):
            out.append((v, w.flip(v)))
    return out


def flip_sinks(w: Orientation) -> list[tuple[int, Orientation]]:
    out = []
    for v in range(w.graph.n):
        if w.is_sink(v):
            out.append((v, w.flip(v)))
    return out


def _class_dirs(g: Graph, dirs: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen = {dirs}
    queue = deque([dirs])
    while queue:
        d = queue.popleft()
        for _, nd in _flip_neighbours(g, d):
            if nd not in seen:
                seen.add(nd)
                queue.append(nd)
    return seen


def flip_class(w: Orientation) -> frozenset[Orientation]:
    """The flip-equivalence class of ``w`` (breadth-first over sources and sinks)."""
    g = w.graph
    return frozenset(Orientation(g, d, check=False) for d in _class_dirs(g, w.dirs))


@dataclass(frozen=True, eq=True)
class ToricPoset:
    """A toric poset on a fixed graph: the class of ``rep`` under flips.

    ``rep`` is the member of the class with the lexicographically smallest
    direction vector.  Build instances with :func:`canonical`.  Class sizes
    can grow exponentially with the number of vertices; ``members`` and
    ``class_size`` are computed on first use.
    """

    graph: Graph
    rep: Orientation

    @cached_property
    def members(self) -> tuple[Orientation, ...]:
        return tuple(sorted(flip_class(self.rep)))

    @cached_property
    def member_dirs(self) -> frozenset[tuple[int, ...]]:
        return frozenset(w.dirs for w in self.members)

    @property
    def class_size(self) -> int:
        return len(self.members)

    def __contains__(self, w: Orientation) -> bool:
        return w.graph == self.graph and w.dirs in self.member_dirs

    @property
    def n(self) -> int:
        return self.graph.n


def canonical(w: Orientation) -> ToricPoset:
    dirs = min(_class_dirs(w.graph, w.dirs))
    return ToricPoset(w.graph, Orientation(w.graph, dirs, check=False))


def flip_classes(g: Graph) -> list[ToricPoset]:
    """Partition of all acyclic orientations of ``g`` into toric posets, sorted by rep."""
    remaining = {w.dirs for w in enumerate_acyclic(g)}
    out = []
    while remaining:
        d = min(remaining)
        cls = _class_dirs(g, d)
        remaining -= cls
        tp = ToricPoset(g, Orientation(g, d, check=False))
        # cache the class we already have
        tp.__dict__["members"] = tuple(sorted(Orientation(g, x, check=False) for x in cls))
        out.append(tp)
    return out


# ---------------------------------------------------------------------------
# nu: forward minus backward arcs along a directed cycle

@dataclass(frozen=True)
class DirectedCycleClass:
    """A cyclic word of length >= 3 whose consecutive pairs are graph edges."""

    graph: Graph
    vertices: CyclicWord

    def __post_init__(self):
        word = CyclicWord(self.vertices)
        object.__setattr__(self, "vertices", word)
        if len(word) < 3:
            raise GraphError("a directed cycle needs at least 3 vertices")
        for a, b in word.pairs():
            if not self.graph.has_edge(a, b):
                raise GraphError(f"{(a, b)} is not an edge, so {tuple(word)} is not a directed cycle")


def nu(w: Orientation, cycle: DirectedCycleClass | CyclicWord | tuple) -> int:
    """Arcs oriented along the cyclic word minus arcs oriented against it."""
    if not isinstance(cycle, DirectedCycleClass):
        cycle = DirectedCycleClass(w.graph, CyclicWord(cycle))
    elif cycle.graph != w.graph:
        raise GraphError("cycle belongs to a different graph")
    total = 0
    for a, b in cycle.vertices.pairs():
        total += 1 if w.has_arc(a, b) else -1
    return total


@lru_cache(maxsize=256)
def fundamental_cycles(g: Graph) -> tuple[DirectedCycleClass, ...]:
    """One cycle per non-tree edge of a BFS spanning forest.

    Each cycle is the tree path from ``u`` up to the common ancestor and
    down to ``v``, closed by the non-tree edge ``{u, v}``.
    """
    parent, extra = g.spanning_forest()

    def to_root(v):
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    cycles = []
    for u, v in extra:
        pu, pv = to_root(u), to_root(v)
        common = set(pu) & set(pv)
        # lowest common ancestor is the first common vertex on u's path
        lca = next(x for x in pu if x in common)
        up = pu[: pu.index(lca) + 1]             # u .. lca
        down = pv[: pv.index(lca)][::-1]         # below lca .. v
        cycles.append(DirectedCycleClass(g, CyclicWord(up + down)))
    return tuple(cycles)


def nu_signature(w: Orientation) -> tuple[int, ...]:
    """nu on every fundamental cycle of the graph.

    nu is a signed edge sum, hence additive over the integer cycle space;
    fundamental cycles generate that lattice, so equal signatures mean
    equal nu on every directed cycle.
    """
    return tuple(nu(w, c) for c in fundamental_cycles(w.graph))


def equivalent(w1: Orientation, w2: Orientation) -> bool:
    """``w1`` and ``w2`` differ by a sequence of flips."""
    if w1.graph != w2.graph:
        raise GraphError("orientations of different graphs")
    return nu_signature(w1) == nu_signature(w2)
