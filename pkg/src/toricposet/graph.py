"""Simple graphs, acyclic orientations and arc sets.

Vertices are always the integers ``0..n-1`` internally.  A :class:`Graph`
may carry a tuple of external labels (``labels[i]`` is the label of vertex
``i``); labels only matter for input/output.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class CyclicOrientationError(GraphError):
    """Raised when an arc set that must be acyclic contains a directed cycle."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            pair = (min(i, j), max(i, j))
            if pair in norm:
                raise GraphError(f"parallel edge {pair}")
            norm.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise GraphError("labels must be n distinct values")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_labeled_edges(cls, vertices: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]]) -> Graph:
        """Build a graph on ``vertices`` (in the given order) from labelled edges."""
        index = {v: k for k, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("duplicate vertex labels")
        try:
            idx_edges = [(index[a], index[b]) for a, b in edges]
        except KeyError as exc:
            raise GraphError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
        return cls(len(vertices), tuple(idx_edges), tuple(vertices))

    @classmethod
    def cycle(cls, n: int, labels=None) -> Graph:
        return cls(n, tuple((i, (i + 1) % n) for i in range(n)), labels)

    @classmethod
    def complete(cls, n: int, labels=None) -> Graph:
        return cls(n, tuple(itertools.combinations(range(n), 2)), labels)

    @classmethod
    def path(cls, n: int, labels=None) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(n - 1)), labels)

    @classmethod
    def empty(cls, n: int, labels=None) -> Graph:
        return cls(n, (), labels)

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.n, self.edges, self.labels))

    @property
    def vertex_labels(self) -> tuple[Hashable, ...]:
        return self.labels if self.labels is not None else tuple(range(self.n))

    def label(self, v: int) -> Hashable:
        return self.vertex_labels[v]

    @cached_property
    def _label_index(self) -> dict:
        return {lab: k for k, lab in enumerate(self.vertex_labels)}

    def index(self, label: Hashable) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge positions incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for k, (i, j) in enumerate(self.edges):
            inc[i].append(k)
            inc[j].append(k)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(x) for x in nb)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_index

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for w in self.neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.n

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        """Same vertex set (and labels), different edge set."""
        return Graph(self.n, tuple(edges), self.labels)

    def is_edge_subgraph_of(self, other: Graph) -> bool:
        return self.n == other.n and set(self.edges) <= set(other.edges)

    def spanning_forest(self) -> tuple[dict[int, int | None], list[tuple[int, int]]]:
        """BFS forest: parent map and the list of non-tree edges."""
        parent: dict[int, int | None] = {}
        tree = set()
        for root in range(self.n):
            if root in parent:
                continue
            parent[root] = None
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in sorted(self.neighbors[v]):
                    if w not in parent:
                        parent[w] = v
                        tree.add((min(v, w), max(v, w)))
                        queue.append(w)
        return parent, [e for e in self.edges if e not in tree]


# ---------------------------------------------------------------------------
# Arc sets

@dataclass(frozen=True)
class DirectedEdgeSet:
    """A set of ordered pairs ``(i, j)``, ``i != j``, on vertices ``0..n-1``."""

    n: int
    arcs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        for i, j in arcs:
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"bad arc {(i, j)} for n={self.n}")
        object.__setattr__(self, "arcs", arcs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.arcs))

    def __len__(self):
        return len(self.arcs)

    def __contains__(self, arc):
        return arc in self.arcs

    def __or__(self, other: DirectedEdgeSet | Iterable[tuple[int, int]]) -> DirectedEdgeSet:
        extra = other.arcs if isinstance(other, DirectedEdgeSet) else frozenset(other)
        return DirectedEdgeSet(self.n, self.arcs | extra)

    def __sub__(self, other: DirectedEdgeSet | Iterable[tuple[int, int]]) -> DirectedEdgeSet:
        extra = other.arcs if isinstance(other, DirectedEdgeSet) else frozenset(other)
        return DirectedEdgeSet(self.n, self.arcs - extra)

    def __le__(self, other: DirectedEdgeSet) -> bool:
        return self.arcs <= other.arcs

    def underlying_graph(self, labels=None) -> Graph:
        return Graph(self.n, tuple({(min(a), max(a)) for a in self.arcs}), labels)

    def as_orientation(self, labels=None) -> Orientation:
        """The orientation of the underlying graph given by these arcs."""
        g = self.underlying_graph(labels)
        return Orientation.from_arcs(g, self.arcs)

    def successors(self) -> list[int]:
        """Out-neighbourhoods as bitmasks."""
        succ = [0] * self.n
        for i, j in self.arcs:
            succ[i] |= 1 << j
        return succ


def _topological_order(n: int, succ: Sequence[int]) -> list[int] | None:
    """Smallest-first Kahn order, or ``None`` if there is a directed cycle."""
    indeg = [0] * n
    for i in range(n):
        m = succ[i]
        while m:
            low = m & -m
            indeg[low.bit_length() - 1] += 1
            m ^= low
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        m = succ[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == n else None


def is_acyclic(d: DirectedEdgeSet) -> bool:
    return _topological_order(d.n, d.successors()) is not None


def reachability(n: int, succ: Sequence[int]) -> list[int]:
    """Strict descendants of each vertex, as bitmasks.  Input must be acyclic."""
    order = _topological_order(n, succ)
    if order is None:
        raise CyclicOrientationError("arc set contains a directed cycle")
    reach = [0] * n
    for v in reversed(order):
        r = succ[v]
        m = succ[v]
        while m:
            low = m & -m
            r |= reach[low.bit_length() - 1]
            m ^= low
        reach[v] = r
    return reach


# ---------------------------------------------------------------------------
# Orientations

@dataclass(frozen=True, eq=False)
class Orientation:
    """An acyclic orientation of ``graph``.

    ``dirs[k]`` is 0 when edge ``graph.edges[k] = (i, j)`` (``i < j``) points
    ``i -> j`` and 1 when it points ``j -> i``.
    """

    graph: Graph
    dirs: tuple[int, ...]
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        dirs = tuple(int(b) for b in self.dirs)
        if len(dirs) != len(self.graph.edges):
            raise GraphError(f"expected {len(self.graph.edges)} direction bits, got {len(dirs)}")
        if any(b not in (0, 1) for b in dirs):
            raise GraphError("direction bits must be 0 or 1")
        object.__setattr__(self, "dirs", dirs)
        if self.check and _topological_order(self.graph.n, self.successors) is None:
            raise CyclicOrientationError("orientation contains a directed cycle")

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
        dirs = [None] * len(graph.edges)
        for i, j in arcs:
            k = graph.edge_index.get((min(i, j), max(i, j)))
            if k is None:
                raise GraphError(f"arc {(i, j)} is not an edge of the graph")
            bit = 0 if i < j else 1
            if dirs[k] is not None and dirs[k] != bit:
                raise GraphError(f"edge {graph.edges[k]} oriented both ways")
            dirs[k] = bit
        missing = [graph.edges[k] for k, b in enumerate(dirs) if b is None]
        if missing:
            raise GraphError(f"edges without a direction: {missing}")
        return cls(graph, tuple(dirs))

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.dirs == other.dirs and self.graph == other.graph

    def __hash__(self):
        return hash((self.graph, self.dirs))

    def __lt__(self, other: Orientation) -> bool:
        return self.dirs < other.dirs

    def __repr__(self):
        return f"Orientation(arcs={sorted(self.arcs)})"

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((j, i) if b else (i, j) for (i, j), b in zip(self.graph.edges, self.dirs))

    @cached_property
    def successors(self) -> tuple[int, ...]:
        succ = [0] * self.graph.n
        for i, j in self.arcs:
            succ[i] |= 1 << j
        return tuple(succ)

    @cached_property
    def predecessors(self) -> tuple[int, ...]:
        pred = [0] * self.graph.n
        for i, j in self.arcs:
            pred[j] |= 1 << i
        return tuple(pred)

    @cached_property
    def reach(self) -> tuple[int, ...]:
        """Strict descendants of each vertex as bitmasks."""
        return tuple(reachability(self.graph.n, self.successors))

    def less(self, i: int, j: int) -> bool:
        """``i < j`` in the poset P(G, omega)."""
        return bool(self.reach[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)

    def has_arc(self, i: int, j: int) -> bool:
        k = self.graph.edge_index.get((min(i, j), max(i, j)))
        return k is not None and self.dirs[k] == (0 if i < j else 1)

    def is_source(self, v: int) -> bool:
        return self.predecessors[v] == 0

    def is_sink(self, v: int) -> bool:
        return self.successors[v] == 0

    def flip(self, v: int) -> Orientation:
        """Reverse every arc at ``v``.  Only acyclic when ``v`` is a source or sink."""
        dirs = list(self.dirs)
        for k in self.graph.incident[v]:
            dirs[k] ^= 1
        return Orientation(self.graph, tuple(dirs), check=False)

    def edge_set(self) -> DirectedEdgeSet:
        return DirectedEdgeSet(self.graph.n, frozenset(self.arcs))

    def restrict(self, sub: Graph) -> Orientation:
        """Restriction to an edge-subgraph on the same vertex set."""
        if not sub.is_edge_subgraph_of(self.graph):
            raise GraphError("not an edge-subgraph")
        idx = self.graph.edge_index
        return Orientation(sub, tuple(self.dirs[idx[e]] for e in sub.edges), check=False)

    def linear_extension(self) -> list[int]:
        """Lexicographically smallest linear extension of P(G, omega)."""
        return _topological_order(self.graph.n, self.successors)


def orientation_from_order(g: Graph, w: Sequence[int]) -> Orientation:
    """Direct each edge from the endpoint that comes first in ``w``."""
    if sorted(w) != list(range(g.n)):
        raise GraphError(f"{tuple(w)} is not a permutation of 0..{g.n - 1}")
    pos = {v: k for k, v in enumerate(w)}
    return Orientation(g, tuple(0 if pos[i] < pos[j] else 1 for i, j in g.edges), check=False)


def enumerate_acyclic(g: Graph) -> list[Orientation]:
    """All acyclic orientations of ``g``, sorted by direction vector.

    Backtracks over the edges in canonical order, choosing bit 0 before bit
    1 and pruning a choice as soon as it closes a directed cycle, so the
    output order is lexicographic without a final sort.
    """
    n = g.n
    edges = g.edges
    m = len(edges)
    out: list[Orientation] = []
    dirs = [0] * m

    # reach[v]: v together with everything reachable from v, as a bitmask
    def rec(k: int, reach: list[int]):
        if k == m:
            out.append(Orientation(g, tuple(dirs), check=False))
            return
        i, j = edges[k]
        for bit, (a, b) in ((0, (i, j)), (1, (j, i))):
            if reach[b] >> a & 1:
                continue
            dirs[k] = bit
            add = reach[b]
            new = [r | add if r >> a & 1 else r for r in reach]
            rec(k + 1, new)

    rec(0, [1 << v for v in range(n)])
    return out


# ---------------------------------------------------------------------------
# Graph families used by the verification suites

def all_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """Every labelled simple graph on ``0..n-1`` (optionally only connected ones)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
        if not connected or g.is_connected():
            yield g


def random_graph(n: int, p: float, rng: random.Random, connected: bool = False) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        g = Graph(n, tuple(e for e in pairs if rng.random() < p))
        if not connected or g.is_connected():
            return g


def all_acyclic_edge_sets(n: int) -> Iterator[DirectedEdgeSet]:
    """Every acyclic arc set on ``n`` vertices (no 2-cycles, no longer cycles)."""
    pairs = list(itertools.combinations(range(n), 2))
    # each unordered pair: absent, forward, backward
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                arcs.append((i, j))
            elif c == 2:
                arcs.append((j, i))
        d = DirectedEdgeSet(n, frozenset(arcs))
        if is_acyclic(d):
            yield d


def random_acyclic_edge_set(n: int, rng: random.Random, density: float | None = None) -> DirectedEdgeSet:
    """A random acyclic arc set: random vertex order, random forward pairs."""
    order = list(range(n))
    rng.shuffle(order)
    p = rng.random() if density is None else density
    arcs = [(order[a], order[b]) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
    return DirectedEdgeSet(n, frozenset(arcs))
