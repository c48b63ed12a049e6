"""Points of the torus R^V/Z^V and the fractional-part map to orientations."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .flips import ToricPoset, canonical
from .graph import Graph, GraphError, Orientation

# Mersenne prime; random numerators over it make arrangement hits negligible
DEFAULT_DENOMINATOR = 2**61 - 1


class OnArrangementError(GraphError):
    """The point lies on a hyperplane ``x_i = x_j (mod 1)`` for an edge ``{i, j}``."""

    def __init__(self, edge):
        super().__init__(f"point lies on the toric hyperplane of edge {edge}")
        self.edge = edge


@dataclass(frozen=True, init=False)
class TorusPoint:
    """Exact rational coordinates, each reduced to its fractional part in [0, 1)."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(Fraction(c) % 1 for c in coords))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def replace(self, i: int, value) -> TorusPoint:
        c = list(self.coords)
        c[i] = value
        return TorusPoint(c)


def alpha(g: Graph, x: TorusPoint) -> Orientation:
    """Direct each edge from the smaller fractional part to the larger."""
    if len(x) != g.n:
        raise GraphError(f"point has {len(x)} coordinates, graph has {g.n} vertices")
    dirs = []
    for i, j in g.edges:
        if x[i] == x[j]:
            raise OnArrangementError((i, j))
        dirs.append(0 if x[i] < x[j] else 1)
    return Orientation(g, tuple(dirs), check=False)


def point_for(w: Orientation) -> TorusPoint:
    """A point mapped to ``w``: place the k-th vertex of a linear extension at k/(n+1)."""
    n = w.graph.n
    coords = [Fraction(0)] * n
    for k, v in enumerate(w.linear_extension(), start=1):
        coords[v] = Fraction(k, n + 1)
    return TorusPoint(coords)


def flip_witness(w: Orientation, v: int, x: TorusPoint | None = None) -> TorusPoint:
    """Move source ``v`` of ``w`` just below 1, past all its neighbours.

    Starting from a point ``x`` over ``w`` (default :func:`point_for`), the
    coordinate of ``v`` travels down through 0 to ``1 - eps`` without
    meeting a neighbour, so the new point lies in the same toric chamber and
    maps to ``w`` with ``v`` flipped to a sink.
    """
    if not w.is_source(v):
        raise GraphError(f"vertex {v} is not a source")
    if x is None:
        x = point_for(w)
    top = max((x[u] for u in w.graph.neighbors[v]), default=Fraction(0))
    eps = (1 - top) / 2
    return x.replace(v, 1 - eps)


def random_point(n: int, rng: random.Random, denominator: int = DEFAULT_DENOMINATOR) -> TorusPoint:
    return TorusPoint(Fraction(rng.randrange(denominator), denominator) for _ in range(n))


def sample_classes(
    g: Graph,
    trials: int,
    seed: int = 0,
    denominator: int = DEFAULT_DENOMINATOR,
) -> dict[ToricPoset, int]:
    """Hit counts of toric chambers for uniformly random points off the arrangement.

    Points on the arrangement are rejected and redrawn.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    hits: Counter[tuple[int, ...]] = Counter()
    cache: dict[tuple[int, ...], tuple[int, ...]] = {}
    done = 0
    while done < trials:
        x = random_point(g.n, rng, denominator)
        try:
            w = alpha(g, x)
        except OnArrangementError:
            continue
        rep = cache.get(w.dirs)
        if rep is None:
            rep = canonical(w).rep.dirs
            cache[w.dirs] = rep
        hits[rep] += 1
        done += 1
    return {
        ToricPoset(g, Orientation(g, d, check=False)): hits[d]
        for d in sorted(hits)
    }
