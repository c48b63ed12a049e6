import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import C4
from toricposet.flips import canonical, equivalent, flip_classes
from toricposet.geometry import (
    OnArrangementError,
    TorusPoint,
    alpha,
    flip_witness,
    point_for,
    sample_classes,
)
from toricposet.graph import Graph, GraphError, enumerate_acyclic, orientation_from_order, random_graph


def test_reduction_mod_one():
    x = TorusPoint([Fraction(3, 2), -Fraction(1, 4), 2])
    assert x.coords == (Fraction(1, 2), Fraction(3, 4), 0)


def test_round_trip_c4():
    for w in enumerate_acyclic(C4):
        assert alpha(C4, point_for(w)) == w


def test_on_arrangement():
    with pytest.raises(OnArrangementError) as e:
        alpha(C4, TorusPoint([0, Fraction(1, 2), Fraction(3, 2), 0]))
    assert e.value.edge in {(1, 2), (0, 3)}


def test_wrong_dimension():
    with pytest.raises(GraphError):
        alpha(C4, TorusPoint([0, 0]))


def test_flip_witness(p1):
    w = p1.rep
    for v in range(4):
        if w.is_source(v):
            y = flip_witness(w, v)
            assert alpha(C4, y) == w.flip(v)
    with pytest.raises(GraphError):
        flip_witness(w, next(v for v in range(4) if not w.is_source(v)))


def is_bridge(g, e):
    rest = Graph(g.n, [f for f in g.edges if f != e])
    comp = {e[0]}
    todo = [e[0]]
    while todo:
        u = todo.pop()
        for v in rest.neighbors[u]:
            if v not in comp:
                comp.add(v)
                todo.append(v)
    return e[1] not in comp


@pytest.mark.parametrize("g", [Graph.cycle(4), Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]), Graph.complete(4)])
def test_single_wall_crossing(g):
    # nudge x_v just past one neighbour: the class survives exactly when that edge is a bridge
    step = Fraction(1, 2 * (g.n + 1))
    for w in enumerate_acyclic(g):
        x = point_for(w)
        for v in range(g.n):
            for u in g.neighbors[v]:
                if x[u] < x[v]:
                    continue
                y = x.replace(v, x[u] + step)
                u2 = alpha(g, y)
                diff = [e for k, e in enumerate(g.edges) if u2.dirs[k] != w.dirs[k]]
                between = [t for t in g.neighbors[v] if x[v] < x[t] < x[u]]
                if between:
                    continue
                assert diff == [tuple(sorted((u, v)))]
                assert equivalent(u2, w) == is_bridge(g, diff[0])


def test_sampling_c4():
    hits = sample_classes(C4, 10_000, seed=1)
    assert len(hits) == 3
    assert sum(hits.values()) == 10_000
    assert set(hits) == set(flip_classes(C4))


def test_sampling_k3_balanced():
    hits = sample_classes(Graph.complete(3), 10_000, seed=2)
    a, b = hits.values()
    assert abs(a / 10_000 - 0.5) < 0.05


def test_sampling_deterministic():
    assert sample_classes(C4, 500, seed=7) == sample_classes(C4, 500, seed=7)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 7), st.integers(0, 10**6))
def test_round_trip_random(n, seed):
    rng = random.Random(seed)
    g = random_graph(n, 0.5, rng)
    w = orientation_from_order(g, rng.sample(range(n), n))
    x = point_for(w)
    assert alpha(g, x) == w
    shifted = TorusPoint([c + Fraction(1, 3) for c in x.coords])
    assert equivalent(alpha(g, shifted), w)
