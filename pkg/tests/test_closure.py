import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import C4, orient
from toricposet.closure import (
    chamber_graphs,
    chord_removal,
    closure_poset,
    extreme_points,
    graphs_between,
    ordinary_closure,
    same_chamber,
    toric_closure,
    toric_closure_step,
    toric_hasse,
)
from toricposet.flips import canonical, flip_classes
from toricposet.graph import CyclicOrientationError, DirectedEdgeSet, Graph, random_acyclic_edge_set
from toricposet.verify import anti_exchange_violations


def arcs(*pairs):
    return DirectedEdgeSet(4, frozenset(pairs))


def test_p1_closure_adds_two_chords(p1):
    A = p1.rep.edge_set()
    cl = toric_closure(A)
    assert cl.arcs - A.arcs == {(0, 2), (1, 3)}
    assert toric_closure_step(A) == cl
    assert extreme_points(cl) == A
    assert chord_removal(cl) == A


def test_p1_chamber_graphs(p1):
    hasse, full = graphs_between(p1)
    assert hasse == C4 and full == Graph.complete(4)
    gs = chamber_graphs(p1)
    assert len(gs) == 4
    assert all(C4.is_edge_subgraph_of(g) for g in gs)


def test_chamber_preserved_by_restriction(p1):
    for g in chamber_graphs(p1):
        cl = closure_poset(p1)
        Q = canonical(cl.rep.restrict(g))
        assert same_chamber(Q, p1)


def test_p3_is_closed_and_hasse(p3):
    A = p3.rep.edge_set()
    assert toric_closure(A) == A
    assert extreme_points(A) == A
    assert len(chamber_graphs(p3)) == 1


def test_cyclic_input_rejected():
    with pytest.raises(CyclicOrientationError):
        toric_closure(arcs((0, 1), (1, 2), (2, 0)))


def test_triangle_closure_is_not_ordinary():
    A = DirectedEdgeSet(3, frozenset({(0, 1), (1, 2)}))
    assert toric_closure(A) == A
    assert ordinary_closure(A).arcs == {(0, 1), (1, 2), (0, 2)}


def test_closure_and_hasse_do_not_depend_on_representative():
    for g in [Graph.cycle(5), Graph.complete(4), Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)])]:
        for P in flip_classes(g):
            cl = closure_poset(P)
            h = toric_hasse(P)
            for w in P.members:
                Q = canonical(w)
                assert closure_poset(Q) == cl and toric_hasse(Q) == h


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_closure_laws_random(n, density, seed):
    A = random_acyclic_edge_set(n, random.Random(seed), density)
    cl = toric_closure(A)
    assert A <= cl <= ordinary_closure(A)
    assert toric_closure(cl) == cl
    assert toric_closure(extreme_points(A)) == cl
    assert extreme_points(cl) == extreme_points(A)
    assert extreme_points(cl) == chord_removal(cl)
    for x in A:
        assert toric_closure(A - {x}) <= cl


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10**6))
def test_anti_exchange_random(n, seed):
    _, bad = anti_exchange_violations(random_acyclic_edge_set(n, random.Random(seed)))
    assert bad == []
