import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import orient
from toricposet.cyclic import CyclicWord
from toricposet.flips import canonical, flip_classes
from toricposet.graph import Graph, GraphError, orientation_from_order, random_graph
from toricposet.toric import (
    all_toric_chains,
    chain_order,
    is_toric_chain,
    is_toric_extension,
    toric_directed_paths,
    toric_total_extensions,
)


def test_total_extensions_of_c4(p1, p2, p3):
    assert toric_total_extensions(p1) == {CyclicWord((0, 1, 2, 3))}
    assert toric_total_extensions(p2) == {CyclicWord((0, 3, 2, 1))}
    assert toric_total_extensions(p3) == {
        CyclicWord(w) for w in [(0, 1, 3, 2), (0, 2, 1, 3), (0, 2, 3, 1), (0, 3, 1, 2)]
    }


def test_total_extensions_partition_all_words():
    for g in [Graph.cycle(4), Graph.complete(4), Graph(5, [(0, 1), (1, 2), (2, 0), (3, 4)])]:
        seen = []
        for P in flip_classes(g):
            seen += list(toric_total_extensions(P))
        assert len(seen) == len(set(seen)) == (24 if g.n == 5 else 6)


def test_toric_paths_c4(p1):
    paths = toric_directed_paths(p1.rep)
    assert (0, 1, 2, 3) in paths
    assert all(len(p) >= 2 for p in paths)


def test_chains_of_p1(p1):
    chains = all_toric_chains(p1)
    assert chains[frozenset(range(4))] == (0, 1, 2, 3)
    assert chains[frozenset({0, 2})] == (0, 2)
    assert frozenset() in chains


def test_p3_has_no_spanning_chain(p3):
    assert is_toric_chain(p3, range(4)) is None
    assert max(len(c) for c in all_toric_chains(p3)) == 2


def test_chain_order_incomparable(p3):
    assert chain_order(p3.rep, [0, 2]) in (None, (0, 2), (2, 0))
    assert chain_order(p3.rep, [1, 3]) is None


def test_bad_vertex(p1):
    with pytest.raises(GraphError):
        is_toric_chain(p1, [7])


def test_chains_independent_of_representative():
    g = Graph.cycle(5)
    for P in flip_classes(g):
        base = {c: is_toric_chain(P, c) for c in map(frozenset, itertools.combinations(range(5), 3))}
        for w in P.members:
            Q = canonical(w)
            assert {c: is_toric_chain(Q, c) for c in base} == base


def test_triangles_determined():
    words = {CyclicWord((0, 1, 2)), CyclicWord((0, 2, 1))}
    graphs = [Graph(3, e) for r in range(3) for e in itertools.combinations([(0, 1), (1, 2), (0, 2)], r)]
    assert len(graphs) == 7
    for g in graphs:
        (P,) = flip_classes(g)
        assert toric_total_extensions(P) == words
    assert len(flip_classes(Graph.complete(3))) == 2


def test_extension_edge_subgraph():
    k4 = Graph.complete(4)
    c4 = Graph.cycle(4)
    for Q in flip_classes(k4):
        hits = [P for P in flip_classes(c4) if is_toric_extension(Q, P)]
        assert len(hits) == 1
        assert toric_total_extensions(Q) <= toric_total_extensions(hits[0])


def test_extension_requires_subgraph():
    a = flip_classes(Graph(3, [(0, 1)]))[0]
    b = flip_classes(Graph(3, [(1, 2)]))[0]
    with pytest.raises(NotImplementedError):
        is_toric_extension(a, b)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 6), st.integers(0, 10**6))
def test_path_subsequences_are_chains(n, seed):
    rng = random.Random(seed)
    g = random_graph(n, 0.6, rng, connected=True)
    w = orientation_from_order(g, rng.sample(range(n), n))
    P = canonical(w)
    for path in toric_directed_paths(w):
        for r in range(len(path) + 1):
            for sub in itertools.combinations(path, r):
                assert is_toric_chain(P, sub) == CyclicWord(sub)
