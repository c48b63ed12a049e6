import itertools

import pytest

from conftest import orient
from toricposet.antichains import (
    KINDS,
    all_antichains,
    antichain_cover,
    chain_cover,
    is_antichain,
    is_combinatorial_antichain,
    is_geometric_antichain,
    max_antichain,
    max_chain,
    min_antichain_cover,
    min_chain_cover,
    min_set_cover,
    toric_width,
)
from toricposet.flips import canonical, flip_classes
from toricposet.graph import Graph
from toricposet.toric import all_toric_chains

C5 = Graph.cycle(5)
C6 = Graph.cycle(6)


@pytest.fixture
def c5_poset():
    # one long arc against four: nu = 1 on the 5-cycle
    return canonical(orient(C5, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)]))


@pytest.fixture
def c6_poset():
    return canonical(orient(C6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 4)]))


def subsets(n):
    for r in range(n + 1):
        yield from map(frozenset, itertools.combinations(range(n), r))


def brute_cover(n, family):
    family = [f for f in family if f]
    for k in range(n + 1):
        for pick in itertools.combinations(family, k):
            if frozenset().union(*pick) == frozenset(range(n)):
                return k
    raise AssertionError("no cover")


def test_c6_widths(c6_poset):
    assert c6_poset.class_size == 15
    assert toric_width(c6_poset, "combinatorial") == 3
    assert toric_width(c6_poset, "geometric") == 2
    assert is_combinatorial_antichain(c6_poset, {0, 2, 4})
    assert not is_geometric_antichain(c6_poset, {0, 2, 4})


def test_c5_covers_exceed_chain_and_width(c5_poset):
    assert c5_poset.class_size == 10
    assert len(max_chain(c5_poset)) == 2
    for kind in KINDS:
        assert toric_width(c5_poset, kind) == 2
        assert min_antichain_cover(c5_poset, kind) == 3
    assert min_chain_cover(c5_poset) == 3


def test_witnesses_are_valid(c5_poset, c6_poset):
    for P in (c5_poset, c6_poset):
        chains = all_toric_chains(P)
        assert max_chain(P) in chains
        cover = chain_cover(P)
        assert all(c in chains for c in cover)
        assert frozenset().union(*cover) == frozenset(range(P.n))
        for kind in KINDS:
            assert is_antichain(P, max_antichain(P, kind), kind)
            cov = antichain_cover(P, kind)
            assert all(is_antichain(P, a, kind) for a in cov)
            assert frozenset().union(*cov) == frozenset(range(P.n))


@pytest.mark.parametrize("g", [Graph.cycle(4), Graph.cycle(5), Graph.complete(4),
                               Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)])])
def test_against_brute_force(g):
    for P in flip_classes(g):
        chains = set(all_toric_chains(P))
        assert len(max_chain(P)) == max(len(c) for c in chains)
        assert min_chain_cover(P) == brute_cover(g.n, chains)
        for kind in KINDS:
            anti = [s for s in subsets(g.n) if is_antichain(P, s, kind)]
            assert sorted(all_antichains(P, kind), key=sorted) == sorted(anti, key=sorted)
            assert toric_width(P, kind) == max(map(len, anti))
            assert min_antichain_cover(P, kind) == brute_cover(g.n, anti)


def test_geometric_antichains_are_combinatorial():
    for g in [Graph.cycle(5), Graph.cycle(6), Graph.complete(4)]:
        for P in flip_classes(g):
            for s in all_antichains(P, "geometric"):
                assert is_combinatorial_antichain(P, s)


def test_partition_and_union_covers_agree(c5_poset):
    # toric chains are closed under subsets, so a union cover trims to a partition
    cover = chain_cover(c5_poset)
    chains = all_toric_chains(c5_poset)
    seen = set()
    parts = []
    for c in cover:
        parts.append(c - seen)
        seen |= c
    assert all(p in chains for p in parts)
    assert sum(map(len, parts)) == 5


def test_min_set_cover_basic():
    assert len(min_set_cover(4, [0b0011, 0b1100, 0b0110, 0b1001, 0b1111])) == 1
    assert len(min_set_cover(3, [0b001, 0b010, 0b100])) == 3
