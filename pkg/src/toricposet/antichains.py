"""Toric antichains (combinatorial and geometric), widths and covers."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Literal

from .flips import ToricPoset
from .toric import _check_vertices, all_toric_chains

Kind = Literal["combinatorial", "geometric"]
KINDS = ("combinatorial", "geometric")


def _kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


@lru_cache(maxsize=128)
def _chains(P: ToricPoset) -> dict:
    return all_toric_chains(P)


@lru_cache(maxsize=128)
def _chain_pairs(P: ToricPoset) -> frozenset[frozenset[int]]:
    return frozenset(c for c in _chains(P) if len(c) == 2)


def is_combinatorial_antichain(P: ToricPoset, A: Iterable[int]) -> bool:
    """No two elements of ``A`` lie on a common toric chain."""
    A = _check_vertices(P, A)
    pairs = _chain_pairs(P)
    return not any(frozenset(p) in pairs for p in combinations(A, 2))


def is_geometric_antichain(P: ToricPoset, A: Iterable[int]) -> bool:
    """``A`` is an ordinary antichain of P(G, w') for some ``w'`` in the class."""
    A = sorted(_check_vertices(P, A))
    for w in P.members:
        if not any(w.comparable(i, j) for i, j in combinations(A, 2)):
            return True
    return False


def is_antichain(P: ToricPoset, A: Iterable[int], kind: Kind) -> bool:
    if _kind(kind) == "combinatorial":
        return is_combinatorial_antichain(P, A)
    return is_geometric_antichain(P, A)


def _masks_to_sets(masks, n):
    return [frozenset(v for v in range(n) if m >> v & 1) for m in masks]


@lru_cache(maxsize=128)
def _antichain_masks(P: ToricPoset, kind: str) -> tuple[int, ...]:
    """Bitmasks of all antichains of the given kind (a down-closed family)."""
    n = P.graph.n
    if kind == "combinatorial":
        bad = [sum(1 << v for v in p) for p in _chain_pairs(P)]
        return tuple(m for m in range(1 << n) if not any(m & b == b for b in bad))
    # incomparability patterns of each representative, deduplicated
    comp_sets = set()
    for w in P.members:
        comp_sets.add(tuple(w.reach[v] | _up(w, v) for v in range(n)))
    out = []
    for m in range(1 << n):
        for comp in comp_sets:
            if all(not (m >> v & 1) or not (comp[v] & m) for v in range(n)):
                out.append(m)
                break
    return tuple(out)


def _up(w, v):
    return sum(1 << u for u in range(w.graph.n) if w.reach[u] >> v & 1)


def all_antichains(P: ToricPoset, kind: Kind) -> list[frozenset[int]]:
    return _masks_to_sets(_antichain_masks(P, _kind(kind)), P.graph.n)


def max_antichain(P: ToricPoset, kind: Kind) -> frozenset[int]:
    """A largest antichain of the given kind (smallest bitmask among the largest)."""
    masks = _antichain_masks(P, _kind(kind))
    best = max(masks, key=lambda m: (bin(m).count("1"), -m))
    return _masks_to_sets([best], P.graph.n)[0]


def toric_width(P: ToricPoset, kind: Kind) -> int:
    return len(max_antichain(P, kind))


def max_chain(P: ToricPoset) -> frozenset[int]:
    return max(_chains(P), key=lambda c: (len(c), sorted(c)))


def _maximal(masks: Iterable[int]) -> list[int]:
    masks = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    keep: list[int] = []
    for m in masks:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


def min_set_cover(n: int, family: list[int]) -> list[int]:
    """Fewest members of ``family`` whose union is ``0..n-1`` (branch and bound).

    ``family`` must cover every vertex.  Returns the chosen bitmasks.
    """
    if n == 0:
        return []
    full = (1 << n) - 1
    containing = [[f for f in family if f >> v & 1] for v in range(n)]
    if any(not c for c in containing):
        raise ValueError("family does not cover every vertex")
    largest = max(bin(f).count("1") for f in family)
    best: list[int] | None = None

    def rec(covered: int, chosen: list[int]):
        nonlocal best
        if covered == full:
            if best is None or len(chosen) < len(best):
                best = list(chosen)
            return
        left = bin(full & ~covered).count("1")
        if best is not None and len(chosen) + -(-left // largest) >= len(best):
            return
        # branch on the uncovered vertex with the fewest options
        v = min((u for u in range(n) if not covered >> u & 1), key=lambda u: len(containing[u]))
        for f in sorted(containing[v], key=lambda f: -bin(f & ~covered).count("1")):
            chosen.append(f)
            rec(covered | f, chosen)
            chosen.pop()

    rec(0, [])
    return best


def chain_cover(P: ToricPoset) -> list[frozenset[int]]:
    """A smallest family of toric chains whose union is every vertex."""
    n = P.graph.n
    family = _maximal(sum(1 << v for v in c) for c in _chains(P) if c)
    return _masks_to_sets(min_set_cover(n, family), n)


def antichain_cover(P: ToricPoset, kind: Kind) -> list[frozenset[int]]:
    """A smallest family of toric antichains of the given kind whose union is every vertex."""
    n = P.graph.n
    family = _maximal(m for m in _antichain_masks(P, _kind(kind)) if m)
    return _masks_to_sets(min_set_cover(n, family), n)


def min_chain_cover(P: ToricPoset) -> int:
    return len(chain_cover(P))


def min_antichain_cover(P: ToricPoset, kind: Kind) -> int:
    return len(antichain_cover(P, kind))
