"""Tutte polynomial by deletion-contraction, and the chamber counting identities."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .flips import flip_classes
from .graph import Graph


class Polynomial2:
    """Bivariate polynomial with integer coefficients, ``{(deg_x, deg_y): coeff}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def one(cls) -> Polynomial2:
        return cls({(0, 0): 1})

    def __add__(self, other: Polynomial2) -> Polynomial2:
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return Polynomial2(out)

    def shift(self, dx: int = 0, dy: int = 0) -> Polynomial2:
        """Multiply by ``x**dx * y**dy``."""
        return Polynomial2({(a + dx, b + dy): c for (a, b), c in self.coeffs.items()})

    def __call__(self, x, y):
        return sum(c * x**a * y**b for (a, b), c in self.coeffs.items())

    def __eq__(self, other):
        if isinstance(other, Polynomial2):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return f"Polynomial2({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (a, b), c in sorted(self.coeffs.items(), key=lambda t: (-t[0][0], -t[0][1])):
            mono = "*".join(
                s for s in (_power("x", a), _power("y", b)) if s
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


@dataclass(frozen=True)
class Multigraph:
    """Loops and parallel edges allowed; only used while contracting."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_graph(cls, g: Graph) -> Multigraph:
        return cls(g.n, g.edges)

    def delete(self, k: int) -> Multigraph:
        return Multigraph(self.n, self.edges[:k] + self.edges[k + 1:])

    def contract(self, k: int) -> Multigraph:
        """Merge the endpoints of edge ``k`` (the larger index into the smaller)."""
        i, j = self.edges[k]
        keep, gone = min(i, j), max(i, j)

        def f(v):
            v = keep if v == gone else v
            return v - 1 if v > gone else v

        rest = self.edges[:k] + self.edges[k + 1:]
        return Multigraph(self.n - 1, tuple(_norm(f(a), f(b)) for a, b in rest))

    def connected(self, a: int, b: int, skip: int) -> bool:
        """Whether ``a`` and ``b`` are joined without using edge ``skip``."""
        adj: dict[int, list[int]] = {}
        for k, (u, v) in enumerate(self.edges):
            if k == skip:
                continue
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen = {a}
        todo = [a]
        while todo:
            u = todo.pop()
            if u == b:
                return True
            for v in adj.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return b in seen


def _norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _memo_key(mg: Multigraph) -> tuple:
    """Relabel by refined degree classes; keep the exact labelling when ties remain.

    Isolated vertices never affect the Tutte polynomial and are dropped.
    """
    used = sorted({v for e in mg.edges for v in e})
    deg = Counter(v for e in mg.edges for v in e)
    colour = {v: deg[v] for v in used}
    adj: dict[int, list[int]] = {v: [] for v in used}
    for a, b in mg.edges:
        adj[a].append(b)
        if a != b:
            adj[b].append(a)
    for _ in range(len(used)):
        sig = {v: (colour[v], tuple(sorted(colour[u] for u in adj[v]))) for v in used}
        ranks = {s: r for r, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in used}
        if len(set(new.values())) == len(set(colour.values())):
            colour = new
            break
        colour = new
    if len(set(colour.values())) == len(used):
        relabel = colour
    else:
        relabel = {v: k for k, v in enumerate(used)}
        return ("raw", tuple(sorted(_norm(relabel[a], relabel[b]) for a, b in mg.edges)))
    return ("canon", tuple(sorted(_norm(relabel[a], relabel[b]) for a, b in mg.edges)))


def _tutte(mg: Multigraph, memo: dict) -> Polynomial2:
    if not mg.edges:
        return Polynomial2.one()
    key = _memo_key(mg)
    hit = memo.get(key)
    if hit is not None:
        return hit
    # peel loops, then bridges, before splitting on the smallest edge
    loops = [k for k, (a, b) in enumerate(mg.edges) if a == b]
    if loops:
        result = _tutte(mg.delete(loops[0]), memo).shift(dy=1)
    else:
        order = sorted(range(len(mg.edges)), key=lambda k: mg.edges[k])
        bridge = next((k for k in order if not mg.connected(*mg.edges[k], skip=k)), None)
        if bridge is not None:
            result = _tutte(mg.contract(bridge), memo).shift(dx=1)
        else:
            k = order[0]
            result = _tutte(mg.delete(k), memo) + _tutte(mg.contract(k), memo)
    memo[key] = result
    return result


def tutte(g: Graph | Multigraph) -> Polynomial2:
    mg = g if isinstance(g, Multigraph) else Multigraph.from_graph(g)
    return _tutte(mg, {})


class CountCheck(NamedTuple):
    acyclic: int
    t20: int
    classes: int
    t10: int

    @property
    def ok(self) -> bool:
        return self.acyclic == self.t20 and self.classes == self.t10


class CountingIdentityError(AssertionError):
    pass


def count_check(g: Graph, strict: bool = True) -> CountCheck:
    """``(|Acyc(G)|, T(2,0), |Acyc(G)/flips|, T(1,0))``.

    Raises :class:`CountingIdentityError` on a mismatch unless ``strict`` is off.
    """
    classes = flip_classes(g)
    a = sum(P.class_size for P in classes)
    t = tutte(g)
    res = CountCheck(a, t(2, 0), len(classes), t(1, 0))
    if strict and not res.ok:
        raise CountingIdentityError(f"counting identity fails: {res}")
    return res

