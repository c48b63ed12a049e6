"""Exhaustive and sampled property suites, shared by ``toricposet verify`` and the tests.

Each suite returns a :class:`SuiteResult`; an empty ``violations`` list
means every checked instance passed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .closure import ordinary_closure, toric_closure, toric_closure_step
from .counting import count_check
from .cyclic import CyclicWord, cyclic_restriction
from .flips import ToricPoset, equivalent, flip_classes, nu_signature
from .geometry import alpha, point_for
from .graph import (
    DirectedEdgeSet,
    Graph,
    all_acyclic_edge_sets,
    all_graphs,
    enumerate_acyclic,
    orientation_from_order,
    random_acyclic_edge_set,
    random_graph,
    reachability,
)
from .toric import chain_order, is_toric_chain, toric_total_extensions

MAX_REPORTED = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    pairs: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, msg: str):
        if len(self.violations) < MAX_REPORTED:
            self.violations.append(msg)
        else:
            self.violations[-1] = f"... and more (last: {msg})"

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.violations)} violations"


def connected_graphs(max_n: int, min_n: int = 1) -> Iterable[Graph]:
    for n in range(min_n, max_n + 1):
        yield from all_graphs(n, connected=True)


# ---------------------------------------------------------------------------

def counting_suite(max_n: int) -> SuiteResult:
    """``|Acyc| = T(2,0)`` and ``#classes = T(1,0)`` on every connected graph."""
    res = SuiteResult("counting identities")
    for g in connected_graphs(max_n):
        c = count_check(g, strict=False)
        res.checked += 1
        if not c.ok:
            res.fail(f"{g.edges}: {c}")
    return res


def equivalence_suite(max_n: int, random_n: int = 7, random_graphs: int = 100, seed: int = 0) -> SuiteResult:
    """The nu-signature partition equals the breadth-first flip-class partition."""
    res = SuiteResult("nu-invariant vs flip classes")

    def check(g: Graph):
        classes = flip_classes(g)
        sig_to_class: dict[tuple, int] = {}
        for k, P in enumerate(classes):
            for w in P.members:
                s = nu_signature(w)
                if sig_to_class.setdefault(s, k) != k:
                    res.fail(f"{g.edges}: classes {sig_to_class[s]} and {k} share signature {s}")
            sigs = {nu_signature(w) for w in P.members}
            if len(sigs) != 1:
                res.fail(f"{g.edges}: class {k} has {len(sigs)} signatures")
        res.checked += 1

    for g in connected_graphs(max_n):
        check(g)
    rng = random.Random(seed)
    for _ in range(random_graphs if random_n else 0):
        check(random_graph(random_n, rng.uniform(0.25, 0.6), rng, connected=True))
    return res


def chain_condition_suite(max_n: int) -> SuiteResult:
    """Three descriptions of a toric chain agree on every vertex subset.

    * rep-wise: ``C`` is totally ordered in every representative, all orders
      in one cyclic class;
    * path: ``C`` lies on a toric directed path of some representative
      (:func:`is_toric_chain`);
    * extension: every toric total extension restricts to the same cyclic
      order on ``C``.  Skipped for ``|C| == 2``, where it is always true.
    """
    res = SuiteResult("toric chain conditions")
    for g in connected_graphs(max_n):
        for P in flip_classes(g):
            exts = toric_total_extensions(P)
            for r in range(g.n + 1):
                for C in itertools.combinations(range(g.n), r):
                    b = _repwise_order(P, C)
                    d = is_toric_chain(P, C)
                    res.checked += 1
                    if (b is None) != (d is None) or (b is not None and b != d):
                        res.fail(f"{g.edges} rep={P.rep.arcs} C={C}: rep-wise={b} path={d}")
                    if r != 2:
                        restr = {cyclic_restriction(w, C) for w in exts}
                        e = next(iter(restr)) if len(restr) == 1 else None
                        if e != d:
                            res.fail(f"{g.edges} rep={P.rep.arcs} C={C}: extension={e} path={d}")
    return res


def _repwise_order(P: ToricPoset, C) -> CyclicWord | None:
    if len(C) <= 1:
        return CyclicWord(C)
    words = set()
    for w in P.members:
        order = chain_order(w, C)
        if order is None:
            return None
        words.add(CyclicWord(order))
    return words.pop() if len(words) == 1 else None


def anti_exchange_violations(A: DirectedEdgeSet) -> tuple[int, list[str]]:
    """Check the anti-exchange law at ``A`` for every admissible pair of arcs.

    An arc ``x`` is admissible when ``x`` is outside the closure of ``A`` and
    ``A + x`` stays acyclic (the closure is only defined on acyclic sets).
    """
    cl = toric_closure(A)
    reach = reachability(A.n, A.successors())
    cands = [
        (i, j)
        for i in range(A.n)
        for j in range(A.n)
        if i != j and (i, j) not in cl.arcs and not reach[j] >> i & 1
    ]
    closed = {x: toric_closure(A | {x}).arcs for x in cands}
    checked = 0
    bad = []
    for a, b in itertools.permutations(cands, 2):
        checked += 1
        if a in closed[b] and b in closed[a]:
            bad.append(f"A={sorted(A.arcs)} a={a} b={b}")
    return checked, bad


def closure_suite(max_n: int) -> SuiteResult:
    """Closure-operator laws and anti-exchange on every acyclic arc set.

    Also confirms that a single pass of chord adding is already idempotent.
    """
    res = SuiteResult("toric closure laws")
    for n in range(1, max_n + 1):
        sets = list(all_acyclic_edge_sets(n))
        for A in sets:
            cl = toric_closure(A)
            if not A.arcs <= cl.arcs:
                res.fail(f"not extensive at {sorted(A.arcs)}")
            if toric_closure(cl).arcs != cl.arcs:
                res.fail(f"not idempotent at {sorted(A.arcs)}")
            if toric_closure_step(A).arcs != cl.arcs:
                res.fail(f"one pass is not enough at {sorted(A.arcs)}")
            if not cl.arcs <= ordinary_closure(A).arcs:
                res.fail(f"toric closure exceeds ordinary closure at {sorted(A.arcs)}")
            for x in A.arcs:
                # monotone along single-arc steps generates monotonicity on the lattice
                sub = A - {x}
                if not toric_closure(sub).arcs <= cl.arcs:
                    res.fail(f"not monotone: {sorted(sub.arcs)} <= {sorted(A.arcs)}")
            k, bad = anti_exchange_violations(A)
            res.checked += 1
            res.pairs += k
            for msg in bad:
                res.fail("anti-exchange " + msg)
    return res


def random_anti_exchange(n: int, cases: int, seed: int = 0) -> SuiteResult:
    """Anti-exchange on ``cases`` random acyclic arc sets, all admissible pairs each.

    ``checked`` counts arc sets; ``pairs`` the (a, b) pairs tested.
    """
    res = SuiteResult(f"anti-exchange, random n={n}")
    rng = random.Random(seed)
    for _ in range(cases):
        A = random_acyclic_edge_set(n, rng)
        k, bad = anti_exchange_violations(A)
        res.checked += 1
        res.pairs += k
        for msg in bad:
            res.fail(msg)
    return res


def geometry_suite(max_n: int) -> SuiteResult:
    """``alpha(point_for(w)) == w`` for every acyclic orientation of every graph."""
    res = SuiteResult("geometry round trip")
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            for w in enumerate_acyclic(g):
                res.checked += 1
                if alpha(g, point_for(w)) != w:
                    res.fail(f"{g.edges}: {w.arcs}")
    return res


def extension_suite(max_n: int) -> SuiteResult:
    """Rotation-flip correspondence, and ``(n-1)!`` total extensions for ``K_n``."""
    res = SuiteResult("toric total extensions")
    for n in range(1, max_n + 1):
        k = Graph.complete(n)
        total = sum(len(toric_total_extensions(P)) for P in flip_classes(k))
        res.checked += 1
        if total != math.factorial(n - 1):
            res.fail(f"K_{n}: {total} total extensions")
    for g in connected_graphs(min(max_n, 5)):
        for w in itertools.permutations(range(g.n)):
            res.checked += 1
            rot = w[1:] + w[:1]
            if not equivalent(orientation_from_order(g, w), orientation_from_order(g, rot)):
                res.fail(f"{g.edges}: rotating {w} leaves the class")
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "counting": counting_suite,
    "equivalence": lambda m: equivalence_suite(m, random_graphs=0),
    "chains": chain_condition_suite,
    "closure": lambda m: closure_suite(min(m, 4)),
    "geometry": geometry_suite,
    "extensions": extension_suite,
}


def run_all(max_n: int = 5, only: Iterable[str] | None = None) -> list[SuiteResult]:
    names = list(only) if only else list(SUITES)
    return [SUITES[name](max_n) for name in names]
