"""Command-line front end: ``toricposet <command> ...``.

Exit status: 0 on success, 1 when a checked property fails, 2 on malformed
input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable

from . import antichains, closure, counting, geometry, serialize as ser, toric, verify
from .flips import ToricPoset, canonical, flip_classes
from .graph import CyclicOrientationError, Graph, GraphError, enumerate_acyclic

DEFAULT_MAX_N = 10


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _max_n() -> int:
    raw = os.environ.get("TORIC_POSET_MAX_N", str(DEFAULT_MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"TORIC_POSET_MAX_N: expected an integer, got {raw!r}") from None


def _read_json(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON ({exc})") from None


def _load_graph(path: str) -> Graph:
    g = ser.graph_from_json(_read_json(path))
    cap = _max_n()
    if g.n > cap:
        raise CliError(f"n: graph has {g.n} vertices, above the TORIC_POSET_MAX_N cap of {cap}")
    return g


def _posets(args) -> tuple[Graph, list[ToricPoset], bool]:
    g = _load_graph(args.graph)
    if args.class_of:
        w = ser.orientation_from_json(g, _read_json(args.class_of))
        return g, [canonical(w)], True
    return g, flip_classes(g), False


def _per_poset(args, body: Callable[[ToricPoset], dict]) -> dict:
    g, posets, single = _posets(args)
    items = []
    for P in posets:
        item = {"rep": ser.orientation_to_json(P.rep)["arcs"], "class_size": P.class_size}
        item.update(body(P))
        items.append(item)
    if single:
        return items[0]
    return {"graph": ser.graph_to_json(g), "posets": items}


# ---------------------------------------------------------------------------
# commands

def cmd_acyc(args):
    g = _load_graph(args.graph)
    ws = enumerate_acyclic(g)
    if args.format == "dot":
        return "".join(ser.orientation_to_dot(w, f"omega{k}") for k, w in enumerate(ws))
    return {"graph": ser.graph_to_json(g), "count": len(ws), "orientations": [ser.orientation_to_json(w) for w in ws]}


def cmd_classes(args):
    g = _load_graph(args.graph)
    posets = flip_classes(g)
    if args.format == "dot":
        return "".join(ser.orientation_to_dot(P.rep, f"P{k + 1}") for k, P in enumerate(posets))
    return {
        "graph": ser.graph_to_json(g),
        "count": len(posets),
        "sizes": sorted(P.class_size for P in posets),
        "classes": [
            {"rep": ser.orientation_to_json(P.rep)["arcs"], "class_size": P.class_size}
            for P in posets
        ],
    }


def cmd_class_of(args):
    g = _load_graph(args.graph)
    w = ser.orientation_from_json(g, _read_json(args.orientation))
    P = canonical(w)
    if args.format == "dot":
        return ser.orientation_to_dot(P.rep)
    out = ser.toric_poset_to_json(P)
    if args.members:
        out["members"] = [ser.orientation_to_json(m)["arcs"] for m in P.members]
    return out


def _arcset(args):
    d, base = ser.arcset_from_json(_read_json(args.orientation))
    if base.n > _max_n():
        raise CliError(f"n: {base.n} vertices, above the TORIC_POSET_MAX_N cap")
    return d, base


def cmd_closure(args):
    d, base = _arcset(args)
    cl = closure.toric_closure(d)
    if args.format == "dot":
        return ser.arcs_to_dot(base, sorted(cl.arcs))
    out = ser.arcset_to_json(cl, base)
    out["added"] = ser.arcset_to_json(cl - d, base)["arcs"]
    return out


def cmd_hasse(args):
    d, base = _arcset(args)
    ext = closure.extreme_points(d)
    if args.format == "dot":
        return ser.arcs_to_dot(base, sorted(ext.arcs))
    out = ser.arcset_to_json(ext, base)
    out["removed"] = ser.arcset_to_json(d - ext, base)["arcs"]
    return out


def cmd_chains(args):
    def body(P):
        g = P.graph
        chains = toric.all_toric_chains(P)
        keys = sorted(chains, key=lambda c: (len(c), sorted(c)))
        return {
            "chains": [
                {"vertices": ser.vertex_set_to_json(g, c), "order": ser.cyclic_word_to_json(g, chains[c])}
                for c in keys
            ],
            "max_chain": len(keys[-1]) if keys else 0,
        }

    return _per_poset(args, body)


def cmd_extensions(args):
    def body(P):
        exts = sorted(toric.toric_total_extensions(P))
        return {"extensions": [ser.cyclic_word_to_json(P.graph, w) for w in exts]}

    return _per_poset(args, body)


def cmd_antichains(args):
    def body(P):
        sets = antichains.all_antichains(P, args.kind)
        sets.sort(key=lambda s: (len(s), sorted(s)))
        return {"kind": args.kind, "antichains": [ser.vertex_set_to_json(P.graph, s) for s in sets]}

    return _per_poset(args, body)


def cmd_width(args):
    def body(P):
        if args.kind == "chain":
            witness = antichains.max_chain(P)
        else:
            witness = antichains.max_antichain(P, args.kind)
        return {"kind": args.kind, "value": len(witness), "witness": ser.vertex_set_to_json(P.graph, witness)}

    return _per_poset(args, body)


def cmd_cover(args):
    def body(P):
        if args.kind == "chain":
            family = antichains.chain_cover(P)
        else:
            family = antichains.antichain_cover(P, args.kind)
        witness = sorted((ser.vertex_set_to_json(P.graph, s) for s in family), key=lambda s: (len(s), s))
        return {"kind": args.kind, "value": len(family), "witness": witness}

    return _per_poset(args, body)


def cmd_count(args):
    g = _load_graph(args.graph)
    res = counting.count_check(g, strict=False)
    args._status = 0 if res.ok else 1
    return {
        "acyclic": res.acyclic,
        "T(2,0)": res.t20,
        "classes": res.classes,
        "T(1,0)": res.t10,
        "tutte": str(counting.tutte(g)),
        "pass": res.ok,
    }


def cmd_sample(args):
    g = _load_graph(args.graph)
    if args.trials < 1:
        raise CliError("trials: must be positive")
    hits = geometry.sample_classes(g, args.trials, args.seed)
    return {
        "trials": args.trials,
        "seed": args.seed,
        "classes": [
            {"class_rep": ser.orientation_to_json(P.rep)["arcs"], "hits": k}
            for P, k in hits.items()
        ],
    }


def cmd_verify(args):
    if args.max_n < 1:
        raise CliError("max-n: must be at least 1")
    if args.max_n > _max_n():
        raise CliError(f"max-n: above the TORIC_POSET_MAX_N cap of {_max_n()}")
    lines = []
    status = 0
    for res in verify.run_all(args.max_n, args.suite):
        lines.append(res.line())
        lines += [f"  {v}" for v in res.violations]
        if not res.ok:
            status = 1
    args._status = status
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricposet", description="Computations with toric partial orders.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, aliases=(), graph=True, poset=False, fmt=False):
        sp = sub.add_parser(name, help=help, aliases=list(aliases))
        if graph:
            sp.add_argument("graph", help="graph JSON file, or - for stdin")
        if poset:
            sp.add_argument("--class-of", metavar="ORIENTATION",
                            help="orientation JSON selecting one toric poset (default: all of them)")
        if fmt:
            sp.add_argument("--format", choices=("json", "dot"), default="json")
        sp.set_defaults(func=func)
        return sp

    add("acyc", cmd_acyc, "list all acyclic orientations", fmt=True)
    add("classes", cmd_classes, "list the flip classes (toric posets)", fmt=True)
    sp = add("class-of", cmd_class_of, "canonical toric poset of an orientation", fmt=True)
    sp.add_argument("orientation", help="orientation JSON file")
    sp.add_argument("--members", action="store_true", help="also list the whole class")
    for name, func, help in (
        ("closure", cmd_closure, "toric transitive closure of an arc set"),
        ("hasse", cmd_hasse, "toric Hasse diagram (extreme points) of an arc set"),
    ):
        sp = add(name, func, help, aliases=(f"toric-{name}",), graph=False, fmt=True)
        sp.add_argument("orientation", help="orientation JSON file ({\"arcs\": [...]})")
    add("chains", cmd_chains, "toric chains with their cyclic orders", poset=True)
    add("extensions", cmd_extensions, "toric total extensions", poset=True)
    sp = add("antichains", cmd_antichains, "toric antichains", poset=True)
    sp.add_argument("--kind", choices=antichains.KINDS, default="combinatorial")
    sp = add("width", cmd_width, "largest toric antichain (or chain)", poset=True)
    sp.add_argument("--kind", choices=antichains.KINDS + ("chain",), default="combinatorial")
    sp = add("cover", cmd_cover, "fewest toric chains or antichains covering all vertices", poset=True)
    sp.add_argument("--kind", choices=("chain",) + antichains.KINDS, default="chain")
    add("count", cmd_count, "check |Acyc| = T(2,0) and #classes = T(1,0)")
    sp = add("sample", cmd_sample, "hit toric chambers with random rational points")
    sp.add_argument("--trials", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("verify", cmd_verify, "run the property suites", graph=False)
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--suite", action="append", choices=sorted(verify.SUITES),
                    help="run only this suite (repeatable)")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._status = 0
    try:
        out = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ser.InputError, CyclicOrientationError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        sys.stdout.write(ser.dumps(out))
    return args._status


def main():
    sys.exit(run())
