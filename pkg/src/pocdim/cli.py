"""Command line interface: ``pocdim <command> ...``.

Exit codes: 0 success or pass, 1 negative result (recognition false,
verification failed, violations found), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Any, Optional, Sequence

from . import formats
from .analysis import (
    classify_dimension,
    extract_tail_biting_clique,
    harness_corner,
    harness_diamond,
    harness_hbar,
    harness_paths,
    harness_transitivity,
)
from .analysis.lemmas import DEFAULT_GRID_N, HarnessReport
from .builder import (
    build_block_representation,
    clique_layout,
    to_partial_order,
    verify_representation,
)
from .exactgeom import Apex
from .formats import FormatError
from .graphs import (
    catalog,
    find_asteroidal_triple,
    find_chordless_cycle,
    find_diamond,
    gen_gn,
    gen_hbar,
    gen_random_block,
    is_block_graph,
    is_caterpillar,
    is_chordal,
    is_diamond_free,
    is_interval,
)
from .poset import PointSet, competition_graph, equals_with_isolated
from .render import render_svg

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------------
# io
# ----------------------------------------------------------------------------

def _read(path: Optional[str]) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from exc


def _read_json(path: Optional[str]) -> Any:
    return formats.parse_json(_read(path))


def _emit(args, payload: Any) -> None:
    text = payload if isinstance(payload, str) else formats.dumps(payload)
    if args.out and args.out != "-":
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError("cannot write %s: %s" % (args.out, exc.strerror)) from exc
    else:
        sys.stdout.write(text)


def _kind(obj: Any) -> str:
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    kind = obj.get("kind")
    if kind:
        return kind
    if "family" in obj:
        return "family"
    if "points" in obj:
        return "pointset"
    if "vertices" in obj:
        return "graph"
    raise FormatError("cannot tell what kind of document this is")


def _pointset_of(obj: Any) -> PointSet:
    return formats.pointset_from_json(obj)


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.what == "gn":
        if args.n is None:
            raise UsageError("gen gn needs --n")
        G = gen_gn(args.n)
    elif args.what == "hbar":
        G = gen_hbar()
    elif args.what == "block":
        G = gen_random_block(args.n or 10, args.seed)
    else:
        cat = catalog()
        if args.name:
            if args.name not in cat:
                raise UsageError("unknown catalog graph %r (have: %s)" % (args.name, ", ".join(cat)))
            G = cat[args.name]
        else:
            _emit(args, formats.document("catalog", graphs={k: formats.graph_to_json(g) for k, g in cat.items()}))
            return OK
    _emit(args, formats.graph_to_json(G))
    return OK


_RECOGNIZERS = {
    "chordal": lambda G: (is_chordal(G)[0], {"chordless_cycle": find_chordless_cycle(G)}),
    "diamond-free": lambda G: (is_diamond_free(G), {"diamond": find_diamond(G)}),
    "block": lambda G: (is_block_graph(G), {}),
    "interval": lambda G: (is_interval(G), {"asteroidal_triple": find_asteroidal_triple(G),
                                             "chordless_cycle": find_chordless_cycle(G)}),
    "caterpillar": lambda G: (is_caterpillar(G), {}),
}


def cmd_recognize(args) -> int:
    G = formats.load_graph(_read(args.input))
    result, witness = _RECOGNIZERS[args.prop](G)
    witness = {k: list(v) for k, v in witness.items() if v is not None}
    _emit(args, formats.document("recognition", property=args.prop, result=result, witness=witness))
    return OK if result else NEGATIVE


def cmd_compgraph(args) -> int:
    obj = _read_json(args.input)
    C = competition_graph(_pointset_of(obj))
    _emit(args, formats.graph_to_json(C))
    return OK


def cmd_represent(args) -> int:
    G = formats.load_graph(_read(args.input))
    if not is_block_graph(G):
        _emit(args, formats.document("failure", reason="not a block graph", diamond=find_diamond(G),
                                 chordless_cycle=find_chordless_cycle(G)))
        return NEGATIVE
    fam = build_block_representation(G)
    _emit(args, formats.family_to_json(fam, G))
    return OK


def _family_and_graph(args, obj):
    fam, G = formats.family_from_json(obj)
    if args.graph:
        G = formats.load_graph(_read(args.graph))
    if G is None:
        raise UsageError("family carries no graph; pass --graph")
    return fam, G


def cmd_to_poset(args) -> int:
    fam, G = _family_and_graph(args, _read_json(args.input))
    try:
        rep = to_partial_order(fam, G)
    except ValueError as exc:
        _emit(args, formats.document("failure", reason=str(exc)))
        return NEGATIVE
    _emit(args, formats.representation_to_json(rep))
    return OK


def cmd_classify(args) -> int:
    G = formats.load_graph(_read(args.input))
    b = classify_dimension(G, search_budget=args.budget or 0, seed=args.seed)
    _emit(args, formats.dimbound_to_json(b))
    return OK


def cmd_verify(args) -> int:
    if not args.graph:
        raise UsageError("verify needs --graph")
    G = formats.load_graph(_read(args.graph))
    obj = _read_json(args.input)
    kind = _kind(obj)
    out: dict = {"input_kind": kind}
    if kind == "family":
        fam, _ = formats.family_from_json(obj)
        rep = verify_representation(fam, G)
        doc = formats.verification_to_json(rep)
        doc["input_kind"] = kind
        _emit(args, doc)
        return OK if rep.ok else NEGATIVE
    if kind == "graph":
        C = formats.graph_from_json(obj)
    elif kind in ("pointset", "representation"):
        C = competition_graph(_pointset_of(obj))
    else:
        raise FormatError("cannot verify a %r document" % kind)
    m = equals_with_isolated(C, G)
    out.update(ok=m.ok, isolated_extra=m.extra, problem=m.problem)
    if kind == "representation":
        rep = formats.representation_from_json(obj)
        out["certificates"] = formats.certificates_to_json(rep.certificates)
    _emit(args, formats.document("verification", **out))
    return OK if m.ok else NEGATIVE


def _harness_roundtrip(samples: int, seed: int, max_n: int = 40) -> HarnessReport:
    rng = random.Random(seed)
    rep = HarnessReport("roundtrip")
    for _ in range(samples):
        n = rng.randint(1, max_n)
        s = rng.randrange(1 << 30)
        G = gen_random_block(n, s)
        rep.samples += 1
        rep.hypotheses_met += 1
        fam = build_block_representation(G)
        ok = verify_representation(fam, G).ok
        if ok:
            R = to_partial_order(fam, G)
            m = equals_with_isolated(competition_graph(R.point_set()), G)
            ok = m.ok and m.extra == len(G.edges)
        if not ok:
            rep.violations += 1
            if rep.first_violation is None:
                rep.first_violation = {"n": n, "seed": s}
    return rep


def cmd_harness(args) -> int:
    samples = args.samples or 1000
    if args.which == "diamond":
        reports = [harness_diamond(samples, args.seed, args.grid_n)]
    elif args.which == "hbar":
        reports = [harness_hbar(samples, args.seed)]
    elif args.which == "paths":
        reports = list(harness_paths(samples, args.seed, args.grid_n))
    elif args.which == "corner":
        reports = [harness_corner(samples, args.seed, args.grid_n)]
    elif args.which == "transitivity":
        reports = [harness_transitivity(samples, args.seed, args.grid_n)]
    else:
        reports = [_harness_roundtrip(samples, args.seed)]
    docs = [formats.harness_to_json(r) for r in reports]
    _emit(args, docs[0] if len(docs) == 1 else formats.document("harness-set", reports=docs))
    return OK if all(r.violations == 0 for r in reports) else NEGATIVE


def cmd_extract(args) -> int:
    if args.n is None or args.n < 2:
        raise UsageError("extract-clique needs --n m with m >= 2")
    S = _pointset_of(_read_json(args.input))
    try:
        found = extract_tail_biting_clique(S, args.n)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if found is None:
        _emit(args, formats.document("extraction", found=False, m=args.n))
        return NEGATIVE
    seq, k = found
    _emit(args, formats.document("extraction", found=True, m=args.n, sequence=seq, type=k))
    return OK


def cmd_plot(args) -> int:
    if args.input:
        obj = _read_json(args.input)
        kind = _kind(obj)
        if kind == "representation":
            apexes = formats.representation_from_json(obj).family.apexes
        elif kind == "family":
            apexes = formats.family_from_json(obj)[0].apexes
        else:
            raise FormatError("plot needs a family or representation document")
        title = "triangle family"
    else:
        if args.n is None or args.type_k is None:
            raise UsageError("plot needs --in, or --n and --type-k for a clique layout")
        if args.type_k not in (1, 2, 3) or args.n < 1:
            raise UsageError("--type-k must be 1, 2 or 3 and --n positive")
        labels = ["v%d" % i for i in range(1, args.n + 1)]
        apexes = clique_layout(labels, Apex(1, 1, 1), args.type_k).apexes
        title = "tail-biting layout, type %d" % args.type_k
    try:
        svg = render_svg(apexes, highlight=args.highlight, title=title)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, svg)
    return OK


# ----------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pocdim", description="Competition graphs of 3-partial orders and triangle representations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=False):
        sp.add_argument("--in", dest="input", default=None, help="input file (default stdin)")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--seed", type=int, default=0)
        if graph:
            sp.add_argument("--graph", default=None, help="target graph file")
        return sp

    g = common(sub.add_parser("gen", help="generate graphs"))
    g.add_argument("what", choices=("gn", "hbar", "block", "catalog"))
    g.add_argument("--n", type=int)
    g.add_argument("--name")
    g.set_defaults(func=cmd_gen)

    r = common(sub.add_parser("recognize", help="test a graph property"))
    r.add_argument("prop", choices=tuple(_RECOGNIZERS))
    r.set_defaults(func=cmd_recognize)

    common(sub.add_parser("compgraph", help="competition graph of a point set")).set_defaults(func=cmd_compgraph)
    common(sub.add_parser("represent", help="triangle family of a block graph")).set_defaults(func=cmd_represent)
    common(sub.add_parser("to-poset", help="family to 3-partial order"), graph=True).set_defaults(func=cmd_to_poset)

    c = common(sub.add_parser("classify", help="bounds on the dimension"))
    c.add_argument("--budget", type=int, default=0, help="search budget for unresolved graphs")
    c.set_defaults(func=cmd_classify)

    common(sub.add_parser("verify", help="check a family, point set or graph against --graph"),
           graph=True).set_defaults(func=cmd_verify)

    h = common(sub.add_parser("harness", help="run a lemma harness"))
    h.add_argument("which", choices=("diamond", "hbar", "roundtrip", "paths", "corner", "transitivity"))
    h.add_argument("--samples", type=int)
    h.add_argument("--grid-n", type=int, default=DEFAULT_GRID_N)
    h.set_defaults(func=cmd_harness)

    e = common(sub.add_parser("extract-clique", help="tail-biting clique from a point set"))
    e.add_argument("--n", type=int, help="clique size m")
    e.set_defaults(func=cmd_extract)

    pl = common(sub.add_parser("plot", help="SVG of a triangle family"))
    pl.add_argument("--n", type=int)
    pl.add_argument("--type-k", type=int)
    pl.add_argument("--highlight")
    pl.set_defaults(func=cmd_plot)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # FormatError is a ValueError; so are the constructors' input checks
        print("error: %s" % exc, file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
