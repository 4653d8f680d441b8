"""Command-line surface.

Exit codes: 0 = yes/success, 1 = no, 2 = usage or input error.  With
``--machine``, decision commands print ``VERDICT true|false`` plus
``WITNESS ...`` lines; otherwise the output is a short sentence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileio, harness
from .gadgets import (
    NoGadgetFound,
    dagiso_gadget,
    derive_fig1_fixture,
    derive_gadget_J,
    embed_in_oclique,
    fullorient_gadget,
    has_homfull_orientation,
    has_oclique_orientation,
    homfull_gadget,
    quasi_transitive_orientation,
)
from .generate import (
    bn_oclique,
    homfull_graph_generator,
    random_dag,
    random_oriented_graph,
    regular_tournament,
)
from .graphs import (
    Graph,
    GraphError,
    OrientedGraph,
    closure,
    complete_graph,
    cycle_graph,
    directed_cycle,
    directed_path,
    empty_graph,
    path_graph,
    transitive_tournament,
)
from .homomorphisms import complete_images, oriented_core
from .isomorphism import are_isomorphic
from .recognize import (
    Verdict,
    is_hom_full_antisym,
    is_hom_full_graph,
    is_hom_full_oriented,
)


def _emit(args, text: str) -> None:
    if not args.quiet:
        print(text)


def _emit_graph(args, g, comments=()) -> None:
    if args.format == "dot":
        sys.stdout.write(fileio.to_dot(g))
    else:
        sys.stdout.write(fileio.serialize(g, comments))


def _verdict_exit(args, verdict: Verdict) -> int:
    if args.machine:
        print(f"VERDICT {'true' if verdict.ok else 'false'}")
        if verdict.witness is not None:
            print(f"WITNESS {verdict.witness}")
    else:
        _emit(args, f"{'yes' if verdict.ok else 'no'}"
              + (f" (witness: {verdict.witness} - {verdict.detail})" if not verdict.ok and verdict.witness is not None else ""))
    return 0 if verdict.ok else 1


def _load(path: str):
    return fileio.load(path)


def cmd_recognize(args) -> int:
    g = _load(args.file)
    if args.kind == "graph":
        if not isinstance(g, Graph):
            raise GraphError("graph kind needs a 'graph' file")
        verdict = is_hom_full_graph(g)
    elif args.kind == "antisym":
        if not isinstance(g, OrientedGraph):
            raise GraphError("antisym kind needs an 'oriented' file")
        verdict = is_hom_full_antisym(g)
    else:
        if not isinstance(g, OrientedGraph):
            raise GraphError("oriented kind needs an 'oriented' file")
        verdict = is_hom_full_oriented(g, limit=args.max_n)
        if verdict.ok:
            verdict = Verdict(True)  # embeddings are bulky; keep output small
    return _verdict_exit(args, verdict)


def cmd_closure(args) -> int:
    g = _load(args.file)
    if not isinstance(g, OrientedGraph):
        raise GraphError("closure needs an 'oriented' file")
    _emit_graph(args, closure(g))
    return 0


def cmd_core(args) -> int:
    g = _load(args.file)
    if not isinstance(g, OrientedGraph):
        raise GraphError("core needs an 'oriented' file")
    _emit_graph(args, oriented_core(g, limit=args.max_n))
    return 0


def cmd_images(args) -> int:
    g = _load(args.file)
    kind = {"graph": "graph", "oriented": "oriented", "antisym": "antisymmetric"}[args.kind]
    images = complete_images(g, kind, limit=args.max_n)
    _emit(args, f"# {len(images)} images up to isomorphism")
    for i, q in enumerate(images):
        sys.stdout.write(fileio.serialize(q, [f"image {i}"]))
        sys.stdout.write("\n")
    return 0


def cmd_iso(args) -> int:
    g = _load(args.file)
    h = _load(args.other)
    witness = are_isomorphic(g, h)
    if args.machine:
        print(f"VERDICT {'true' if witness else 'false'}")
        if witness:
            for a, b in witness.pairs():
                print(f"WITNESS {a} -> {b}")
    else:
        _emit(args, "isomorphic" if witness else "not isomorphic")
    return 0 if witness else 1


def _outpath(args, stem: str) -> Path:
    outdir = Path(args.outdir) if args.outdir else Path(".")
    outdir.mkdir(parents=True, exist_ok=True)
    return outdir / f"{stem}.txt"


def cmd_construct(args) -> int:
    if args.construction == "dagiso":
        for path in args.files:
            g = _load(path)
            inst = dagiso_gadget(g)
            out = _outpath(args, Path(path).stem + "_star")
            fileio.save(inst.output, out, inst.provenance_comments())
            _emit(args, f"wrote {out}")
        return 0
    if args.construction == "homfull":
        g1, g2 = _load(args.files[0]), _load(args.files[1])
        inst = homfull_gadget(g1, g2)
        out = _outpath(args, Path(args.files[0]).stem + "_hat")
        fileio.save(inst.output, out, inst.provenance_comments())
        _emit(args, f"wrote {out}")
        return 0
    if args.construction == "fullorient":
        gamma = _load(args.files[0])
        inst = fullorient_gadget(gamma)
        out = _outpath(args, Path(args.files[0]).stem + "_tilde")
        comments = inst.provenance_comments()
        comments.append(f"claims_hold {inst.checks['claims_hold']}")
        fileio.save(inst.output, out, comments)
        _emit(args, f"wrote {out}")
        return 0
    # embed
    g = _load(args.files[0])
    big, vm = embed_in_oclique(g)
    out = _outpath(args, Path(args.files[0]).stem + "_oclique")
    comments = [f"map a {i} -> {dst}" for i, dst in vm.pairs()]
    fileio.save(big, out, comments)
    _emit(args, f"wrote {out}")
    return 0


def cmd_orient(args) -> int:
    gamma = _load(args.file)
    if not isinstance(gamma, Graph):
        raise GraphError("orient needs a 'graph' file")
    if args.mode == "quasitransitive":
        oriented = quasi_transitive_orientation(gamma)
        _emit_graph(args, oriented)
        return 0
    if args.mode == "oclique":
        found = has_oclique_orientation(gamma, limit=args.max_n)
    else:
        found = has_homfull_orientation(gamma, limit=args.max_n)
    if found is None:
        if args.machine:
            print("VERDICT false")
        else:
            _emit(args, "no such orientation")
        return 1
    if args.machine:
        print("VERDICT true")
    _emit_graph(args, found)
    return 0


def cmd_gadget(args) -> int:
    if args.which == "j":
        gadget = derive_gadget_J()
        roles = (
            f"roles u={gadget.u} u'={gadget.u_prime} v={gadget.v} "
            f"v'={gadget.v_prime} w={gadget.w}"
        )
        _emit_graph(args, gadget.graph, [roles])
        return 0
    try:
        fixture = derive_fig1_fixture()
    except NoGadgetFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_graph(args, fixture)
    return 0


def cmd_gen(args) -> int:
    n = args.n
    builders = {
        "path": lambda: path_graph(n),
        "cycle": lambda: cycle_graph(n),
        "complete": lambda: complete_graph(n),
        "empty": lambda: empty_graph(n),
        "dipath": lambda: directed_path(n),
        "dicycle": lambda: directed_cycle(n),
        "tt": lambda: transitive_tournament(n),
        "tournament": lambda: regular_tournament(n),
        "bn": lambda: bn_oclique(n),
        "homfull": lambda: homfull_graph_generator(n, args.seed),
        "random-dag": lambda: random_dag(n, args.p, __import__("random").Random(args.seed)),
        "random-oriented": lambda: random_oriented_graph(n, __import__("random").Random(args.seed)),
    }
    _emit_graph(args, builders[args.family]())
    return 0


def cmd_verify(args) -> int:
    theorems = harness.ALL_THEOREMS if args.theorem == "all" else (args.theorem,)
    unknown = [t for t in theorems if t not in harness.ALL_THEOREMS]
    if unknown:
        print(f"error: unknown theorem {unknown[0]!r}; choose from {', '.join(harness.ALL_THEOREMS)}",
              file=sys.stderr)
        return 2
    profile = dict(harness.FULL if args.full else harness.QUICK)
    if args.max_n is not None:
        for key in ("five_way_n", "antisym_exhaustive_n", "oriented_exhaustive_n",
                    "dagiso_exhaustive_n", "fullorient_max_n", "orientation_exhaustive_n",
                    "partition_max_n"):
            profile[key] = min(profile[key], args.max_n)
    if args.samples is not None:
        for key in ("antisym_samples", "oriented_samples", "closure_samples",
                    "embed_samples", "dagiso_pairs", "claims_samples",
                    "orientation_generated"):
            profile[key] = min(profile[key], args.samples)
    report = harness.run_all(tuple(theorems), profile, args.seed)
    text = report.render()
    if args.report:
        Path(args.report).write_text(text)
        _emit(args, f"wrote {args.report}")
    if not args.quiet and not args.report:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homfull",
        description="Recognition, construction, and brute-force verification "
        "for homomorphically full graphs, oriented graphs, and antisymmetric digraphs.",
    )
    parser.add_argument("--machine", action="store_true", help="line-oriented key-value output")
    parser.add_argument("--quiet", action="store_true", help="suppress informational output")
    parser.add_argument("--format", choices=("text", "dot"), default="text")
    parser.add_argument("--max-n", type=int, default=None, help="override exhaustive-search bounds")
    parser.add_argument("--seed", type=int, default=2023)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide homomorphic fullness")
    p.add_argument("--kind", choices=("graph", "antisym", "oriented"), required=True)
    p.add_argument("file")
    p.set_defaults(fn=cmd_recognize)

    p = sub.add_parser("closure", help="undirected closure of an oriented graph")
    p.add_argument("file")
    p.set_defaults(fn=cmd_closure)

    p = sub.add_parser("core", help="core of an oriented graph")
    p.add_argument("file")
    p.set_defaults(fn=cmd_core)

    p = sub.add_parser("images", help="all homomorphic images up to isomorphism")
    p.add_argument("--kind", choices=("graph", "antisym", "oriented"), required=True)
    p.add_argument("file")
    p.set_defaults(fn=cmd_images)

    p = sub.add_parser("iso", help="isomorphism test for two files of the same kind")
    p.add_argument("file")
    p.add_argument("other")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("construct", help="build a reduction instance")
    p.add_argument("construction", choices=("dagiso", "homfull", "fullorient", "embed"))
    p.add_argument("files", nargs="+")
    p.add_argument("--outdir", default=None)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("orient", help="search for an orientation with a property")
    p.add_argument("mode", choices=("oclique", "homfull", "quasitransitive"))
    p.add_argument("file")
    p.set_defaults(fn=cmd_orient)

    p = sub.add_parser("gadget", help="print a reconstructed figure gadget")
    p.add_argument("which", choices=("j", "fig1"))
    p.set_defaults(fn=cmd_gadget)

    p = sub.add_parser("gen", help="generate a named graph family member")
    p.add_argument("family", choices=("path", "cycle", "complete", "empty", "dipath",
                                      "dicycle", "tt", "tournament", "bn", "homfull",
                                      "random-dag", "random-oriented"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, default=0.5)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="run the theorem-verification harness")
    p.add_argument("--theorem", default="all")
    p.add_argument("--full", action="store_true", help="acceptance-scale run")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--report", default=None, help="write the report to this path")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
