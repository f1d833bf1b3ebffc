"""Command-line front end."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from .category import delta_count, delta_maps, rt_functor
from .density import density_profile
from .errors import NotNonstrict, ParseError, RepresentationFailed, SizeBound, UnivcatError
from .gadget import indicator_for_depth, make_gadget, star_replace, verify_full_faithful_pair
from .graphs import Digraph, underlying
from .homs import MAX_STEPS_ENV, EnumLimit, hom_tuples
from .representation import represent_category, represent_monoid
from .stability import order_witness, shift_strict
from .suites import EXIT_USAGE, SUITES, run_suite


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _digraph(path: str) -> Digraph:
    g = formats.read_graph(path)
    if not g.directed:
        raise ParseError(f"{path}: expected a digraph file (D or DL header)")
    return g


def _gadget(args):
    if args.depth is not None:
        if args.length is not None or args.span is not None:
            raise argparse.ArgumentTypeError("give either --depth or --length/--span, not both")
        return indicator_for_depth(args.depth)
    if args.length is None or args.span is None:
        raise argparse.ArgumentTypeError("give --depth, or both --length and --span")
    return make_gadget(args.length, args.span)


def _add_gadget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--depth", type=_positive, help="subdivision depth d (gadget length 3(d+1))")
    p.add_argument("--length", type=_positive, help="gadget cycle length L")
    p.add_argument("--span", type=_positive, help="position s of the exit vertex")


def cmd_hom(args) -> int:
    g, h = formats.read_graph(args.source), formats.read_graph(args.target)
    limit = EnumLimit(max_results=args.limit)
    maps = hom_tuples(g, h, None, limit, injective=args.injective)
    print(f"count {len(maps)}{' (truncated)' if maps.truncated else ''}")
    if args.list:
        for m in maps:
            print(" ".join(map(str, m)))
    return 0


def cmd_star(args) -> int:
    gadget = _gadget(args)
    r = star_replace(_digraph(args.graph), gadget)
    formats.write_graph(r.result, args.output)
    sidecar = args.sidecar or f"{args.output}.copies"
    Path(sidecar).write_text(f"# gadget L={gadget.L} s={gadget.s}\n" + formats.dumps_sidecar(r))
    print(f"wrote {args.output} ({r.result.n} vertices, {len(r.result.arcs)} arcs) and {sidecar}")
    return 0


def cmd_verify_replacement(args) -> int:
    gadget = _gadget(args)
    rep = verify_full_faithful_pair(_digraph(args.source), _digraph(args.target), gadget)
    print(f"homs base {rep.hom_base}")
    print(f"homs replaced {rep.hom_replaced}")
    print(f"lift injective {'yes' if rep.lift_injective else 'no'}")
    print(f"unprojectable {len(rep.unprojectable)}")
    print(f"bijection {'yes' if rep.bijection else 'no'}")
    return 0 if rep.bijection else 1


def cmd_delta(args) -> int:
    maps = delta_maps(args.i, args.j)
    print(f"count {len(maps)} (binomial {delta_count(args.i, args.j)})")
    if args.list:
        for m in maps:
            print(" ".join(map(str, m.values)))
    return 0


def cmd_order_witness(args) -> int:
    if args.rt:
        F = rt_functor(sorted({0, 1, args.n}))
    elif args.functor:
        F = formats.read_functor(args.functor)
    else:
        raise argparse.ArgumentTypeError("give a functor file or --rt")
    w = order_witness(F, args.n)
    for j, t in enumerate(w.witness.tuples):
        print(f"x{j} " + " ".join(map(str, t)))
    for row in w.matrix:
        print("".join("1" if c else "0" for c in row))
    print(w.verdict.value)
    if args.shift:
        try:
            s = shift_strict(w)
        except NotNonstrict as exc:
            print(f"shift: {exc}")
            return 1
        for row in s.matrix:
            print("".join("1" if c else "0" for c in row))
        print("shifted STRICT" if all(s.matrix[i][j] == (i < j) for i in range(len(s.matrix))
                                      for j in range(len(s.matrix))) else "shifted NEITHER")
    return 0


def cmd_density(args) -> int:
    sample = []
    for path in args.graphs:
        g = formats.read_graph(path)
        sample.append(underlying(g) if g.directed else g)
    prof = density_profile(sample, args.pmax, args.nmax, upto=args.upto)
    print(prof.format())
    if args.witness_dir:
        out = Path(args.witness_dir)
        out.mkdir(parents=True, exist_ok=True)
        for (p, N), (k, q, emb) in sorted(prof.witnesses.items()):
            path = out / f"witness_p{p}_N{N}.txt"
            path.write_text(f"# sample {args.graphs[k]} depth {q}\n" + " ".join(map(str, emb.images)) + "\n")
    return 0


def cmd_represent(args) -> int:
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    if args.monoid:
        M = formats.read_monoid(args.monoid)
        result = represent_monoid(M, max_order=args.max_order)
        labels = [f"element {a}" for a in range(M.k)]
    else:
        K = formats.read_category(args.category)
        result = represent_category(K)
        labels = [f"morphism {f}" for f in range(len(K.morphisms))]
    for a, g in enumerate(result.graphs):
        formats.write_graph(g, out / f"object{a}.txt")
    with open(out / "correspondence.txt", "w") as fh:
        for f, label in enumerate(labels):
            fh.write(f"{label}: " + " ".join(map(str, result.correspondence[f])) + "\n")
    cert = result.certificate
    lines = [f"verified {'yes' if result.verified else 'no'}",
             f"scale {result.scale}",
             "gadgets " + " ".join(f"{c}:L={L},s={s}" for c, (L, s) in result.gadget_params.items()),
             "degeneracy " + " ".join(map(str, result.degeneracies))]
    lines += [f"hom {a} {b} {n}" for (a, b), n in sorted(cert.get("hom_counts", {}).items())]
    if "endomorphisms" in cert:
        lines.append(f"endomorphisms {cert['endomorphisms']}")
    (out / "certificate.txt").write_text("\n".join(lines) + "\n")
    print("\n".join(lines))
    return 0


def cmd_export_dot(args) -> int:
    g = formats.read_graph(args.graph)
    highlight = ()
    if args.sidecar:
        highlight, _ = formats.loads_sidecar(Path(args.sidecar).read_text())
    Path(args.output).write_text(formats.to_dot(g, highlight))
    return 0


def cmd_suite(args) -> int:
    code, _ = run_suite(args.name, emit=lambda t: sys.stdout.write(t))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="univcat", description=__doc__)
    parser.add_argument("--max-steps", type=_positive,
                        help=f"search step budget (default from ${MAX_STEPS_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", help="count or list homomorphisms")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--list", action="store_true")
    p.add_argument("--limit", type=_positive)
    p.add_argument("--injective", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("star", help="replace every arc by a rigid gadget")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--sidecar")
    _add_gadget_flags(p)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("verify-lemma1", help="compare hom-sets before and after replacement")
    p.add_argument("source")
    p.add_argument("target")
    _add_gadget_flags(p)
    p.set_defaults(func=cmd_verify_replacement)

    p = sub.add_parser("delta", help="monotone maps [i] -> [j]")
    p.add_argument("i", type=_nonneg)
    p.add_argument("j", type=_nonneg)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("order-witness", help="eta-matrix of the point tuples in F([n])")
    p.add_argument("functor", nargs="?")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--rt", action="store_true", help="use the built-in tournament functor")
    p.add_argument("--shift", action="store_true", help="also print the shifted strict witness")
    p.set_defaults(func=cmd_order_witness)

    p = sub.add_parser("density", help="probe graphs for subdivided cliques")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--pmax", type=_nonneg, required=True)
    p.add_argument("--nmax", type=_positive, required=True)
    p.add_argument("--upto", action="store_true")
    p.add_argument("--witness-dir")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("represent", help="represent a monoid or a finite category by digraphs")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--monoid")
    src.add_argument("--category")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--max-order", type=_positive, default=4)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("export-dot", help="write a graph file as DOT")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--sidecar", help="copy sidecar whose principals are highlighted")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("suite", help="run a bundled verification suite")
    p.add_argument("name", help=", ".join(SUITES))
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get(MAX_STEPS_ENV)
    if args.max_steps:
        os.environ[MAX_STEPS_ENV] = str(args.max_steps)
    try:
        return _dispatch(args)
    finally:
        if saved is None:
            os.environ.pop(MAX_STEPS_ENV, None)
        else:
            os.environ[MAX_STEPS_ENV] = saved


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"univcat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as exc:
        print(f"univcat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RepresentationFailed, SizeBound) as exc:
        print(f"univcat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except UnivcatError as exc:
        print(f"univcat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
