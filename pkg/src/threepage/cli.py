"""Command-line front end.

Subcommands: validate, components, construct, bounds, invariants, diagram,
search, census, render, braid.  Presentations are read from a file or stdin
("-"), one per line, in the native text format or its JSON mirror.

Exit codes: 0 success, 1 domain error (invalid presentation, unmet
precondition, failed verification), 2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__
from .braids import (cycle_count, exponent_sum, format_word, parse_word,
                     permutation)
from .diagram import (Orientation, braid_closure_diagram, linking_matrix,
                      pd_export, project, trace, writhe)
from .invariants import (CrossingLimitError, bracket_skein, equal_up_to_mirror,
                         profile)
from .laurent import in_t_variable, poly_sort_key
from .presentation import (InvalidPresentationError, ParseError,
                           ThreePagePresentation, components, detect_split_pair,
                           parse, validate)
from .render import RenderSpec, render
from .search import (SearchLimitExceeded, census, census_text,
                     refute_t33_at_9, three_page_index)
from .torus import TorusParams, bounds, closure_profile, tnn, tpq, tpq_tight

USAGE_ERROR = 2
DOMAIN_ERROR = 1


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", USAGE_ERROR) from exc


def _read_presentations(path: str) -> list[ThreePagePresentation]:
    lines = [ln for ln in _read_text(path).splitlines() if ln.strip()]
    if not lines:
        raise CliError("no presentations in input", USAGE_ERROR)
    try:
        return [parse(ln) for ln in lines]
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", USAGE_ERROR) from exc


def _read_one(path: str) -> ThreePagePresentation:
    return _read_presentations(path)[0]


def cmd_validate(args: argparse.Namespace) -> int:
    failures = 0
    for k, pres in enumerate(_read_presentations(args.input), start=1):
        report = validate(pres)
        if report.ok:
            pair = detect_split_pair(pres)
            note = " (contains a split pair)" if pair else ""
            print(f"line {k}: ok{note}")
        else:
            failures += 1
            print(f"line {k}: INVALID")
            for v in report.violations:
                print(f"  - {v}")
    return DOMAIN_ERROR if failures else 0


def cmd_components(args: argparse.Namespace) -> int:
    pres = _read_one(args.input)
    decomp = components(pres)
    print(f"components={len(decomp.cycles)}")
    for cycle, points in zip(decomp.cycles, decomp.point_cycles):
        arcs = " ".join(f"P{pa.page + 1}:{pa.arc[0]}-{pa.arc[1]}" for pa in cycle)
        print(f"  points {'-'.join(map(str, points))}: {arcs}")
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "tnn":
        if args.n is None:
            raise CliError("construct tnn requires --n", USAGE_ERROR)
        pres = tnn(args.n)
        p = q = args.n
    else:
        if args.p is None or args.q is None:
            raise CliError("construct tpq requires --p and --q", USAGE_ERROR)
        params, mirrored = TorusParams.normalize(args.p, args.q)
        if mirrored:
            print(f"note: ({args.p},{args.q}) normalised to "
                  f"({params.p},{params.q}) up to mirror", file=sys.stderr)
        p, q = params.p, params.q
        pres = tpq_tight(p, q) if args.tight else tpq(p, q)
    print(pres.serialize())
    if args.verify:
        ok = equal_up_to_mirror(profile(pres), closure_profile(p, q))
        print(f"verification: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else DOMAIN_ERROR
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    params, mirrored = TorusParams.normalize(args.p, args.q)
    rep = bounds(params.p, params.q)
    print(f"torus link ({params.p},{params.q})"
          + (" [mirrored input]" if mirrored else ""))
    print(f"  arc_index      = {rep.arc_index}")
    print(f"  bridge_bound   = {rep.bridge_bound}   (3 * bridge number)")
    print(f"  upper_general  = {rep.upper_general}")
    if rep.upper_tight is not None:
        print(f"  upper_tight    = {rep.upper_tight}")
    if rep.exact is not None:
        print(f"  exact          = {rep.exact}")
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    pres = _read_one(args.input)
    d = project(pres)
    tr = trace(d)
    prof = profile(pres)
    base = Orientation.base(tr.component_count)
    print(f"components = {prof.component_count}")
    print(f"crossings  = {len(d.crossings)}")
    print(f"writhe(base orientation) = {writhe(d, base)}")
    mat = linking_matrix(d, base)
    print("linking matrix (base orientation):")
    for row in mat:
        print("  " + " ".join(f"{v:3d}" for v in row))
    print(f"|lk| multiset = {list(prof.abs_linking)}")
    print(f"bracket = {bracket_skein(d)}")
    if args.t_variable:
        polys = sorted(prof.jones, key=poly_sort_key)
        print("jones (t variable), all orientations:")
        for poly in polys:
            print(f"  {in_t_variable(poly)}")
    else:
        print("jones (A variable), all orientations:")
        for s in prof.jones_strings():
            print(f"  {s}")
    return 0


def cmd_diagram(args: argparse.Namespace) -> int:
    pres = _read_one(args.input)
    sys.stdout.write(pd_export(project(pres)))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    if args.target_braid is not None:
        if args.strands is None:
            raise CliError("--target-braid requires --strands", USAGE_ERROR)
        word = parse_word(args.target_braid, args.strands)
        target = profile(braid_closure_diagram(word))
    elif args.target_file is not None:
        target = profile(_read_one(args.target_file))
    else:
        raise CliError("search needs --target-braid or --target-file", USAGE_ERROR)
    result = three_page_index(target, args.n_max,
                              prune_split_pairs=args.prune_split_pairs,
                              max_n=args.max_n)
    print(result)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    entries = census(args.n, max_n=args.max_n)
    text = census_text(entries)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{len(entries)} entries -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_refute(args: argparse.Namespace) -> int:
    report = refute_t33_at_9()
    print(f"examined {report.examined} presentations on 9 points "
          f"(3 components x 3 arcs, all pages of 3 arcs)")
    print(f"linking-compatible candidates: {report.linking_candidates}")
    if report.refuted:
        print("no presentation matches the (3,3)-torus link profile")
    else:
        for w in report.witnesses:
            print(f"WITNESS: {w}")
    return 0 if report.refuted else DOMAIN_ERROR


def cmd_render(args: argparse.Namespace) -> int:
    pres = _read_one(args.input)
    spec = RenderSpec(format=args.format, scale=args.scale,
                      labels=not args.no_labels)
    text = render(pres, spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_braid(args: argparse.Namespace) -> int:
    word = parse_word(args.word, args.strands)
    print(f"word = {format_word(word) or '(empty)'} on {word.strands} strands")
    print(f"permutation = {list(permutation(word))}")
    print(f"closure components = {cycle_count(word)}")
    print(f"exponent sum = {exponent_sum(word)}")
    if args.invariants:
        prof = profile(braid_closure_diagram(word))
        print(f"closure profile: {prof}")
    if args.diagram:
        sys.stdout.write(pd_export(braid_closure_diagram(word)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="threepage",
        description="Three-page link presentations: construction, invariants, census.")
    ap.add_argument("--version", action="version", version=f"threepage {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-",
                       help="presentation file, or - for stdin (default)")

    p = sub.add_parser("validate", help="check presentation invariants")
    add_input(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("components", help="link components of a presentation")
    add_input(p)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("construct", help="emit a torus-link presentation")
    p.add_argument("family", choices=("tnn", "tpq"))
    p.add_argument("--n", type=int, help="parameter for tnn")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--tight", action="store_true",
                   help="use the 2p+2q-3 construction (needs q >= 2p)")
    p.add_argument("--verify", action="store_true",
                   help="compare against the closed torus braid")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="arc-count bounds for a torus link")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("invariants", help="profile of a presentation")
    add_input(p)
    p.add_argument("--t-variable", action="store_true",
                   help="print Jones polynomials in t instead of A")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("diagram", help="export the projected diagram (PD text)")
    add_input(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("search", help="exact three-page index by exhaustion")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--target-braid", help="braid word, e.g. 's1 s1 s1'")
    p.add_argument("--strands", type=int)
    p.add_argument("--target-file", help="presentation whose link is the target")
    p.add_argument("--prune-split-pairs", action="store_true")
    p.add_argument("--max-n", type=int, help="override the search limit")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("census", help="full canonical census for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write to file instead of stdout")
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("refute-t33", help="exhaustive 9-point check against T(3,3)")
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("render", help="draw a presentation (SVG or ASCII)")
    add_input(p)
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--scale", type=float, default=40.0)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("braid", help="braid word bookkeeping and closure data")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--invariants", action="store_true")
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_braid)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (InvalidPresentationError, SearchLimitExceeded, CrossingLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
