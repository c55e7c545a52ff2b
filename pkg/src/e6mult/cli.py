"""Command-line entry point: ``e6mult <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .corpus import CorpusError, DEFAULT_SAMPLES, table, vertex_names, verify_multiplet
from .multiplet import REDUCED_TYPES, build_multiplet, type_labels, type_of_labels
from .notation import NotationError, e6_root_subscripts, expand, root_name
from .parabolic import E6_14_PROFILE, split_roots
from .render import FORMATS, RenderConfig, from_json, render
from .rootsys import CartanError, cartan_matrix, generate_positive_roots, height
from .weights import (
    ShiftedWeight,
    bgg_reducibilities,
    fraction_text,
    hc_param,
    is_m_dominant,
    shifted_reflect,
    to_signature,
)


class UsageError(Exception):
    pass


def _labels(text: str, rank: int = 6) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"labels must be comma-separated integers, got {text!r}") from None
    if len(vals) != rank:
        raise UsageError(f"expected {rank} labels, got {len(vals)}")
    return vals


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _e6(args):
    if args.algebra.lower() != "e6":
        raise UsageError("only --algebra e6 carries the E6(-14) parabolic data")
    rs = generate_positive_roots(cartan_matrix("e6"))
    return rs, split_roots(rs, [args.marker - 1])


def cmd_roots(args) -> int:
    rs = generate_positive_roots(cartan_matrix(args.algebra))
    names = e6_root_subscripts(rs) if rs.cartan.name == "E6" else {}
    print(f"{rs.cartan.name}: {len(rs.positive_roots)} positive roots, highest {_vec(rs.highest_root)}")
    for k, r in enumerate(rs.positive_roots):
        extra = f"  alpha_{{{names[r]}}}" if r in names else ""
        if r == rs.highest_root and names:
            extra += "  = alpha~"
        print(f"{k + 1:3d}  {_vec(r)}  height {height(r)}{extra}")
    return 0


def cmd_split(args) -> int:
    rs = generate_positive_roots(cartan_matrix(args.algebra))
    if not 1 <= args.marker <= rs.rank:
        raise UsageError(f"marker {args.marker} out of range for rank {rs.rank}")
    sp = split_roots(rs, [args.marker - 1])
    print(f"{rs.cartan.name}, marker {args.marker}: {len(sp.compact_roots)} compact, {len(sp.noncompact_roots)} noncompact")
    for title, group in (("compact", sp.compact_roots), ("noncompact", sp.noncompact_roots)):
        print(f"{title}:")
        for r in group:
            print(f"  {_vec(r)}  {root_name(rs, r)}")
    if args.describe:
        if rs.cartan.name != "E6" or args.marker != 2:
            raise UsageError("--describe is only available for e6 with marker 2")
        print("real-form data (documented constants, not computed):")
        for k, v in E6_14_PROFILE.items():
            print(f"  {k}: {v}")
    return 0


def _root_arg(text: str, rs) -> tuple[int, ...]:
    if text in ("~", "top", "highest"):
        return rs.highest_root
    try:
        v = expand(text)
    except NotationError as exc:
        raise UsageError(str(exc)) from None
    if not rs.is_positive_root(v):
        raise UsageError(f"{text} is not a positive root")
    return v


def cmd_weight(args) -> int:
    rs, sp = _e6(args)
    w = ShiftedWeight(_labels(args.labels))
    if args.reflect:
        beta = _root_arg(args.reflect, rs)
        print(f"reflect in {root_name(rs, beta)} with m = {hc_param(w, beta)}")
        w = shifted_reflect(w, beta, rs)
    s = to_signature(w, sp)
    print(f"labels      {_vec(w.labels)}")
    print(f"signature   {s}")
    print(f"d           {fraction_text(s.d)}")
    print(f"M-dominant  {'strict' if is_m_dominant(w, sp) else 'non-strict' if is_m_dominant(w, sp, False) else 'no'}")
    red = bgg_reducibilities(w, sp)
    print(f"BGG reducibilities ({len(red)}):")
    for beta, m in red:
        print(f"  {root_name(rs, beta):22s} m = {m}")
    return 0


def _emit(g, args, names) -> int:
    cfg = RenderConfig(args.format, not args.all_edges, args.label_style)
    data = render(g, cfg, names)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0


def _names_for(g) -> dict[int, str]:
    kind = type_of_labels(g.input_labels)
    if kind is None:
        return {}
    try:
        return vertex_names(g, table(kind))
    except (OSError, CorpusError):
        return {}


def _build(labels, args):
    try:
        return build_multiplet(labels, via_orbit=not args.fast)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_multiplet(args) -> int:
    g = _build(_labels(args.labels), args)
    return _emit(g, args, _names_for(g))


def cmd_reduced(args) -> int:
    kind = args.type.upper()
    if kind not in REDUCED_TYPES:
        raise UsageError(f"unknown type {args.type!r}; choose from {', '.join(REDUCED_TYPES)}")
    g = _build(type_labels(kind, _labels(args.labels)), args)
    return _emit(g, args, _names_for(g))


def cmd_verify(args) -> int:
    kinds = list(REDUCED_TYPES) if args.type.upper() == "ALL" else [args.type.upper()]
    for k in kinds:
        if k not in REDUCED_TYPES:
            raise UsageError(f"unknown type {args.type!r}")
    failed = 0
    for kind in kinds:
        t = table(kind, errata=args.errata)
        samples = DEFAULT_SAMPLES
        g = build_multiplet(type_labels(kind, samples[0]))
        report = verify_multiplet(g, t, samples)
        lines = report.lines() if (args.verbose or not report.passed) else [report.summary()]
        print("\n".join(lines))
        failed += not report.passed
    if len(kinds) > 1:
        print(f"{len(kinds) - failed}/{len(kinds)} types pass")
    return 1 if failed else 0


def cmd_render(args) -> int:
    try:
        g, names = from_json(Path(args.input).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read graph from {args.input}: {exc}") from None
    return _emit(g, args, names)


def _add_output(p: argparse.ArgumentParser, default: str = "text") -> None:
    p.add_argument("--format", choices=FORMATS, default=default)
    p.add_argument("--all-edges", action="store_true", help="include composite edges")
    p.add_argument("--label-style", choices=("compact", "vectors"), default="compact")
    p.add_argument("-o", "--output", help="write to a file instead of standard output")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="e6mult", description="Multiplets of elementary representations of E6(-14).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots with compact names")
    p.add_argument("--algebra", default="e6")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("split", help="compact/noncompact split of the positive roots")
    p.add_argument("--algebra", default="e6")
    p.add_argument("--marker", type=int, default=2)
    p.add_argument("--describe", action="store_true", help="print real-form data")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("weight", help="signature and BGG data of a shifted weight")
    p.add_argument("--labels", required=True, help="m1,...,m6")
    p.add_argument("--reflect", metavar="BETA", help="compact subscript such as 2,4 or ~ for the highest root")
    p.add_argument("--algebra", default="e6")
    p.add_argument("--marker", type=int, default=2)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("multiplet", help="build the multiplet of a dominant weight")
    p.add_argument("--labels", required=True)
    p.add_argument("--fast", action="store_true", help="grow the component directly, skipping the full orbit")
    _add_output(p)
    p.set_defaults(func=cmd_multiplet)

    p = sub.add_parser("reduced", help="build a reduced multiplet type")
    p.add_argument("--type", required=True)
    p.add_argument("--labels", default="1,1,1,1,1,1", help="values for the nonzero positions")
    p.add_argument("--fast", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_reduced)

    p = sub.add_parser("verify", help="compare computed multiplets with the signature tables")
    p.add_argument("--type", default="MAIN", help="a type name or ALL")
    p.add_argument("--errata", action="store_true", help="apply the corrections in errata.txt")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="render a graph saved with --format json")
    p.add_argument("input")
    _add_output(p, default="dot")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, CartanError) as exc:
        print(f"e6mult: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
