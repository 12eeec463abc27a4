"""Command-line interface.

Exit codes: 0 success, 1 negative answer, 2 input error, 3 precondition
violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .enumeration import canonical_form, enumerate_pure, enumerate_union_closed
from .errors import FamilyError
from .familyfile import ParseError, format_family, read_family
from .family import elements_of, format_member, is_union_closed, minimal_members
from .hyperiso import extract_hyperisomorphism, induced_map
from .lattice import export_dot, frankl_abundant_elements, frankl_counts, to_lattice
from .morphism import find_isomorphisms
from .purification import is_pure, purify, redundant_elements

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


class Precondition(Exception):
    pass


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def cmd_check(args) -> int:
    family = read_family(args.path)
    closed = is_union_closed(family)
    report = {
        "ground_size": family.ground_size,
        "union_closed": closed,
        "pure": is_pure(family),
        "size": len(family),
        "union_size": family.union.bit_count(),
        "minimal_members": [elements_of(m) for m in minimal_members(family)],
        "redundant_elements": redundant_elements(family),
    }
    if args.json:
        _emit_json(report)
    else:
        print(f"union-closed: {_yn(closed)}")
        print(f"pure: {_yn(report['pure'])}")
        print(f"|K| = {report['size']}")
        print(f"|union K| = {report['union_size']}")
        print("minimal members: " + " ".join(format_member(m) for m in minimal_members(family)))
        red = report["redundant_elements"]
        print("redundant elements: " + (" ".join(map(str, red)) if red else "none"))
    return EXIT_OK if closed else EXIT_NEGATIVE


def cmd_purify(args) -> int:
    family = read_family(args.path)
    purified, trace = purify(family, args.order)
    for step in trace.steps:
        print(f"remove {step.removed}: union {format_member(step.before.union)}"
              f" -> {format_member(step.after.union)}", file=sys.stderr)
    if args.json:
        _emit_json({"ground_size": purified.ground_size, "members": purified.sets(),
                    "removed": trace.removed})
    else:
        sys.stdout.write(format_family(purified))
    return EXIT_OK


def cmd_lift(args) -> int:
    f1, f2 = read_family(args.path1), read_family(args.path2)
    for label, fam in (("first", f1), ("second", f2)):
        if not is_union_closed(fam):
            raise Precondition(f"{label} family is not union-closed")
        if not is_pure(fam):
            raise Precondition(f"{label} family is not pure")
    found = find_isomorphisms(f1, f2, limit=1)
    if not found:
        if args.json:
            _emit_json({"isomorphism": None, "hyperisomorphism": None})
        else:
            print("no isomorphism")
        return EXIT_NEGATIVE
    h = found[0]
    H = extract_hyperisomorphism(h)
    assert induced_map(H, f1, f2) == h
    if args.json:
        _emit_json({
            "isomorphism": [[elements_of(a), elements_of(b)] for a, b in h.items()],
            "hyperisomorphism": [list(p) for p in H.pairs],
        })
    else:
        for i, j in H.pairs:
            print(f"{i} -> {j}")
    return EXIT_OK


def cmd_frankl(args) -> int:
    family = read_family(args.path)
    try:
        abundant = frankl_abundant_elements(family)
    except FamilyError as exc:
        raise Precondition(str(exc)) from None
    counts = dict(frankl_counts(family))
    total = len(family)
    if args.json:
        _emit_json({"size": total,
                    "abundant": [{"element": i, "count": counts[i]} for i in abundant]})
    else:
        for i in abundant:
            print(f"{i}: {counts[i]}/{total}")
    return EXIT_OK if abundant else EXIT_NEGATIVE


def cmd_lattice(args) -> int:
    family = read_family(args.path)
    try:
        lattice = to_lattice(family)
    except FamilyError as exc:
        raise Precondition(str(exc)) from None
    dot = export_dot(lattice)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dot)
    if args.json:
        _emit_json({
            "elements": family.sets(),
            "cover_edges": [list(e) for e in lattice.cover_edges],
            "bottom": lattice.bottom,
            "top": lattice.top,
        })
    elif not args.dot:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        if args.pure:
            stream = enumerate_pure(args.n, method=args.method)
            if args.require_empty:
                stream = (f for f in stream if 0 in f)
        else:
            stream = enumerate_union_closed(args.n, require_empty=args.require_empty,
                                            method=args.method)
        stream = iter(stream)
        first = next(stream, None)
    except FamilyError as exc:
        raise Precondition(str(exc)) from None

    def families():
        if first is not None:
            yield first
            yield from stream

    if args.canonical:
        classes = set()
        total = 0
        for fam in families():
            total += 1
            classes.add(canonical_form(fam))
        if args.json:
            _emit_json({"families": total, "classes": len(classes)})
        else:
            print(f"families: {total}")
            print(f"classes: {len(classes)}")
        return EXIT_OK

    count = 0
    for fam in families():
        if args.json:
            _emit_json(fam.sets())
        else:
            if count:
                sys.stdout.write("\n")
            sys.stdout.write(format_family(fam))
        sys.stdout.flush()
        count += 1
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unionclosed",
                                     description="Tools for finite union-closed set families.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report union-closure, purity, minimal members")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("purify", help="remove redundant elements; trace goes to stderr")
    p.add_argument("path")
    p.add_argument("--order", choices=("smallest", "largest"), default="smallest")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_purify)

    p = sub.add_parser("lift", help="ground bijection behind an isomorphism of pure families")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("frankl", help="elements in at least half of the members")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frankl)

    p = sub.add_parser("lattice", help="inclusion lattice as DOT")
    p.add_argument("path")
    p.add_argument("--dot", metavar="OUT", help="write DOT to this file instead of stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("enumerate", help="all union-closed families over [n]")
    p.add_argument("n", type=int)
    p.add_argument("--pure", action="store_true", help="only pure families covering [n]")
    p.add_argument("--require-empty", action="store_true", help="only families containing the empty set")
    p.add_argument("--canonical", action="store_true", help="count classes up to relabeling")
    p.add_argument("--method", choices=("direct", "generator"), default="direct")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Precondition as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
