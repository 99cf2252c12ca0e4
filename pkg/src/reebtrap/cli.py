"""Command line interface: ``reebtrap check|reeb|render|enumerate|closure``.

Exit codes: 0 success, 1 invalid polygon, 2 usage or I/O problem.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration as en
from .documents import DocumentError, graph_document, load_polygon_document
from .polygon import diagnose, validate
from .reebgraph import EquivalenceSettings, certificate, class_certificate
from .render import render_dot, render_svg
from .sweep import build

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _settings(args) -> EquivalenceSettings:
    return EquivalenceSettings(
        ordered=args.ordered, quotient_mirror=not args.no_mirror, quotient_flip=not args.no_flip)


def _describe(s: EquivalenceSettings) -> str:
    parts = ["ordered" if s.ordered else "unordered"]
    if s.quotient_mirror:
        parts.append("mirror")
    if s.quotient_flip:
        parts.append("flip")
    return ",".join(parts)


def _load(path: str, out, err):
    """Returns (polygon, None) or (None, exit code)."""
    try:
        outer, holes = load_polygon_document(path)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror or exc}", file=err)
        return None, EXIT_USAGE
    except (DocumentError, UnicodeDecodeError) as exc:
        print(f"error: {path}: {exc}", file=err)
        return None, EXIT_USAGE
    problems = diagnose(outer, holes)
    if problems:
        for p in problems:
            print(f"{p.kind}: {p}", file=out)
        return None, EXIT_INVALID
    return validate(outer, holes), None


def cmd_check(args, out, err) -> int:
    poly, code = _load(args.input, out, err)
    if poly is None:
        return code
    print(f"vertices={poly.vertex_count} connectivity={poly.connectivity}", file=out)
    return EXIT_OK


def cmd_reeb(args, out, err) -> int:
    poly, code = _load(args.input, out, err)
    if poly is None:
        return code
    result = build(poly)
    if args.format == "cert":
        g = result.graph
        print(class_certificate(g, _settings(args)) if args.cls else certificate(g), file=out)
    elif args.format == "dot":
        out.write(render_dot(result.graph))
    else:
        doc = graph_document(result, poly.rings)
        out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_render(args, out, err) -> int:
    poly, code = _load(args.input, out, err)
    if poly is None:
        return code
    svg = render_svg(poly, build(poly))
    try:
        Path(args.out).write_text(svg, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=err)
        return EXIT_USAGE
    print(f"wrote {args.out}", file=out)
    return EXIT_OK


def format_arrangements(report: en.ArrangementReport) -> list[str]:
    lines = ["arrangements (upper hole DEF, lower hole GHI; sides upper+lower; B-left / B-right / union):"]
    lines.append(f"  {'pattern':<8} {'sides':<5} {'slots':<8} {'regime':<12} {'left':>4} {'right':>5} {'union':>5}")
    for r in report.rows:
        lines.append(f"  {r.pattern:<8} {r.sides:<5} {r.slots:<8} {r.regime:<12} "
                     f"{r.left:>4} {r.right:>5} {r.union:>5}")
    sep = report.regime_classes[en.SEPARATED]
    ovl = report.regime_classes[en.OVERLAPPING]
    lines.append(f"regime separated (F>G): classes={sep} (published: {en.PUBLISHED_SEPARATED_TOTAL})")
    lines.append(f"regime overlapping (D>G>F): classes={ovl} (published: {en.PUBLISHED_OVERLAP_TOTAL})")
    lines.append(f"classes in both regimes: {report.shared_between_regimes}")
    lines.append(f"regime sum: {sep + ovl} total: {report.total} "
                 f"(published: {en.PUBLISHED_SEPARATED_TOTAL} + {en.PUBLISHED_OVERLAP_TOTAL} = "
                 f"{en.PUBLISHED_SEPARATED_TOTAL + en.PUBLISHED_OVERLAP_TOTAL})")
    pairs = ", ".join(f"{a}+{b}" for a, b in en.PUBLISHED_OVERLAP_PAIRS)
    lines.append(f"published per-arrangement tallies (B left+right): {pairs}")
    return lines


def enumerate_report(n: int, settings: EquivalenceSettings, arrangements: bool, workers: int) -> tuple[str, bool]:
    """Text report and whether the count matches the published one."""
    result = en.enumerate_classes(n, settings, workers=workers)
    published = en.PUBLISHED_COUNTS.get(n)
    matches = published is None or result.count == published
    lines = [
        f"connectivity={n} settings={_describe(settings)}",
        f"configurations={result.raw_count}",
        f"classes={result.count} (published: {published if published is not None else 'n/a'})",
    ]
    if not settings.ordered:
        ordered = EquivalenceSettings(True, settings.quotient_mirror, settings.quotient_flip)
        lines.append(f"ordered classes={en.enumerate_classes(n, ordered, workers=workers).count} (diagnostic)")
    if not matches:
        lines.append(f"MISMATCH: exhaustive count {result.count} differs from published {published}")
    lines.append("certificates:")
    for rec in result.classes:
        lines.append(f"  {rec.certificate}  members={rec.members}  "
                     f"rep={json.dumps(rec.representative.to_dict(), separators=(',', ':'))}")
    if n == 3 and (arrangements or not matches):
        lines.extend(format_arrangements(en.arrangement_report(result)))
    return "\n".join(lines) + "\n", matches


def cmd_enumerate(args, out, err) -> int:
    if args.connectivity not in (1, 2, 3):
        print("error: --connectivity must be 1, 2 or 3", file=err)
        return EXIT_USAGE
    if args.workers < 1:
        print("error: --workers must be >= 1", file=err)
        return EXIT_USAGE
    text, _ = enumerate_report(args.connectivity, _settings(args), args.arrangements, args.workers)
    out.write(text)
    return EXIT_OK


def closure_lines(max_vertices: int) -> list[str]:
    counts = en.closure_simple(max_vertices)
    lines = []
    for size, c in counts.items():
        published = en.PUBLISHED_SIMPLE_COUNTS.get(size)
        if c["unordered"] == c["ordered"]:
            line = f"size{size}: {c['unordered']}"
            if published is not None:
                line += f" (published {published})"
        else:
            line = f"size{size}: unordered {c['unordered']} / ordered {c['ordered']}"
            if published is not None:
                flag = "" if published in (c["unordered"], c["ordered"]) else ", see README"
                line += f" (published {published}{flag})"
        lines.append(line)
    return lines


def cmd_closure(args, out, err) -> int:
    if args.max_vertices < 3:
        print("error: --max-vertices must be >= 3", file=err)
        return EXIT_USAGE
    for line in closure_lines(args.max_vertices):
        print(line, file=out)
    return EXIT_OK


def _add_settings_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--ordered", dest="ordered", action="store_true", default=False,
                   help="compare graphs with their height order")
    g.add_argument("--unordered", dest="ordered", action="store_false",
                   help="compare as abstract oriented graphs (default)")
    p.add_argument("--no-mirror", action="store_true", help="do not identify mirror images")
    p.add_argument("--no-flip", action="store_true", help="do not identify vertical flips")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reebtrap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="validate a polygon document")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reeb", help="Reeb graph of a polygon")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "dot", "cert"), default="json")
    p.add_argument("--class", dest="cls", action="store_true",
                   help="with --format cert, print the class certificate")
    _add_settings_flags(p)
    p.set_defaults(func=cmd_reeb)

    p = sub.add_parser("render", help="SVG of the trapezoidal map and Reeb graph")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="count optimal Reeb graph classes")
    p.add_argument("--connectivity", type=int, required=True)
    _add_settings_flags(p)
    p.add_argument("--arrangements", action="store_true", help="per-arrangement table (n=3)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("closure", help="simple-polygon Reeb graphs by edit operations")
    p.add_argument("--max-vertices", type=int, required=True)
    p.set_defaults(func=cmd_closure)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
