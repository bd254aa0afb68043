"""Command-line interface.

Exit codes: 0 success, 1 domain or hypothesis violation (named on
stderr), 2 usage or parse error.  Reports are stable key = value lines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import analyze_gluing, analyze_image
from .complexes import to_dot
from .constructions import (
    circle,
    diamond,
    digital_interval,
    double_diamond,
    is_circle,
    projective_plane,
    realize_presentation,
)
from .fileio import (
    ParseError,
    parse_graph,
    parse_image,
    parse_presentation,
    serialize_image,
    serialize_presentation,
)
from .images import DigitalImage
from .twodim import free_rank
from .verification import run_verification

_CONSTRUCTIONS = ("diamond", "circle", "double-diamond", "rp2", "interval")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_image(path: str) -> DigitalImage:
    return parse_image(_read(path))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digtop",
        description="Fundamental groups of digital images via clique complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a stock image as .dimg")
    p.add_argument("name", choices=_CONSTRUCTIONS)
    p.add_argument("size", nargs="?", type=int, help="length for circle/interval")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.add_argument("--verify", action="store_true", help="run the invariant suite on the result")

    p = sub.add_parser("analyze", help="f-vector, presentation, H1 and bounded order")
    p.add_argument("image")
    p.add_argument("--max-cosets", type=int, default=1000)

    p = sub.add_parser("embed-graph", help="embed an abstract graph as a digital image")
    p.add_argument("graph")
    p.add_argument("-o", "--output")

    p = sub.add_parser("realize", help="digital image with the presented fundamental group")
    p.add_argument("presentation")
    p.add_argument("-o", "--output")

    p = sub.add_parser("rank2d", help="free rank of a connected 2D image")
    p.add_argument("image")
    p.add_argument("--explain", action="store_true", help="print the reduction trace")

    p = sub.add_parser("svk", help="pushout presentation of a union of two images")
    p.add_argument("image_u")
    p.add_argument("image_v")
    p.add_argument("--max-cosets", type=int, default=1000)

    p = sub.add_parser("verify", help="run the invariant suite on an image")
    p.add_argument("image")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("export-dot", help="DOT rendering of the adjacency graph")
    p.add_argument("image")
    p.add_argument("-o", "--output")

    return parser


def _construct(args: argparse.Namespace) -> int:
    if args.name in ("circle", "interval"):
        if args.size is None:
            raise ParseError(f"{args.name} needs a size argument")
    elif args.size is not None:
        raise ParseError(f"{args.name} takes no size argument")
    if args.name == "diamond":
        image = diamond()
    elif args.name == "circle":
        image = circle(args.size)
    elif args.name == "double-diamond":
        image = double_diamond()
    elif args.name == "rp2":
        image = projective_plane()
    else:
        image = digital_interval(args.size)
    _emit(serialize_image(image), args.output)
    if args.verify:
        failures = _run_checks(image)
        if args.name in ("diamond", "circle") and not is_circle(image):
            print("FAIL circle-shape", file=sys.stderr)
            failures += 1
        if failures:
            return 1
    return 0


def _run_checks(image: DigitalImage, seed: int = 0) -> int:
    failures = 0
    for result in run_verification(image, seed=seed):
        status = "ok" if result.passed else "FAIL"
        line = f"{status} {result.name}"
        if result.detail and not result.passed:
            line += f" ({result.detail})"
        print(line, file=sys.stderr if not result.passed else sys.stdout)
        failures += not result.passed
    return failures


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            return _construct(args)

        if args.command == "analyze":
            analysis = analyze_image(_load_image(args.image), max_cosets=args.max_cosets)
            print("\n".join(analysis.report_lines()))
            return 0

        if args.command == "embed-graph":
            from .constructions import embed_graph

            image, correspondence = embed_graph(parse_graph(_read(args.graph)))
            text = serialize_image(image)
            text += "".join(
                f"# vertex {v} -> {' '.join(map(str, p))}\n" for v, p in enumerate(correspondence)
            )
            _emit(text, args.output)
            return 0

        if args.command == "realize":
            image = realize_presentation(parse_presentation(_read(args.presentation)))
            _emit(serialize_image(image), args.output)
            return 0

        if args.command == "rank2d":
            trace: list[str] | None = [] if args.explain else None
            rank = free_rank(_load_image(args.image), trace)
            if trace is not None:
                for line in trace:
                    print(f"# {line}")
            print(f"rank = {rank}")
            return 0

        if args.command == "svk":
            glued = analyze_gluing(
                _load_image(args.image_u), _load_image(args.image_v), max_cosets=args.max_cosets
            )
            print(f"basepoint = {' '.join(map(str, glued.basepoint))}")
            print(f"U-H1 = {glued.part_u.invariants}")
            print(f"V-H1 = {glued.part_v.invariants}")
            print(f"intersection-H1 = {glued.intersection.invariants}")
            print(serialize_presentation(glued.pushout), end="")
            print(f"H1 = {glued.invariants}")
            return 0

        if args.command == "verify":
            return 1 if _run_checks(_load_image(args.image), seed=args.seed) else 0

        if args.command == "export-dot":
            _emit(to_dot(_load_image(args.image)), args.output)
            return 0
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
