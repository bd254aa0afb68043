"""Text formats: .dimg digital images, .pres presentations, word syntax.

.dimg: first data line is the ambient dimension, second the 0-based index
of the basepoint among the points as listed, then one point per line as
space-separated integers.  '#' starts a comment; blank lines are skipped.

.pres: first data line is ``gens k``; each following line is one relator
in word syntax: whitespace-separated tokens ``g3`` or ``g3^-1``.
"""

from __future__ import annotations

from .groups import Presentation, Word, free_reduce
from .images import DigitalImage


class ParseError(ValueError):
    """Malformed input text; the CLI maps this to a usage-level exit code."""


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_image(text: str) -> DigitalImage:
    lines = _data_lines(text)
    if len(lines) < 3:
        raise ParseError("image file needs a dimension line, a basepoint line, and points")
    try:
        dimension = int(lines[0][1])
    except ValueError:
        raise ParseError(f"line {lines[0][0]}: dimension must be an integer") from None
    if dimension < 1:
        raise ParseError(f"line {lines[0][0]}: dimension must be positive")
    try:
        basepoint_index = int(lines[1][1])
    except ValueError:
        raise ParseError(f"line {lines[1][0]}: basepoint index must be an integer") from None
    points = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, line in lines[2:]:
        try:
            coords = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(coords) != dimension:
            raise ParseError(f"line {lineno}: point has {len(coords)} coordinates, expected {dimension}")
        if coords in seen:
            raise ParseError(f"line {lineno}: duplicate point {coords} (first at line {seen[coords]})")
        seen[coords] = lineno
        points.append(coords)
    if not (0 <= basepoint_index < len(points)):
        raise ParseError(f"basepoint index {basepoint_index} out of range for {len(points)} points")
    return DigitalImage(points, basepoint=points[basepoint_index])


def serialize_image(image: DigitalImage) -> str:
    lines = [str(image.dimension), str(image.basepoint_index)]
    lines.extend(" ".join(map(str, p)) for p in image.points)
    return "\n".join(lines) + "\n"


def format_word(word: Word) -> str:
    return " ".join(f"g{s}" if s > 0 else f"g{-s}^-1" for s in word)


def parse_word(text: str, n_generators: int) -> Word:
    symbols = []
    for token in text.split():
        body, _, power = token.partition("^")
        if not body.startswith("g"):
            raise ParseError(f"bad word token {token!r}")
        try:
            g = int(body[1:])
        except ValueError:
            raise ParseError(f"bad word token {token!r}") from None
        if not (1 <= g <= n_generators):
            raise ParseError(f"token {token!r}: generator out of range (gens {n_generators})")
        if power == "":
            symbols.append(g)
        elif power == "-1":
            symbols.append(-g)
        else:
            raise ParseError(f"token {token!r}: only exponent -1 is supported")
    return tuple(symbols)


def parse_presentation(text: str) -> Presentation:
    lines = _data_lines(text)
    if not lines:
        raise ParseError("presentation file is empty")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "gens":
        raise ParseError(f"line {lineno}: expected 'gens <count>', got {head!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: generator count must be an integer") from None
    if n < 0:
        raise ParseError(f"line {lineno}: generator count must be non-negative")
    relators = []
    for lineno, line in lines[1:]:
        try:
            relators.append(free_reduce(parse_word(line, n)))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return Presentation(n, relators)


def serialize_presentation(presentation: Presentation) -> str:
    lines = [f"gens {presentation.n_generators}"]
    lines.extend(format_word(r) for r in presentation.relators)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> "SimpleGraph":
    """Edge-list graph format: ``vertices n`` then one ``u v`` pair per line."""
    from .complexes import SimpleGraph

    lines = _data_lines(text)
    if not lines:
        raise ParseError("graph file is empty")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "vertices":
        raise ParseError(f"line {lineno}: expected 'vertices <count>', got {head!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: vertex count must be an integer") from None
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: bad edge ({u}, {v})")
        edges.append((u, v))
    try:
        return SimpleGraph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
