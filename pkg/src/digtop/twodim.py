"""Free rank of the fundamental group of a connected 2D digital image.

The group of any connected image in Z^2 is free; the rank falls out of an
induction that peels off the lexicographically maximal point.  That point
has at most four neighbors, at fixed offsets to its left and below, and
each possible link shape admits either a one-point deformation retract, a
wedge splitting, or a circle factor.  The recursion below mirrors that
case analysis and strictly shrinks the image at every step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .images import DigitalImage, Point, component_of, is_connected

# offsets of the possible neighbors of the lexicographic maximum
_A = (-1, 1)
_C = (-1, 0)
_B1 = (-1, -1)
_B2 = (0, -1)


@dataclass(frozen=True)
class LinkProfile:
    """Which of the four possible neighbors of the maximal point exist."""

    a: bool
    c: bool
    b1: bool
    b2: bool

    @property
    def size(self) -> int:
        return self.a + self.c + self.b1 + self.b2


def lex_max_point(image: DigitalImage) -> Point:
    """Largest point under (first coordinate, then second) ordering."""
    if image.dimension != 2:
        raise ValueError("image must be 2-dimensional")
    return image.points[-1]


def link_profile(image: DigitalImage, x: Point | None = None) -> LinkProfile:
    if x is None:
        x = lex_max_point(image)
    present = {off for off in (_A, _C, _B1, _B2) if (x[0] + off[0], x[1] + off[1]) in image}
    return LinkProfile(_A in present, _C in present, _B1 in present, _B2 in present)


def split_components_at(
    image: DigitalImage, x: Point
) -> tuple[DigitalImage, DigitalImage] | None:
    """For a maximal point whose link is two mutually non-adjacent
    neighbors, split the rest of the image at x.

    Returns the reachability components of the two neighbors in the image
    minus x, or None when the neighbors are connected there (so no
    splitting happens).
    """
    profile = link_profile(image, x)
    if profile.c or profile.size != 2 or (profile.b1 and profile.b2):
        raise ValueError("link of x must be {a, b1} or {a, b2}")
    a = (x[0] + _A[0], x[1] + _A[1])
    b_off = _B1 if profile.b1 else _B2
    b = (x[0] + b_off[0], x[1] + b_off[1])
    rest = image.without([x])
    side_a = component_of(rest, a)
    if b in side_a:
        return None
    side_b = component_of(rest, b)
    return (
        DigitalImage(sorted(side_a)),
        DigitalImage(sorted(side_b)),
    )


def free_rank(image: DigitalImage, trace: list[str] | None = None) -> int:
    """Rank of the (free) fundamental group of a connected 2D image.

    Append one line per reduction step to ``trace`` when given.
    """
    if image.dimension != 2:
        raise ValueError("image must be 2-dimensional")
    if not is_connected(image):
        raise ValueError("image must be connected")
    return _rank(image, trace)


def _log(trace: list[str] | None, message: str) -> None:
    if trace is not None:
        trace.append(message)


def _rank(image: DigitalImage, trace: list[str]) -> int:
    if len(image) <= 3:
        _log(trace, f"{len(image)} points: contractible, rank 0")
        return 0
    x = lex_max_point(image)
    profile = link_profile(image, x)
    link_points = {
        (x[0] + off[0], x[1] + off[1])
        for off, here in ((_A, profile.a), (_C, profile.c), (_B1, profile.b1), (_B2, profile.b2))
        if here
    }
    if len(image) == len(link_points) + 1:
        # x together with its whole link: a cone, contractible
        _log(trace, f"image is {x} plus its link: contractible, rank 0")
        return 0

    if profile.c:
        # retract x onto its left neighbor
        _log(trace, f"case 1 at {x}: retract onto left neighbor, drop {x}")
        return _rank(image.without([x]), trace)

    if profile.b1 and profile.b2:
        # retract the point below x onto the one diagonally below-left
        b2 = (x[0], x[1] - 1)
        _log(trace, f"case 2 at {x}: retract {b2} onto the diagonal neighbor, drop {b2}")
        return _rank(image.without([b2]), trace)

    if profile.size == 1:
        # x dangles from a single neighbor: wedge with an interval
        _log(trace, f"case 3 at {x}: single-neighbor spur, drop {x}")
        return _rank(image.without([x]), trace)

    # link is {a, b1} or {a, b2}: the two neighbors are never adjacent
    split = split_components_at(image, x)
    if split is None:
        # the neighbors reconnect around x: x closes a circle factor
        if trace is not None:
            circle_points = _witness_circle(image, x)
            _log(
                trace,
                f"case 4/5 at {x} (connected sub-case): circle factor "
                f"{' '.join(map(str, circle_points))}, drop {x}",
            )
        return 1 + _rank(image.without([x]), trace)
    side_a, side_b = split
    _log(
        trace,
        f"case 4/5 at {x} (wedge sub-case): split into {len(side_a)} + {len(side_b)} points",
    )
    with_a = DigitalImage(sorted(side_a.points + (x,)))
    with_b = DigitalImage(sorted(side_b.points + (x,)))
    return _rank(with_a, trace) + _rank(with_b, trace)
