"""Exhaustive desk-scale deciders for digital and edge homotopy.

These searches are the independent check on the word-level machinery.
Results are tri-state: True is always a certificate, False is only
returned where the state space was enumerated completely (the
fixed-length search), and None means a bound was hit and nothing is
known.  The bounds are pragmatic defaults, not derived from the theory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .complexes import CliqueComplex
from .edgegroups import EdgeLoop, applicable_moves, apply_edge_move, is_edge_loop
from .images import (
    DigitalImage,
    DigitalPath,
    Point,
    adjacent_or_equal,
    standard_projection_compose,
)


@dataclass(frozen=True)
class HomotopySearchConfig:
    """Bounds for the subdivision search: largest subdivision factor tried,
    largest visited-state count per fixed-length search, and whether to
    insist the two loops already have equal length."""

    max_factor: int = 3
    max_states: int = 200_000
    require_equal_length: bool = False

    def __post_init__(self) -> None:
        if self.max_factor < 1 or self.max_states < 1:
            raise ValueError("bounds must be positive")


class StateBoundExceeded(Exception):
    """The fixed-length search hit its state cap; the answer is unknown."""


def one_step_related(image: DigitalImage, sigma: Sequence[Point], tau: Sequence[Point]) -> bool:
    """One homotopy step: every value of one loop is adjacent-or-equal to
    the other loop's values at all neighboring times."""
    m = len(sigma)
    if len(tau) != m:
        return False
    for s in range(m):
        for t in (s - 1, s, s + 1):
            if 0 <= t < m and not adjacent_or_equal(sigma[s], tau[t]):
                return False
    return True


class _LoopSpace:
    """Breadth-first machinery over based loops of one fixed length.

    A homotopy step may change many positions at once, but it always
    factors into steps that change a single position (slide the change
    across the interval one time unit at a time), so reachability is the
    same under single-position moves.  Those are what the search expands:
    a new value at position s must be adjacent-or-equal to the old values
    at positions s-1, s and s+1.
    """

    def __init__(self, image: DigitalImage):
        self.image = image
        self.closed = {p: (p,) + image.neighbors(p) for p in image.points}

    def neighbors(self, loop: tuple[Point, ...]) -> Iterator[tuple[Point, ...]]:
        closed = self.closed
        for s in range(1, len(loop) - 1):
            before, here, after = loop[s - 1], loop[s], loop[s + 1]
            for q in closed[here]:
                if q != here and adjacent_or_equal(q, before) and adjacent_or_equal(q, after):
                    yield loop[:s] + (q,) + loop[s + 1 :]

    def all_loops(self, length: int) -> Iterator[tuple[Point, ...]]:
        base = self.image.basepoint
        if length == 0:
            yield (base,)
            return
        closed = self.closed
        prefix: list[Point] = [base]

        def extend(position: int) -> Iterator[tuple[Point, ...]]:
            if position == length:
                if adjacent_or_equal(prefix[-1], base):
                    yield tuple(prefix) + (base,)
                return
            for q in closed[prefix[-1]]:
                prefix.append(q)
                yield from extend(position + 1)
                prefix.pop()

        yield from extend(1)


def loops_homotopic_fixed_length(
    image: DigitalImage,
    alpha: DigitalPath,
    beta: DigitalPath,
    max_states: int | None = None,
) -> bool:
    """Decide homotopy of two based loops of the same length by exhaustive
    search of the loop space.

    Breadth-first search from one loop either reaches the other or
    enumerates its entire homotopy class, so both True and False are
    sound.  Raises StateBoundExceeded if a state cap is given and hit.
    """
    if alpha.image != image or beta.image != image:
        raise ValueError("loops must live in the given image")
    if not (alpha.is_loop and beta.is_loop):
        raise ValueError("both paths must be based loops")
    if alpha.length != beta.length:
        raise ValueError("fixed-length oracle needs equal lengths")
    start, goal = alpha.steps, beta.steps
    if start == goal:
        return True
    space = _LoopSpace(image)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for neighbor in space.neighbors(state):
                if neighbor in seen:
                    continue
                if neighbor == goal:
                    return True
                if max_states is not None and len(seen) >= max_states:
                    raise StateBoundExceeded(f"visited {len(seen)} loops")
                seen.add(neighbor)
                nxt.append(neighbor)
        frontier = nxt
    return False


def homotopy_classes_fixed_length(
    image: DigitalImage, length: int, max_states: int | None = None
) -> list[set[tuple[Point, ...]]]:
    """Partition of all based loops of one length into homotopy classes."""
    space = _LoopSpace(image)
    loops = list(space.all_loops(length))
    if max_states is not None and len(loops) > max_states:
        raise StateBoundExceeded(f"{len(loops)} loops of length {length}")
    classes: list[set[tuple[Point, ...]]] = []
    unseen = set(loops)
    while unseen:
        seed = unseen.pop()
        cls = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for state in frontier:
                for neighbor in space.neighbors(state):
                    if neighbor in unseen:
                        unseen.remove(neighbor)
                        cls.add(neighbor)
                        nxt.append(neighbor)
            frontier = nxt
        classes.append(cls)
    return classes


def subdivision_homotopic(
    image: DigitalImage,
    alpha: DigitalPath,
    beta: DigitalPath,
    config: HomotopySearchConfig = HomotopySearchConfig(),
) -> bool | None:
    """Search for a homotopy after reparametrizing both loops.

    Tries every factor pair (k, l) within the configured bound that gives
    the loops a common length, running the fixed-length oracle on each.
    True on the first success is a certificate; None means every bounded
    attempt failed or overflowed, which decides nothing.
    """
    if not (alpha.is_loop and beta.is_loop):
        raise ValueError("both paths must be based loops")
    m, n = alpha.length + 1, beta.length + 1
    if config.require_equal_length and alpha.length != beta.length:
        raise ValueError("loops differ in length but equal length was required")
    for k in range(1, config.max_factor + 1):
        if config.require_equal_length and k > 1:
            break
        total = k * m
        if total % n:
            continue
        l = total // n
        if l > config.max_factor:
            continue
        try:
            if loops_homotopic_fixed_length(
                image,
                standard_projection_compose(alpha, k),
                standard_projection_compose(beta, l),
                max_states=config.max_states,
            ):
                return True
        except StateBoundExceeded:
            continue
    return None


def edge_homotopic_bounded(
    complex_: CliqueComplex, loop1: EdgeLoop, loop2: EdgeLoop, bound: int = 10_000
) -> bool | None:
    """Breadth-first search over elementary edge moves.

    Insertions make the move graph infinite, so only True (loop2 reached
    within ``bound`` visited loops) is conclusive; None decides nothing.
    """
    loop1, loop2 = tuple(loop1), tuple(loop2)
    for name, loop in (("first", loop1), ("second", loop2)):
        if not is_edge_loop(complex_, loop):
            raise ValueError(f"{name} sequence is not an edge loop at the basepoint")
    if loop1 == loop2:
        return True
    seen = {loop1}
    frontier = [loop1]
    while frontier and len(seen) < bound:
        nxt = []
        for state in frontier:
            for move in applicable_moves(complex_, state):
                neighbor = apply_edge_move(complex_, state, move)
                if neighbor in seen:
                    continue
                if neighbor == loop2:
                    return True
                if len(seen) >= bound:
                    return None
                seen.add(neighbor)
                nxt.append(neighbor)
        frontier = nxt
    return None
