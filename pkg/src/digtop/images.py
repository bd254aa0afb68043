"""Digital images on the integer lattice, and the calculus of paths in them.

A digital image is a finite set of points of Z^n with a distinguished
basepoint.  Two distinct points are adjacent when every coordinate differs
by at most 1 (Chebyshev distance 1).  Paths are finite step sequences in
which consecutive steps are adjacent or equal.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]


def adjacent(p: Point, q: Point) -> bool:
    """Strict lattice adjacency: p != q and Chebyshev distance <= 1.

    The underlying continuity relation is reflexive; paths use
    ``adjacent_or_equal``.  This irreflexive version is the edge relation
    of the image seen as a simple graph.
    """
    if len(p) != len(q):
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return p != q and all(abs(a - b) <= 1 for a, b in zip(p, q))


def adjacent_or_equal(p: Point, q: Point) -> bool:
    if len(p) != len(q):
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return all(abs(a - b) <= 1 for a, b in zip(p, q))


class DigitalImage:
    """A finite based subset of Z^n.  Adjacency is derived from coordinates.

    Points are stored in lexicographic order so that equality and hashing
    are canonical.  Instances are immutable.
    """

    __slots__ = ("dimension", "points", "basepoint_index", "_point_set", "_neighbors")

    def __init__(self, points: Iterable[Point], basepoint: Point | None = None):
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise ValueError("digital image must be nonempty")
        self.dimension = len(pts[0])
        if self.dimension < 1:
            raise ValueError("points must have at least one coordinate")
        for p in pts:
            if len(p) != self.dimension:
                raise ValueError(f"point {p} has wrong dimension (expected {self.dimension})")
        if len(set(pts)) != len(pts):
            seen: set[Point] = set()
            for p in pts:
                if p in seen:
                    raise ValueError(f"duplicate point {p}")
                seen.add(p)
        self.points: tuple[Point, ...] = tuple(sorted(pts))
        self._point_set = frozenset(self.points)
        if basepoint is None:
            self.basepoint_index = 0
        else:
            basepoint = tuple(int(c) for c in basepoint)
            try:
                self.basepoint_index = self.points.index(basepoint)
            except ValueError:
                raise ValueError(f"basepoint {basepoint} is not a point of the image") from None
        nbrs: dict[Point, tuple[Point, ...]] = {}
        for p in self.points:
            nbrs[p] = tuple(q for q in self.points if q != p and adjacent_or_equal(p, q))
        self._neighbors = nbrs

    @property
    def basepoint(self) -> Point:
        return self.points[self.basepoint_index]

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self._point_set

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def index(self, p: Point) -> int:
        return self.points.index(p)

    def neighbors(self, p: Point) -> tuple[Point, ...]:
        """The points adjacent to p, in lexicographic order."""
        return self._neighbors[p]

    def with_basepoint(self, basepoint: Point) -> "DigitalImage":
        return DigitalImage(self.points, basepoint)

    def without(self, removed: Iterable[Point], basepoint: Point | None = None) -> "DigitalImage":
        gone = set(removed)
        return DigitalImage([p for p in self.points if p not in gone], basepoint)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigitalImage):
            return NotImplemented
        return self.points == other.points and self.basepoint_index == other.basepoint_index

    def __hash__(self) -> int:
        return hash((self.points, self.basepoint_index))

    def __repr__(self) -> str:
        return f"DigitalImage({len(self.points)} points in Z^{self.dimension}, basepoint {self.basepoint})"


def is_connected(image: DigitalImage) -> bool:
    """Breadth-first reachability over the adjacency graph."""
    start = image.basepoint
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for q in image.neighbors(p):
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen) == len(image)


def component_of(image: DigitalImage, start: Point) -> set[Point]:
    if start not in image:
        raise ValueError(f"{start} is not a point of the image")
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for q in image.neighbors(p):
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


class DigitalPath:
    """A finite sequence of image points with step-wise adjacency.

    A path with N+1 steps has length N.  Consecutive steps may also be
    equal (the continuity relation is reflexive), which is how pauses and
    constant paths arise.
    """

    __slots__ = ("image", "steps")

    def __init__(self, image: DigitalImage, steps: Sequence[Point]):
        stps = tuple(tuple(int(c) for c in p) for p in steps)
        if not stps:
            raise ValueError("path must have at least one step")
        for p in stps:
            if p not in image:
                raise ValueError(f"path step {p} is not a point of the image")
        for a, b in zip(stps, stps[1:]):
            if not adjacent_or_equal(a, b):
                raise ValueError(f"consecutive steps {a}, {b} are not adjacent")
        self.image = image
        self.steps = stps

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def start(self) -> Point:
        return self.steps[0]

    @property
    def end(self) -> Point:
        return self.steps[-1]

    @property
    def is_based(self) -> bool:
        return self.start == self.image.basepoint

    @property
    def is_loop(self) -> bool:
        b = self.image.basepoint
        return self.start == b and self.end == b

    def __len__(self) -> int:
        return len(self.steps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigitalPath):
            return NotImplemented
        return self.image == other.image and self.steps == other.steps

    def __hash__(self) -> int:
        return hash((self.image, self.steps))

    def __repr__(self) -> str:
        return f"DigitalPath(length {self.length}: {' -> '.join(map(str, self.steps))})"


def constant_loop(image: DigitalImage, length: int) -> DigitalPath:
    """The loop of the given length sitting at the basepoint."""
    if length < 0:
        raise ValueError("length must be >= 0")
    return DigitalPath(image, (image.basepoint,) * (length + 1))


def concatenate(alpha: DigitalPath, beta: DigitalPath) -> DigitalPath:
    """Join two paths end to start, pausing for a unit interval at the seam.

    The result has length len(alpha) + len(beta) + 1; requires the end of
    alpha to be adjacent or equal to the start of beta.
    """
    if alpha.image != beta.image:
        raise ValueError("paths must live in the same image")
    if not adjacent_or_equal(alpha.end, beta.start):
        raise ValueError(f"cannot concatenate: {alpha.end} and {beta.start} are not adjacent")
    return DigitalPath(alpha.image, alpha.steps + beta.steps)


def reverse(path: DigitalPath) -> DigitalPath:
    return DigitalPath(path.image, path.steps[::-1])


def standard_projection_compose(path: DigitalPath, k: int) -> DigitalPath:
    """Reparametrize by the k-fold interval projection: repeat each step k times.

    The result has length k*(N+1) - 1 where N is the input length; k = 1
    returns the path unchanged.
    """
    if k < 1:
        raise ValueError("subdivision factor must be >= 1")
    steps = tuple(p for p in path.steps for _ in range(k))
    return DigitalPath(path.image, steps)


def trivial_extension(path: DigitalPath, pauses: Sequence[int]) -> DigitalPath:
    """Repeat step i an extra pauses[i] times, keeping the traced points.

    pauses must list one non-negative count per step; all zeros returns
    the original path.
    """
    if len(pauses) != len(path.steps):
        raise ValueError(f"need {len(path.steps)} pause counts, got {len(pauses)}")
    if any(t < 0 for t in pauses):
        raise ValueError("pause counts must be non-negative")
    steps = tuple(p for p, t in zip(path.steps, pauses) for _ in range(t + 1))
    return DigitalPath(path.image, steps)


def is_contractible_path(points: Sequence[Point], image: DigitalImage) -> bool:
    """True iff the sequence carries exactly the consecutive adjacencies.

    The points must be distinct, consecutive ones adjacent, and no other
    pair adjacent; in particular the endpoints are non-adjacent.  Such a
    set is isomorphic to a digital interval.
    """
    pts = [tuple(p) for p in points]
    if len(pts) < 3:
        raise ValueError("a contractible path needs at least 3 points")
    for p in pts:
        if p not in image:
            raise ValueError(f"point {p} is not in the image")
    if len(set(pts)) != len(pts):
        return False
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            adj = adjacent(pts[i], pts[j])
            if j == i + 1 and not adj:
                return False
            if j > i + 1 and adj:
                return False
    return True


class ContractiblePath:
    """An ordered point set from a to b carrying only consecutive adjacencies."""

    __slots__ = ("image", "points")

    def __init__(self, image: DigitalImage, points: Sequence[Point]):
        pts = tuple(tuple(int(c) for c in p) for p in points)
        if not is_contractible_path(pts, image):
            raise ValueError(f"{pts} is not a contractible path")
        self.image = image
        self.points = pts

    def as_path(self) -> DigitalPath:
        return DigitalPath(self.image, self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"ContractiblePath({' -> '.join(map(str, self.points))})"


def shorten_path(path: DigitalPath) -> ContractiblePath:
    """Shorten a path with non-adjacent endpoints to a contractible path.

    First deletes the segment between the two sides of any repeated value,
    then deletes the segment strictly between values adjacent at distance
    >= 2 along the path, iterating to a fixed point.  The leftmost
    applicable deletion is always taken first, so the result is
    deterministic.  The output's points are a subset of the input's.
    """
    a, b = path.start, path.end
    if a == b or adjacent(a, b):
        raise ValueError("endpoints must be distinct and non-adjacent")
    steps = list(path.steps)

    changed = True
    while changed:
        changed = False
        # delete between repeated values (keep the first copy)
        for i in range(len(steps)):
            j = next((j for j in range(i + 1, len(steps)) if steps[j] == steps[i]), None)
            if j is not None:
                steps = steps[: i + 1] + steps[j + 1 :]
                changed = True
                break
        if changed:
            continue
        # shortcut between values adjacent at path distance >= 2 (keep both)
        for i in range(len(steps)):
            k = next(
                (k for k in range(i + 2, len(steps)) if adjacent(steps[i], steps[k])),
                None,
            )
            if k is not None:
                steps = steps[: i + 1] + steps[k:]
                changed = True
                break
    return ContractiblePath(path.image, steps)
