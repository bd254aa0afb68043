"""Shared generators for randomized tests.  Everything takes an explicit
random.Random so seeds stay local to each test."""

import random

from digtop.complexes import SimpleGraph
from digtop.images import DigitalImage, DigitalPath, adjacent


def random_connected_image(
    rng: random.Random, max_points: int = 25, span: int = 6, dimension: int = 2
) -> DigitalImage:
    """Grow a connected image inside [0, span]^dimension by random adjacent
    accretion from a random start."""
    size = rng.randint(1, max_points)
    start = tuple(rng.randint(0, span) for _ in range(dimension))
    points = {start}
    attempts = 0
    while len(points) < size and attempts < 50 * size:
        attempts += 1
        base = rng.choice(sorted(points))
        candidate = tuple(c + rng.randint(-1, 1) for c in base)
        if all(0 <= c <= span for c in candidate):
            points.add(candidate)
    return DigitalImage(sorted(points))


def random_connected_graph(rng: random.Random, max_vertices: int = 10) -> SimpleGraph:
    """Random tree plus a few extra edges, so always simple and connected."""
    n = rng.randint(1, max_vertices)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return SimpleGraph(n, edges)


def random_walk_path(image: DigitalImage, length: int, rng: random.Random) -> DigitalPath:
    steps = [rng.choice(image.points)]
    for _ in range(length):
        options = (steps[-1],) + image.neighbors(steps[-1])
        steps.append(rng.choice(options))
    return DigitalPath(image, steps)


def random_based_loop(image: DigitalImage, length: int, rng: random.Random) -> DigitalPath:
    """Loop of exactly the given length: wander out, retrace, pause."""
    base = image.basepoint
    for _ in range(50):
        steps = [base]
        for _ in range(length - 1):
            options = (steps[-1],) + image.neighbors(steps[-1])
            steps.append(rng.choice(options))
        last = steps[-1]
        if last == base or adjacent(last, base):
            steps.append(base)
            return DigitalPath(image, steps)
    out = [base]
    for _ in range(length // 2):
        options = (out[-1],) + image.neighbors(out[-1])
        out.append(rng.choice(options))
    steps = out + out[-2::-1]
    steps.extend([base] * (length + 1 - len(steps)))
    return DigitalPath(image, steps)
