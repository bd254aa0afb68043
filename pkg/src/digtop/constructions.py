"""Stock digital images and the constructive embedding/realization machinery.

Everything here is a pure constructor: intervals, circles, the diamond and
its one-point double, a 13-point image whose clique complex triangulates
the projective plane, an embedding of arbitrary finite simple graphs into
the lattice with adjacency preserved exactly, and the wedge-plus-disks
complex realizing a finitely presented group as a fundamental group.
"""

from __future__ import annotations

from typing import Sequence

from .complexes import SimpleGraph, two_skeleton
from .groups import Presentation, Word, free_reduce
from .images import DigitalImage, Point, adjacent


def digital_interval(n: int) -> DigitalImage:
    """The integers 0..n in Z^1, based at 0."""
    if n < 0:
        raise ValueError("interval length must be >= 0")
    return DigitalImage([(i,) for i in range(n + 1)], basepoint=(0,))


def diamond() -> DigitalImage:
    """The 4-point circle {(1,0), (0,1), (-1,0), (0,-1)}, based at (1,0)."""
    return DigitalImage([(1, 0), (0, 1), (-1, 0), (0, -1)], basepoint=(1, 0))


def double_diamond() -> DigitalImage:
    """Two diamonds sharing exactly the point (0,0), with no other
    adjacencies between them; the basepoint is the shared point."""
    points = [(0, 0), (1, 1), (2, 0), (1, -1), (-1, 1), (-2, 0), (-1, -1)]
    return DigitalImage(points, basepoint=(0, 0))


def double_diamond_halves() -> tuple[DigitalImage, DigitalImage]:
    """The two wedge factors of ``double_diamond``, both based at (0,0)."""
    right = DigitalImage([(0, 0), (1, 1), (2, 0), (1, -1)], basepoint=(0, 0))
    left = DigitalImage([(0, 0), (-1, 1), (-2, 0), (-1, -1)], basepoint=(0, 0))
    return right, left


_PROJECTIVE_PLANE_POINTS: dict[int, Point] = {
    1: (0, 0, 0, 1, 0, -1, 0, -1),
    2: (0, 0, 0, 0, 1, 0, -1, -1),
    3: (0, 0, 0, 0, 0, 1, 0, -1),
    4: (0, 0, 0, 0, 0, 0, 1, -1),
    5: (1, 0, 1, 0, -1, -1, 0, 0),
    6: (1, 1, 0, 0, 0, -1, -1, 0),
    7: (0, 1, -1, -1, 0, 0, -1, 0),
    8: (-1, 1, 0, -1, -1, 0, 0, 0),
    9: (-1, 0, 1, 0, -1, -1, 0, 0),
    10: (-1, -1, 0, 0, 0, -1, -1, 0),
    11: (0, -1, -1, -1, 0, 0, -1, 0),
    12: (1, -1, 0, -1, -1, 0, 0, 0),
    13: (0, 0, 0, 0, 0, 0, 0, 1),
}


def projective_plane() -> DigitalImage:
    """13 points in Z^8 whose clique complex triangulates the projective
    plane: an 8-cycle, four rim vertices, and a cone vertex, which is the
    basepoint."""
    return DigitalImage(_PROJECTIVE_PLANE_POINTS.values(), basepoint=_PROJECTIVE_PLANE_POINTS[13])


def is_circle(image: DigitalImage) -> bool:
    """Whether the image carries exactly the adjacencies of an N-cycle, N >= 4."""
    if len(image) < 4:
        return False
    if any(len(image.neighbors(p)) != 2 for p in image):
        return False
    complex_ = two_skeleton(image)
    return complex_.is_connected() and not complex_.triangles


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def embed_graph(graph: SimpleGraph) -> tuple[DigitalImage, tuple[Point, ...]]:
    """Embed a finite simple graph in the lattice with adjacency preserved
    exactly, one new coordinate per vertex after the first.

    Vertices are inserted in input order.  At each insertion the already
    placed vertices gain one coordinate: 0 if they neighbor the new vertex,
    -1 otherwise; the new vertex sits at (0, ..., 0, 1).  Appending 0/-1
    never changes distances among the old points, and the new point is at
    Chebyshev distance 1 exactly from the points kept at 0, so the output
    adjacency matches the input edge set and all coordinates stay in
    {-1, 0, 1}.  Returns the image and the vertex -> point correspondence.
    """
    n = graph.n
    if n == 0:
        raise ValueError("graph must be nonempty")
    if n == 1:
        image = DigitalImage([(0,)], basepoint=(0,))
        return image, ((0,),)
    coords: list[tuple[int, ...]] = [()]
    for v in range(1, n):
        link = graph.neighbors(v)
        coords = [coords[u] + ((0,) if u in link else (-1,)) for u in range(v)]
        coords.append((0,) * (v - 1) + (1,))
    correspondence = tuple(coords)
    image = DigitalImage(correspondence, basepoint=correspondence[0])
    return image, correspondence


def circle(n: int) -> DigitalImage:
    """A digital circle of length n: exactly the cyclic adjacencies.

    n = 4 is the planar diamond; larger circles embed the abstract n-cycle
    via ``embed_graph``, which cannot pick up chord adjacencies the way
    hand-built planar staircases do.
    """
    if n < 4:
        raise ValueError("a digital circle has at least 4 points")
    if n == 4:
        return diamond()
    image, _ = embed_graph(cycle_graph(n))
    return image


class RealizationComplex:
    """Wedge-of-cycles skeleton with one triangulated disk per relator.

    ``graph`` is the glued 1-skeleton; ``triangles`` lists the disk
    triangles, which the construction guarantees are exactly the
    3-cliques; vertex 0 is the wedge point.
    """

    __slots__ = ("graph", "triangles", "n_generators", "relators")

    def __init__(self, graph: SimpleGraph, triangles: tuple[tuple[int, int, int], ...],
                 n_generators: int, relators: tuple[Word, ...]):
        self.graph = graph
        self.triangles = triangles
        self.n_generators = n_generators
        self.relators = relators

    def __repr__(self) -> str:
        return (
            f"RealizationComplex({self.n_generators} generators, "
            f"{len(self.relators)} relators, {self.graph.n} vertices)"
        )


def _check_relator(word: Word, n_generators: int) -> Word:
    w = tuple(word)
    if not w:
        raise ValueError("relator must be nonempty")
    if any(abs(s) < 1 or abs(s) > n_generators for s in w):
        raise ValueError(f"relator {w} uses a generator out of range")
    if free_reduce(w) != w:
        raise ValueError(f"relator {w} is not reduced")
    return w


def realization_complex(n_generators: int, relators: Sequence[Word]) -> RealizationComplex:
    """The 2-complex with the given presentation as edge group.

    The 1-skeleton is an n-fold one-point union of 4-cycles (one per
    generator).  Each relator of length k contributes a disk: its outer
    4k-cycle is identified, letter by letter, with the wedge cycles (in
    reverse for inverse letters), and the fresh part is an inner 4k-cycle
    joined to the outer one by a triangulated annulus plus a cone vertex
    over the inner cycle.

    The annulus diagonals run from outer position t to inner position
    t+1, except across the seam between the last letter and the first,
    where the diagonal runs from inner 4k-1 to outer 0 instead.  When the
    relator ends with the inverse of its first letter those two letters
    share a wedge vertex two outer positions apart, and the straight
    diagonal would hand that vertex two consecutive inner neighbors,
    creating a 3-clique outside the design (and with the wedge point a
    4-clique).  The flipped seam diagonal avoids the coincidence for every
    reduced relator, so the glued graph has exactly the designed
    3-cliques and no 4-cliques.
    """
    if n_generators < 1:
        raise ValueError("need at least one generator")
    rels = tuple(_check_relator(r, n_generators) for r in relators)

    # wedge: vertex 0 plus three vertices per generator petal
    def petal(gen: int, position: int) -> int:
        # position 1..3 on the 4-cycle of that generator
        return 1 + 3 * (gen - 1) + (position - 1)

    edges: set[tuple[int, int]] = set()

    def add_edge(u: int, v: int) -> None:
        edges.add((min(u, v), max(u, v)))

    for g in range(1, n_generators + 1):
        add_edge(0, petal(g, 1))
        add_edge(petal(g, 1), petal(g, 2))
        add_edge(petal(g, 2), petal(g, 3))
        add_edge(petal(g, 3), 0)

    next_vertex = 1 + 3 * n_generators
    triangles: list[tuple[int, int, int]] = []

    for rel in rels:
        k = len(rel)
        # outer cycle, already identified with the wedge
        outer: list[int] = []
        for s in rel:
            gen = abs(s)
            outer.append(0)
            positions = (1, 2, 3) if s > 0 else (3, 2, 1)
            outer.extend(petal(gen, r) for r in positions)
        # fresh inner cycle and cone vertex
        inner = list(range(next_vertex, next_vertex + 4 * k))
        next_vertex += 4 * k
        cone = next_vertex
        next_vertex += 1
        m = 4 * k
        for t in range(m):
            add_edge(inner[t], inner[(t + 1) % m])
            add_edge(outer[t], inner[t])
            add_edge(cone, inner[t])
            if t < m - 1:
                add_edge(outer[t], inner[t + 1])
            else:
                add_edge(inner[m - 1], outer[0])
        for t in range(m):
            if t < m - 1:
                triangles.append(tuple(sorted((outer[t], inner[t], inner[t + 1]))))
                triangles.append(tuple(sorted((outer[t], outer[t + 1], inner[t + 1]))))
            else:
                triangles.append(tuple(sorted((outer[m - 1], outer[0], inner[m - 1]))))
                triangles.append(tuple(sorted((outer[0], inner[m - 1], inner[0]))))
            triangles.append(tuple(sorted((cone, inner[t], inner[(t + 1) % m]))))

    graph = SimpleGraph(next_vertex, edges)
    return RealizationComplex(graph, tuple(sorted(triangles)), n_generators, rels)


def realize_presentation(presentation: Presentation) -> DigitalImage:
    """A digital image whose fundamental group is the presented group.

    Builds the wedge-plus-disks complex, embeds its 1-skeleton in the
    lattice, and verifies that the embedded image's 3-cliques are exactly
    the designed disk triangles; the wedge point becomes the basepoint.
    """
    built = realization_complex(presentation.n_generators, presentation.relators)
    image, correspondence = embed_graph(built.graph)
    index_of = {p: i for i, p in enumerate(image.points)}
    expected = {
        tuple(sorted((index_of[correspondence[a]], index_of[correspondence[b]], index_of[correspondence[c]])))
        for a, b, c in built.triangles
    }
    actual = set(two_skeleton(image).triangles)
    if expected != actual:
        raise RuntimeError("embedded image grew 3-cliques beyond the designed disk triangles")
    return image
