"""Edge loops, elementary edge moves, and spanning-tree presentations.

An edge loop in a complex is a vertex sequence returning to the basepoint
in which consecutive vertices are equal or joined by an edge.  The group
of edge loops modulo the two elementary moves is presented by one
generator per non-tree edge of a spanning tree and one relator per
triangle; a digital loop maps to a word by reading off the non-tree edges
it crosses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal, Sequence

from .complexes import CliqueComplex, two_skeleton
from .groups import Presentation, Word, free_reduce
from .images import DigitalImage, DigitalPath

EdgeLoop = tuple[int, ...]


def is_edge_path(complex_: CliqueComplex, vertices: Sequence[int]) -> bool:
    if not vertices:
        return False
    n = len(complex_.vertices)
    if any(not (0 <= v < n) for v in vertices):
        return False
    return all(u == v or complex_.has_edge(u, v) for u, v in zip(vertices, vertices[1:]))


def is_edge_loop(complex_: CliqueComplex, vertices: Sequence[int]) -> bool:
    return (
        is_edge_path(complex_, vertices)
        and vertices[0] == complex_.basepoint
        and vertices[-1] == complex_.basepoint
    )


def edge_loop_of(loop: DigitalPath) -> EdgeLoop:
    """The vertex sequence of a based digital loop in its image's complex."""
    if not loop.is_loop:
        raise ValueError("path is not a based loop")
    image = loop.image
    return tuple(image.index(p) for p in loop.steps)


def digital_loop_from_edge_loop(image: DigitalImage, loop: Sequence[int]) -> DigitalPath:
    """Interpret an edge loop as a digital loop; every edge loop arises this way."""
    return DigitalPath(image, [image.points[v] for v in loop])


class SpanningTreeData:
    """Breadth-first spanning tree from the basepoint, with the non-tree
    edges numbered g1, g2, ... in lexicographic order.

    The BFS visits neighbors in increasing vertex order, so the tree, the
    generator numbering, and everything derived from them are canonical.
    """

    __slots__ = ("complex", "parent", "depth", "tree_edges", "non_tree_edges", "generator_of")

    def __init__(self, complex_: CliqueComplex):
        n = len(complex_.vertices)
        root = complex_.basepoint
        parent: list[int | None] = [None] * n
        depth = [-1] * n
        depth[root] = 0
        order = [root]
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in sorted(complex_.neighbors(v)):
                    if depth[w] == -1:
                        depth[w] = depth[v] + 1
                        parent[w] = v
                        order.append(w)
                        nxt.append(w)
            frontier = nxt
        if len(order) != n:
            raise ValueError("complex is not connected")
        self.complex = complex_
        self.parent = tuple(parent)
        self.depth = tuple(depth)
        tree = set()
        for v in range(n):
            p = parent[v]
            if p is not None:
                tree.add((min(v, p), max(v, p)))
        self.tree_edges = frozenset(tree)
        self.non_tree_edges = tuple(e for e in complex_.edges if e not in tree)
        self.generator_of = {e: i + 1 for i, e in enumerate(self.non_tree_edges)}

    @property
    def n_generators(self) -> int:
        return len(self.non_tree_edges)

    def is_tree_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.tree_edges

    def edge_symbol(self, u: int, v: int) -> int:
        """Signed generator for crossing u -> v; 0 for tree edges or pauses."""
        if u == v:
            return 0
        e = (min(u, v), max(u, v))
        if e in self.tree_edges:
            return 0
        g = self.generator_of.get(e)
        if g is None:
            raise ValueError(f"({u}, {v}) is not an edge of the complex")
        return g if u < v else -g

    def path_from_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path

    def generator_loop(self, generator: int) -> EdgeLoop:
        """The canonical edge loop crossing exactly that generator, forward."""
        u, v = self.non_tree_edges[generator - 1]
        up = self.path_from_root(u)
        down = self.path_from_root(v)
        return tuple(up + down[::-1])


def spanning_tree(complex_: CliqueComplex) -> SpanningTreeData:
    return SpanningTreeData(complex_)


def presentation_of(complex_: CliqueComplex, tree: SpanningTreeData | None = None) -> Presentation:
    """Spanning-tree presentation of the edge group of a connected complex.

    One generator per non-tree edge; per triangle (a < b < c) the relator
    says crossing a->b then b->c equals crossing a->c, with tree edges
    contributing nothing.
    """
    if tree is None:
        tree = SpanningTreeData(complex_)
    relators = []
    for a, b, c in complex_.triangles:
        word = [tree.edge_symbol(a, b), tree.edge_symbol(b, c), -tree.edge_symbol(a, c)]
        relators.append([s for s in word if s])
    return Presentation(tree.n_generators, relators)


def loop_to_word(
    complex_: CliqueComplex, tree: SpanningTreeData, loop: Sequence[int]
) -> Word:
    """Freely reduced word of the non-tree edges an edge loop crosses."""
    if not is_edge_loop(complex_, loop):
        raise ValueError("sequence is not an edge loop at the basepoint")
    return free_reduce(
        s for u, v in zip(loop, loop[1:]) if (s := tree.edge_symbol(u, v))
    )


MoveKind = Literal["a-delete", "a-insert", "b-delete", "b-insert"]


@dataclass(frozen=True)
class MoveSpec:
    """One elementary edge move.

    a-delete i: drop position i+1 when it repeats position i.
    a-insert i: repeat the vertex at position i.
    b-delete i: drop position i (0 < i < last) when the three surrounding
        vertices span a simplex.
    b-insert i: insert ``vertex`` after position i, allowed when the two
        neighbors plus the new vertex span a simplex.

    The simplex test uses the distinct vertices only, so the degenerate
    collapse ...u, v, u... -> ...u, u... needs just the edge {u, v}.
    """

    kind: MoveKind
    index: int
    vertex: int | None = None


def apply_edge_move(complex_: CliqueComplex, loop: Sequence[int], move: MoveSpec) -> EdgeLoop:
    """Rewrite an edge loop by one elementary move; endpoints never change."""
    seq = tuple(loop)
    if not is_edge_loop(complex_, seq):
        raise ValueError("sequence is not an edge loop at the basepoint")
    n = len(seq) - 1
    i = move.index
    if move.kind == "a-delete":
        if not (0 <= i <= n - 1) or seq[i] != seq[i + 1]:
            raise ValueError(f"no repeat at index {i}")
        return seq[: i + 1] + seq[i + 2 :]
    if move.kind == "a-insert":
        if not (0 <= i <= n):
            raise ValueError(f"index {i} out of range")
        return seq[: i + 1] + (seq[i],) + seq[i + 1 :]
    if move.kind == "b-delete":
        if not (1 <= i <= n - 1):
            raise ValueError(f"index {i} out of range")
        if not complex_.is_simplex((seq[i - 1], seq[i], seq[i + 1])):
            raise ValueError(f"vertices around index {i} do not span a simplex")
        return seq[:i] + seq[i + 1 :]
    if move.kind == "b-insert":
        if not (0 <= i <= n - 1):
            raise ValueError(f"index {i} out of range")
        if move.vertex is None:
            raise ValueError("b-insert needs a vertex")
        if not complex_.is_simplex((seq[i], move.vertex, seq[i + 1])):
            raise ValueError(f"{seq[i]}, {move.vertex}, {seq[i + 1]} do not span a simplex")
        return seq[: i + 1] + (move.vertex,) + seq[i + 1 :]
    raise ValueError(f"unknown move kind {move.kind!r}")


def applicable_moves(complex_: CliqueComplex, loop: Sequence[int]) -> Iterator[MoveSpec]:
    """All elementary moves applicable to an edge loop."""
    seq = tuple(loop)
    n = len(seq) - 1
    n_vertices = len(complex_.vertices)
    for i in range(n):
        if seq[i] == seq[i + 1]:
            yield MoveSpec("a-delete", i)
    for i in range(n + 1):
        yield MoveSpec("a-insert", i)
    for i in range(1, n):
        if complex_.is_simplex((seq[i - 1], seq[i], seq[i + 1])):
            yield MoveSpec("b-delete", i)
    for i in range(n):
        for v in range(n_vertices):
            if v != seq[i] and complex_.is_simplex((seq[i], v, seq[i + 1])):
                yield MoveSpec("b-insert", i, v)


@lru_cache(maxsize=64)
def edge_group_data(image: DigitalImage) -> tuple[CliqueComplex, SpanningTreeData, Presentation]:
    """Complex, canonical tree, and presentation of an image, computed once."""
    complex_ = two_skeleton(image)
    tree = SpanningTreeData(complex_)
    return complex_, tree, presentation_of(complex_, tree)


def phi(image: DigitalImage, loop: DigitalPath) -> Word:
    """Word of a based digital loop in the image's edge-group presentation."""
    complex_, tree, _ = edge_group_data(image)
    return loop_to_word(complex_, tree, edge_loop_of(loop))
