"""Two-dimensional clique (flag) complexes of digital images and graphs.

Only the 2-skeleton is materialized: vertices, edges (adjacent pairs) and
triangles (3-cliques).  That is all the edge-group machinery needs, and it
keeps high-dimensional examples cheap.  Larger cliques are counted on
demand by ``max_clique_size``.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence, Union

from .images import DigitalImage, adjacent


class SimpleGraph:
    """A finite simple graph on vertices 0..n-1: no loops, no multi-edges."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            canon.add((min(u, v), max(u, v)))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        frontier = [0]
        while frontier:
            frontier = [w for v in frontier for w in self._adj[v] if not (w in seen or seen.add(w))]
        return len(seen) == self.n

    def __repr__(self) -> str:
        return f"SimpleGraph({self.n} vertices, {len(self.edges)} edges)"


class CliqueComplex:
    """The 2-skeleton of a flag complex: every triangle is a 3-clique and
    conversely (flag property at dimension 2)."""

    __slots__ = ("vertices", "edges", "triangles", "basepoint", "_adj", "_triangle_set")

    def __init__(
        self,
        vertices: Sequence[Hashable],
        edges: Iterable[tuple[int, int]],
        triangles: Iterable[tuple[int, int, int]],
        basepoint: int = 0,
    ):
        self.vertices = tuple(vertices)
        n = len(self.vertices)
        if not (0 <= basepoint < n):
            raise ValueError("basepoint index out of range")
        self.basepoint = basepoint
        self.edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self.triangles = tuple(sorted(tuple(sorted(t)) for t in triangles))
        self._triangle_set = frozenset(self.triangles)
        for a, b, c in self.triangles:
            if not (self.has_edge(a, b) and self.has_edge(b, c) and self.has_edge(a, c)):
                raise ValueError(f"triangle ({a}, {b}, {c}) is missing an edge")

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.triangles))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self._adj[u]

    def has_triangle(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self._triangle_set

    def is_simplex(self, vertices: Iterable[int]) -> bool:
        """Whether the distinct vertices span a simplex of dimension <= 2."""
        vs = sorted(set(vertices))
        if any(not (0 <= v < len(self.vertices)) for v in vs):
            return False
        if len(vs) == 1:
            return True
        if len(vs) == 2:
            return self.has_edge(*vs)
        if len(vs) == 3:
            return self.has_triangle(*vs)
        return False

    def is_connected(self) -> bool:
        n = len(self.vertices)
        seen = {0}
        frontier = [0]
        while frontier:
            frontier = [w for v in frontier for w in self._adj[v] if not (w in seen or seen.add(w))]
        return len(seen) == n

    def __repr__(self) -> str:
        return f"CliqueComplex(f-vector {self.f_vector})"


GraphLike = Union[DigitalImage, SimpleGraph]


def _adjacency(x: GraphLike) -> tuple[Sequence[Hashable], list[frozenset[int]], int]:
    """Vertex labels, index adjacency, and basepoint index of an image or graph."""
    if isinstance(x, DigitalImage):
        labels = x.points
        index = {p: i for i, p in enumerate(labels)}
        adj = [frozenset(index[q] for q in x.neighbors(p)) for p in labels]
        return labels, adj, x.basepoint_index
    if isinstance(x, SimpleGraph):
        if x.n == 0:
            raise ValueError("graph must be nonempty")
        return tuple(range(x.n)), [x.neighbors(v) for v in range(x.n)], 0
    raise TypeError(f"expected DigitalImage or SimpleGraph, got {type(x).__name__}")


def two_skeleton(x: GraphLike) -> CliqueComplex:
    """Vertices, adjacent pairs, and 3-cliques of an image or abstract graph.

    Triangles are found by intersecting neighbor sets over each edge, and
    come out sorted, so the output is deterministic.
    """
    labels, adj, base = _adjacency(x)
    edges = [(u, v) for u in range(len(labels)) for v in adj[u] if u < v]
    triangles = []
    for u, v in edges:
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                triangles.append((u, v, w))
    return CliqueComplex(labels, edges, triangles, base)


def max_clique_size(x: GraphLike) -> int:
    """Size of the largest clique, by Bron-Kerbosch enumeration with pivoting."""
    _, adj, _ = _adjacency(x)
    best = 0

    def extend(r: int, candidates: set[int], excluded: set[int]) -> None:
        nonlocal best
        if not candidates and not excluded:
            best = max(best, r)
            return
        if r + len(candidates) <= best:
            return
        pivot = max(candidates | excluded, key=lambda v: len(adj[v] & candidates))
        for v in sorted(candidates - adj[pivot]):
            extend(r + 1, candidates & adj[v], excluded & adj[v])
            candidates.remove(v)
            excluded.add(v)

    extend(0, set(range(len(adj))), set())
    return best


def to_dot(x: GraphLike, name: str = "G") -> str:
    """DOT rendering of the 1-skeleton, vertices labeled by coordinates."""
    labels, adj, _ = _adjacency(x)
    lines = [f"graph {name} {{"]
    for i, label in enumerate(labels):
        text = " ".join(map(str, label)) if isinstance(label, tuple) else str(label)
        lines.append(f'  v{i} [label="{text}"];')
    for u in range(len(labels)):
        for v in sorted(adj[u]):
            if u < v:
                lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
