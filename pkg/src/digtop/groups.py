"""Finite presentations and the bounded decision toolkit behind them.

Words are tuples of nonzero integers: +g is generator g (1-based), -g its
inverse.  Every semantic question about a presented group is answered only
by a bounded certificate: Smith normal form for the abelianization, and
Todd-Coxeter coset enumeration with a coset cap, where exceeding the cap
is an honest third outcome rather than an answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .images import DigitalImage, adjacent

Word = tuple[int, ...]


def free_reduce(word: Iterable[int]) -> Word:
    """Cancel adjacent symbol/inverse pairs until none remain.  Idempotent."""
    out: list[int] = []
    for s in word:
        if s == 0:
            raise ValueError("0 is not a generator symbol")
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def inverse_word(word: Iterable[int]) -> Word:
    return tuple(-s for s in reversed(tuple(word)))


def cyclically_reduce(word: Iterable[int]) -> Word:
    """Freely reduce, then cancel inverse pairs wrapping around the ends."""
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def word_from_pairs(pairs: Iterable[tuple[int, int]]) -> Word:
    """Build a word from (generator, +1/-1) pairs."""
    out = []
    for g, e in pairs:
        if g < 1 or e not in (1, -1):
            raise ValueError(f"bad symbol ({g}, {e})")
        out.append(g * e)
    return tuple(out)


class Presentation:
    """A finite group presentation: a generator count and a relator list.

    Relators are stored freely reduced; relators that reduce to the empty
    word are dropped.  Cyclic reduction is NOT applied at construction
    (it is an explicit simplification step) so that constructions driven
    by the literal relator words see them unchanged.
    """

    __slots__ = ("n_generators", "relators")

    def __init__(self, n_generators: int, relators: Iterable[Iterable[int]] = ()):
        if n_generators < 0:
            raise ValueError("generator count must be non-negative")
        self.n_generators = n_generators
        rels = []
        for r in relators:
            w = free_reduce(r)
            for s in w:
                if abs(s) > n_generators:
                    raise ValueError(f"symbol {s} exceeds generator count {n_generators}")
            if w:
                rels.append(w)
        self.relators: tuple[Word, ...] = tuple(rels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.n_generators == other.n_generators and self.relators == other.relators

    def __hash__(self) -> int:
        return hash((self.n_generators, self.relators))

    def __repr__(self) -> str:
        return f"Presentation({self.n_generators} generators, {len(self.relators)} relators)"


@dataclass(frozen=True)
class AbelianInvariants:
    """H_1 in canonical form: free rank plus a divisibility chain of torsion
    coefficients d1 | d2 | ... with every di >= 2."""

    rank: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion chain {self.torsion} violates divisibility")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    @property
    def order(self) -> int | None:
        """Group order if finite, else None."""
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(
    matrix: Sequence[Sequence[int]], transforms: bool = False
) -> list[int] | tuple[list[int], list[list[int]], list[list[int]]]:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns the diagonal d1 | d2 | ... (non-negative, divisibility chain).
    With transforms=True also returns unimodular L, R with L A R diagonal.
    Pivots are chosen as the smallest absolute nonzero entry, ties broken
    by position, so the run is deterministic.  Plain Python integers keep
    intermediate entries exact.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    for row in a:
        if len(row) != n:
            raise ValueError("matrix rows must have equal length")
    left = [[int(i == j) for j in range(m)] for i in range(m)]
    right = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    def pivot_position(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return None if best is None else (best[1], best[2])

    for t in range(min(m, n)):
        pos = pivot_position(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear the pivot row
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # force the pivot to divide the remaining submatrix
            witness = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None,
            )
            if witness is None:
                break
            add_row(witness[0], t, 1)

    diagonal = [abs(a[i][i]) for i in range(min(m, n))]
    if transforms:
        return diagonal, left, right
    return diagonal


def abelianization(presentation: Presentation) -> AbelianInvariants:
    """Invariants of the presented group made abelian.

    The exponent-sum matrix of the relators is put in Smith normal form;
    diagonal entries >= 2 are the torsion coefficients and the remaining
    generators contribute the free rank.
    """
    n = presentation.n_generators
    rows = []
    for rel in presentation.relators:
        row = [0] * n
        for s in rel:
            row[abs(s) - 1] += 1 if s > 0 else -1
        rows.append(row)
    if not rows or n == 0:
        return AbelianInvariants(n, ())
    diagonal = smith_normal_form(rows)
    nonzero = [d for d in diagonal if d != 0]
    return AbelianInvariants(n - len(nonzero), tuple(d for d in nonzero if d >= 2))


# ---------------------------------------------------------------------------
# Tietze simplification


def _rotate_to_front(word: Word, index: int) -> Word:
    return word[index:] + word[:index]


def _cyclic_canonical(word: Word) -> Word:
    """Least rotation of the word or its inverse; identifies relators that
    present the same normal-closure element up to rotation and inversion."""
    candidates = []
    for w in (word, inverse_word(word)):
        candidates.extend(_rotate_to_front(w, i) for i in range(len(w)))
    return min(candidates) if candidates else ()


def _substitute(word: Word, gen: int, replacement: Word) -> Word:
    out: list[int] = []
    for s in word:
        if s == gen:
            out.extend(replacement)
        elif s == -gen:
            out.extend(inverse_word(replacement))
        else:
            out.append(s)
    return free_reduce(out)


def _drop_generator(word: Word, gen: int) -> Word:
    return tuple(s - 1 if s > gen else s + 1 if s < -gen else s for s in word)


def tietze_simplify_with_map(
    presentation: Presentation, max_passes: int = 100
) -> tuple[Presentation, tuple[Word, ...]]:
    """Simplify and also return, for each original generator, its image as a
    word in the simplified presentation's generators.

    Composing words through the returned map realizes the isomorphism the
    simplification certifies, which is what makes word comparisons in the
    simplified presentation meaningful.
    """
    n = presentation.n_generators
    relators = [cyclically_reduce(r) for r in presentation.relators]
    images: list[Word] = [(g,) for g in range(1, n + 1)]

    def eliminate(gen: int, definition: Word) -> None:
        nonlocal relators, images, n
        relators = [_drop_generator(_substitute(r, gen, definition), gen) for r in relators]
        images = [_drop_generator(_substitute(w, gen, definition), gen) for w in images]
        n -= 1

    for _ in range(max_passes):
        # normalize: cyclic reduction, drop empties, dedupe up to rotation/inversion
        seen: set[Word] = set()
        cleaned = []
        for r in relators:
            r = cyclically_reduce(r)
            if not r:
                continue
            key = _cyclic_canonical(r)
            if key in seen:
                continue
            seen.add(key)
            cleaned.append(r)
        changed = len(cleaned) != len(relators) or cleaned != relators
        relators = cleaned

        # eliminate a generator that occurs exactly once in some relator,
        # preferring the shortest defining relator
        choice = None
        for idx in sorted(range(len(relators)), key=lambda i: (len(relators[i]), i)):
            rel = relators[idx]
            for pos, s in enumerate(rel):
                g = abs(s)
                if sum(1 for t in rel if abs(t) == g) == 1:
                    choice = (idx, pos)
                    break
            if choice:
                break
        if choice is not None:
            idx, pos = choice
            rel = _rotate_to_front(relators[idx], pos)
            gen_signed, rest = rel[0], rel[1:]
            gen = abs(gen_signed)
            # g^e * w = 1  =>  g = (w^-1)^e
            definition = inverse_word(rest) if gen_signed > 0 else tuple(rest)
            del relators[idx]
            eliminate(gen, definition)
            changed = True

        if not changed:
            break

    relators = [r for r in (cyclically_reduce(r) for r in relators) if r]
    return Presentation(n, relators), tuple(images)


def tietze_simplify(presentation: Presentation, max_passes: int = 100) -> Presentation:
    """A presentation of an isomorphic group with no more generators or
    relators.  Not guaranteed minimal; the isomorphism problem is
    undecidable, so this only applies safe reductions."""
    simplified, _ = tietze_simplify_with_map(presentation, max_passes)
    return simplified


def map_word(word: Iterable[int], images: Sequence[Word]) -> Word:
    """Push a word through a generator-image map, freely reducing."""
    out: list[int] = []
    for s in word:
        img = images[abs(s) - 1]
        out.extend(img if s > 0 else inverse_word(img))
    return free_reduce(out)


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration


@dataclass(frozen=True)
class CosetResult:
    """Outcome of a bounded coset enumeration over the trivial subgroup.

    ``order`` is the certified group order when the table closed within
    the bound; None means the bound was exhausted and nothing is known.
    """

    order: int | None
    cosets_defined: int
    max_cosets: int

    @property
    def exceeded(self) -> bool:
        return self.order is None

    def __str__(self) -> str:
        return f"order {self.order}" if self.order is not None else f">{self.max_cosets} cosets"


class _CosetTable:
    """Coset table over 2n directions with union-find coincidence handling."""

    def __init__(self, n_generators: int):
        self.width = 2 * n_generators
        self.parent: list[int] = []
        self.rows: list[list[int | None]] = []
        self.defined = 0
        self.add()

    @staticmethod
    def direction(symbol: int) -> int:
        return 2 * (symbol - 1) if symbol > 0 else 2 * (-symbol - 1) + 1

    @staticmethod
    def opposite(direction: int) -> int:
        return direction ^ 1

    def add(self) -> int:
        c = len(self.rows)
        self.parent.append(c)
        self.rows.append([None] * self.width)
        self.defined += 1
        return c

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def set_entry(self, c: int, d: int, target: int) -> None:
        """Record c.d = target together with its mirror, merging on conflict."""
        queue = [(c, d, target)]
        while queue:
            c, d, target = queue.pop()
            c, target = self.find(c), self.find(target)
            existing = self.rows[c][d]
            if existing is not None:
                self.merge(self.find(existing), target)
                continue
            self.rows[c][d] = target
            mirror = self.rows[target][self.opposite(d)]
            if mirror is None:
                self.rows[target][self.opposite(d)] = c
            elif self.find(mirror) != c:
                self.merge(self.find(mirror), c)

    def merge(self, c1: int, c2: int) -> None:
        pending = [(c1, c2)]
        while pending:
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            for d in range(self.width):
                t = self.rows[b][d]
                if t is None:
                    continue
                t = self.find(t)
                existing = self.rows[a][d]
                if existing is None:
                    self.rows[a][d] = t
                    back = self.rows[t][self.opposite(d)]
                    if back is None:
                        self.rows[t][self.opposite(d)] = a
                    elif self.find(back) not in (a, b):
                        pending.append((self.find(back), a))
                else:
                    pending.append((self.find(existing), t))

    def live_count(self) -> int:
        return sum(1 for c in range(len(self.rows)) if self.find(c) == c)


def todd_coxeter(presentation: Presentation, max_cosets: int = 1000) -> CosetResult:
    """Enumerate cosets of the trivial subgroup, capped at max_cosets.

    Processes live cosets in definition order: scans every relator from
    each (defining cosets as needed) and then fills the remaining entries
    of the row, so a closed table certifies the exact group order.  If
    more than max_cosets cosets get defined the enumeration stops with an
    inconclusive result.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    table = _CosetTable(presentation.n_generators)
    relator_dirs = [
        [table.direction(s) for s in rel] for rel in presentation.relators
    ]

    c = 0
    while c < len(table.rows):
        if table.defined > max_cosets:
            return CosetResult(None, table.defined, max_cosets)
        if table.find(c) != c:
            c += 1
            continue
        for dirs in relator_dirs:
            cur = table.find(c)
            for d in dirs[:-1]:
                nxt = table.rows[cur][d]
                if nxt is None:
                    nxt = table.add()
                    table.set_entry(cur, d, nxt)
                    if table.defined > max_cosets:
                        return CosetResult(None, table.defined, max_cosets)
                cur = table.find(nxt)
            # closing step: the relator must lead back to c
            table.set_entry(cur, dirs[-1], table.find(c))
            if table.find(c) != c:
                break
        if table.find(c) != c:
            c += 1
            continue
        for d in range(table.width):
            if table.rows[c][d] is None:
                nxt = table.add()
                table.set_entry(c, d, nxt)
                if table.defined > max_cosets:
                    return CosetResult(None, table.defined, max_cosets)
        c += 1
    return CosetResult(table.live_count(), table.defined, max_cosets)


# ---------------------------------------------------------------------------
# Free products and pushouts


def shift_word(word: Word, offset: int) -> Word:
    return tuple(s + offset if s > 0 else s - offset for s in word)


def free_product(p: Presentation, q: Presentation) -> Presentation:
    """Disjoint union of generators and relators, with q's renumbered."""
    shifted = [shift_word(r, p.n_generators) for r in q.relators]
    return Presentation(p.n_generators + q.n_generators, list(p.relators) + shifted)


def svk_pushout(
    pu: Presentation,
    pv: Presentation,
    pairs: Iterable[tuple[Iterable[int], Iterable[int]]] = (),
) -> Presentation:
    """Presentation of a pushout over a common subgroup.

    Each pair (w_u, w_v) gives the two images of one generator of the
    common part; the glued presentation keeps both relator sets and adds
    w_u * w_v^{-1} per pair.  An empty pair list is the free product.
    """
    offset = pu.n_generators
    relators = list(pu.relators) + [shift_word(r, offset) for r in pv.relators]
    for wu, wv in pairs:
        wu = free_reduce(wu)
        wv = free_reduce(wv)
        for s in wu:
            if abs(s) > pu.n_generators:
                raise ValueError(f"symbol {s} not a generator of the first factor")
        for s in wv:
            if abs(s) > pv.n_generators:
                raise ValueError(f"symbol {s} not a generator of the second factor")
        relators.append(free_reduce(wu + inverse_word(shift_word(wv, offset))))
    return Presentation(pu.n_generators + pv.n_generators, relators)


def disconnected_complements(u: DigitalImage, v: DigitalImage) -> bool:
    """The union-side hypothesis for gluing: no point of one image's
    complement in the union is adjacent to a point of the other's."""
    if u.dimension != v.dimension:
        raise ValueError("images must share an ambient dimension")
    u_only = set(u.points) - set(v.points)
    v_only = set(v.points) - set(u.points)
    return not any(adjacent(p, q) for p in u_only for q in v_only)
