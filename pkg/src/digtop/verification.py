"""Invariant suite the CLI runs against an image: structural checks plus
bounded oracle checks, each returning a named pass/fail."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .analysis import analyze_image
from .complexes import two_skeleton
from .edgegroups import (
    applicable_moves,
    apply_edge_move,
    digital_loop_from_edge_loop,
    edge_loop_of,
    loop_to_word,
    phi,
)
from .fileio import parse_image, serialize_image
from .groups import abelianization, free_reduce, inverse_word
from .images import DigitalImage, DigitalPath, adjacent, concatenate, is_connected, reverse
from .oracle import homotopy_classes_fixed_length
from .twodim import free_rank


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _random_based_loop(image: DigitalImage, length: int, rng: random.Random) -> DigitalPath:
    base = image.basepoint
    for _ in range(50):
        steps = [base]
        for _ in range(length - 1):
            options = (steps[-1],) + image.neighbors(steps[-1])
            steps.append(rng.choice(options))
        if steps[-1] == base or adjacent(steps[-1], base):
            steps.append(base)
            return DigitalPath(image, steps)
    # guaranteed fallback: wander out, retrace, pause at the basepoint
    out = [base]
    for _ in range(length // 2):
        options = (out[-1],) + image.neighbors(out[-1])
        out.append(rng.choice(options))
    steps = out + out[-2::-1]
    steps.extend([base] * (length + 1 - len(steps)))
    return DigitalPath(image, steps)


def run_verification(image: DigitalImage, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    results: list[CheckResult] = []

    def check(name: str, fn: Callable[[], bool], detail: str = "") -> None:
        try:
            ok = fn()
        except Exception as exc:  # a crashed check is a failed check
            results.append(CheckResult(name, False, f"raised {exc!r}"))
            return
        results.append(CheckResult(name, bool(ok), detail))

    check("round-trip", lambda: parse_image(serialize_image(image)) == image)

    complex_ = two_skeleton(image)

    def flag_property() -> bool:
        pts = image.points
        brute_edges = {
            (i, j) for i, j in combinations(range(len(pts)), 2) if adjacent(pts[i], pts[j])
        }
        if brute_edges != set(complex_.edges):
            return False
        brute_triangles = {
            (i, j, k)
            for i, j, k in combinations(range(len(pts)), 3)
            if adjacent(pts[i], pts[j]) and adjacent(pts[j], pts[k]) and adjacent(pts[i], pts[k])
        }
        return brute_triangles == set(complex_.triangles)

    check("flag-property", flag_property)

    if not is_connected(image):
        results.append(CheckResult("connected", False, "remaining checks need connectivity"))
        return results
    results.append(CheckResult("connected", True))

    analysis = analyze_image(image)
    check(
        "presentation-deterministic",
        lambda: analyze_image(image).presentation == analysis.presentation,
    )
    check(
        "generator-loops",
        lambda: all(
            loop_to_word(analysis.complex, analysis.tree, analysis.tree.generator_loop(g)) == (g,)
            for g in range(1, analysis.presentation.n_generators + 1)
        ),
    )

    loops = [_random_based_loop(image, rng.randint(1, 6), rng) for _ in range(8)]

    def phi_homomorphism() -> bool:
        for a in loops:
            for b in loops:
                joined = phi(image, concatenate(a, b))
                if joined != free_reduce(phi(image, a) + phi(image, b)):
                    return False
        return True

    check("phi-homomorphism", phi_homomorphism)
    check(
        "phi-reverse-inverse",
        lambda: all(phi(image, reverse(a)) == inverse_word(phi(image, a)) for a in loops),
    )

    def word_invariant_under_moves() -> bool:
        # type (a) moves never change the crossing word at all; type (b)
        # moves change it by at most a triangle relation, so here only the
        # degenerate (b) collapse ...u,v,u... (an honest free cancellation)
        # is asserted word-exact.
        for a in loops:
            edge_loop = edge_loop_of(a)
            word = loop_to_word(analysis.complex, analysis.tree, edge_loop)
            for move in applicable_moves(analysis.complex, edge_loop):
                if move.kind in ("a-delete", "a-insert"):
                    rewritten = apply_edge_move(analysis.complex, edge_loop, move)
                    if loop_to_word(analysis.complex, analysis.tree, rewritten) != word:
                        return False
                elif move.kind == "b-delete" and edge_loop[move.index - 1] == edge_loop[move.index + 1]:
                    rewritten = apply_edge_move(analysis.complex, edge_loop, move)
                    if loop_to_word(analysis.complex, analysis.tree, rewritten) != word:
                        return False
        return True

    check("word-invariant-moves", word_invariant_under_moves)

    if len(image) <= 8 and not analysis.simplified.relators:
        def classes_vs_words() -> bool:
            for length in range(1, 5):
                for cls in homotopy_classes_fixed_length(image, length, max_states=50_000):
                    words = {
                        analysis.word_in_simplified(
                            phi(image, digital_loop_from_edge_loop(image, tuple(image.index(p) for p in steps)))
                        )
                        for steps in cls
                    }
                    if len(words) > 1:
                        return False
            return True

        check("homotopy-classes-vs-words", classes_vs_words)

    if image.dimension == 2:
        check(
            "free-rank-vs-abelianization",
            lambda: free_rank(image) == analysis.invariants.rank and not analysis.invariants.torsion,
        )

    return results
