"""The full pipeline from a digital image to its group invariants, plus
the two-image gluing analysis."""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CliqueComplex, max_clique_size, two_skeleton
from .edgegroups import SpanningTreeData, loop_to_word, presentation_of, spanning_tree
from .groups import (
    AbelianInvariants,
    CosetResult,
    Presentation,
    Word,
    abelianization,
    disconnected_complements,
    map_word,
    svk_pushout,
    tietze_simplify_with_map,
    todd_coxeter,
)
from .images import DigitalImage, is_connected


@dataclass(frozen=True)
class ImageAnalysis:
    """Everything ``analyze`` reports about one connected image."""

    image: DigitalImage
    complex: CliqueComplex
    tree: SpanningTreeData
    presentation: Presentation
    simplified: Presentation
    generator_images: tuple[Word, ...]
    invariants: AbelianInvariants
    coset: CosetResult
    max_clique: int

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return self.complex.f_vector

    def word_in_simplified(self, word: Word) -> Word:
        """Image of a word of the raw presentation in the simplified one."""
        return map_word(word, self.generator_images)

    def words_agree(self, first: Word, second: Word) -> bool:
        """Word equality in the simplified presentation, decided by free
        reduction.  Only meaningful when the simplified presentation is
        free (no relators), where free equality is group equality."""
        if self.simplified.relators:
            raise ValueError("simplified presentation is not free; free comparison unsound")
        return self.word_in_simplified(first) == self.word_in_simplified(second)

    def report_lines(self) -> list[str]:
        v, e, f = self.f_vector
        order = self.coset.order
        return [
            f"points = {len(self.image)}",
            f"dimension = {self.image.dimension}",
            f"f-vector = ({v}, {e}, {f})",
            f"max-clique = {self.max_clique}",
            f"generators = {self.presentation.n_generators}",
            f"relators = {len(self.presentation.relators)}",
            f"simplified-generators = {self.simplified.n_generators}",
            f"simplified-relators = {len(self.simplified.relators)}",
            f"H1 = {self.invariants}",
            f"order = {order}" if order is not None else f"order = >{self.coset.max_cosets}",
        ]


def analyze_image(image: DigitalImage, max_cosets: int = 1000) -> ImageAnalysis:
    """Complex, presentation, simplification, H1 and bounded group order.

    Coset enumeration runs on the simplified presentation (same group,
    smaller table).
    """
    if not is_connected(image):
        raise ValueError("image is not connected")
    complex_ = two_skeleton(image)
    tree = spanning_tree(complex_)
    presentation = presentation_of(complex_, tree)
    simplified, images = tietze_simplify_with_map(presentation)
    return ImageAnalysis(
        image=image,
        complex=complex_,
        tree=tree,
        presentation=presentation,
        simplified=simplified,
        generator_images=images,
        invariants=abelianization(presentation),
        coset=todd_coxeter(simplified, max_cosets),
        max_clique=max_clique_size(image),
    )


@dataclass(frozen=True)
class GluingAnalysis:
    """Pushout data for a union of two images along their intersection."""

    basepoint: tuple[int, ...]
    part_u: ImageAnalysis
    part_v: ImageAnalysis
    intersection: ImageAnalysis
    pushout: Presentation
    invariants: AbelianInvariants


def _include_generators(
    inter: ImageAnalysis, part: ImageAnalysis
) -> list[Word]:
    """Words of the intersection's generators inside one part's group.

    Each generator of the intersection's presentation is a non-tree edge;
    its canonical representative loop (up the tree, across the edge, back
    down) also lies in the part, where reading off the part's non-tree
    edges gives the included word.
    """
    words = []
    for g in range(1, inter.presentation.n_generators + 1):
        loop_indices = inter.tree.generator_loop(g)
        loop_points = [inter.complex.vertices[v] for v in loop_indices]
        part_loop = tuple(part.image.index(p) for p in loop_points)
        words.append(loop_to_word(part.complex, part.tree, part_loop))
    return words


def analyze_gluing(u: DigitalImage, v: DigitalImage, max_cosets: int = 1000) -> GluingAnalysis:
    """Check the gluing hypotheses for two images and build the pushout.

    Requires connected parts, a nonempty connected intersection, and
    disconnected complements; everything is rebased at the least point of
    the intersection.  Raises ValueError naming the violated hypothesis.
    """
    if u.dimension != v.dimension:
        raise ValueError("images must share an ambient dimension")
    common = sorted(set(u.points) & set(v.points))
    if not common:
        raise ValueError("intersection is empty")
    basepoint = common[0]
    inter = DigitalImage(common, basepoint=basepoint)
    if not is_connected(inter):
        raise ValueError("intersection is not connected")
    u = u.with_basepoint(basepoint)
    v = v.with_basepoint(basepoint)
    if not is_connected(u) or not is_connected(v):
        raise ValueError("both images must be connected")
    if not disconnected_complements(u, v):
        raise ValueError("complements not disconnected")
    part_u = analyze_image(u, max_cosets)
    part_v = analyze_image(v, max_cosets)
    inter_analysis = analyze_image(inter, max_cosets)
    pairs = list(
        zip(_include_generators(inter_analysis, part_u), _include_generators(inter_analysis, part_v))
    )
    pushout = svk_pushout(part_u.presentation, part_v.presentation, pairs)
    return GluingAnalysis(
        basepoint=basepoint,
        part_u=part_u,
        part_v=part_v,
        intersection=inter_analysis,
        pushout=pushout,
        invariants=abelianization(pushout),
    )
