import random

import pytest

from conftest import random_based_loop
from digtop.analysis import analyze_image
from digtop.constructions import diamond
from digtop.edgegroups import edge_group_data, edge_loop_of, phi
from digtop.images import (
    DigitalImage,
    DigitalPath,
    constant_loop,
    standard_projection_compose,
    trivial_extension,
)
from digtop.oracle import (
    HomotopySearchConfig,
    StateBoundExceeded,
    _LoopSpace,
    edge_homotopic_bounded,
    homotopy_classes_fixed_length,
    loops_homotopic_fixed_length,
    one_step_related,
    subdivision_homotopic,
)

UNIT_SQUARE = DigitalImage([(0, 0), (1, 0), (0, 1), (1, 1)], basepoint=(0, 0))


def diamond_traversal():
    image = diamond()
    return image, DigitalPath(image, [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)])


class TestFixedLength:
    def test_reflexive(self):
        image = diamond()
        c = constant_loop(image, 4)
        assert loops_homotopic_fixed_length(image, c, c)

    def test_symmetric_on_samples(self):
        rng = random.Random(90)
        image = UNIT_SQUARE
        for _ in range(10):
            n = rng.randint(1, 4)
            a = random_based_loop(image, n, rng)
            b = random_based_loop(image, n, rng)
            assert loops_homotopic_fixed_length(image, a, b) == loops_homotopic_fixed_length(
                image, b, a
            )

    def test_unit_square_everything_homotopic(self):
        # the square is a cone, so equal-length based loops all connect
        image = UNIT_SQUARE
        rng = random.Random(92)
        for _ in range(10):
            n = rng.randint(1, 5)
            a = random_based_loop(image, n, rng)
            b = random_based_loop(image, n, rng)
            assert loops_homotopic_fixed_length(image, a, b)

    def test_diamond_traversal_not_null(self):
        image, trav = diamond_traversal()
        assert not loops_homotopic_fixed_length(image, trav, constant_loop(image, 4))

    def test_length_mismatch_rejected(self):
        image = diamond()
        with pytest.raises(ValueError):
            loops_homotopic_fixed_length(image, constant_loop(image, 2), constant_loop(image, 3))

    def test_state_bound_reported(self):
        image, trav = diamond_traversal()
        big = standard_projection_compose(trav, 3)
        with pytest.raises(StateBoundExceeded):
            loops_homotopic_fixed_length(image, big, constant_loop(image, big.length), max_states=50)

    def test_single_moves_simulate_full_steps(self):
        # a full homotopy step (many positions at once) must stay inside
        # one search component: slide the change across the interval
        rng = random.Random(94)
        for image in (diamond(), UNIT_SQUARE):
            space = _LoopSpace(image)
            loops = [tuple(random_based_loop(image, 4, rng).steps) for _ in range(40)]
            for sigma in loops:
                for tau in loops:
                    if not one_step_related(image, sigma, tau):
                        continue
                    a = DigitalPath(image, sigma)
                    b = DigitalPath(image, tau)
                    assert loops_homotopic_fixed_length(image, a, b)

    def test_step_slide_intermediates_are_valid(self):
        # the explicit slide: replace positions <= t one at a time
        rng = random.Random(96)
        image = diamond()
        found = 0
        while found < 20:
            sigma = tuple(random_based_loop(image, 4, rng).steps)
            tau = tuple(random_based_loop(image, 4, rng).steps)
            if sigma == tau or not one_step_related(image, sigma, tau):
                continue
            found += 1
            previous = sigma
            for t in range(len(sigma)):
                current = tau[: t + 1] + sigma[t + 1 :]
                DigitalPath(image, current)  # validity
                changed = sum(p != q for p, q in zip(previous, current))
                assert changed <= 1
                assert one_step_related(image, previous, current)
                previous = current
            assert previous == tau


class TestClasses:
    def test_diamond_length_four(self):
        classes = homotopy_classes_fixed_length(diamond(), 4)
        sizes = sorted(len(c) for c in classes)
        # the two rigid single-winding traversals plus the null class
        assert sizes == [1, 1, 19]
        assert sum(sizes) == 21

    def test_unit_square_single_class(self):
        for length in (1, 3, 5):
            assert len(homotopy_classes_fixed_length(UNIT_SQUARE, length)) == 1

    def test_class_count_matches_pairwise_oracle(self):
        image = diamond()
        classes = homotopy_classes_fixed_length(image, 3)
        for cls in classes:
            members = sorted(cls)
            a = DigitalPath(image, members[0])
            for other in members[1:]:
                assert loops_homotopic_fixed_length(image, a, DigitalPath(image, other))


class TestSubdivision:
    def test_loop_vs_its_subdivision(self):
        image, trav = diamond_traversal()
        assert subdivision_homotopic(image, trav, standard_projection_compose(trav, 2)) is True

    def test_loop_vs_trivial_extension(self):
        image, trav = diamond_traversal()
        extended = trivial_extension(trav, (1, 1, 1, 1, 1))  # length 9 = 2*(4+1)-1
        assert subdivision_homotopic(image, trav, extended) is True

    def test_traversal_vs_constant_inconclusive(self):
        image, trav = diamond_traversal()
        config = HomotopySearchConfig(max_factor=2, max_states=20_000)
        assert subdivision_homotopic(image, trav, constant_loop(image, 4), config) is None

    def test_incompatible_lengths_within_bound(self):
        # lengths 4 and 5 need factors 6 and 5: outside a small bound, so
        # the search must admit it cannot tell
        image, trav = diamond_traversal()
        extended = trivial_extension(trav, (1, 0, 0, 0, 0))
        config = HomotopySearchConfig(max_factor=3, max_states=10_000)
        assert subdivision_homotopic(image, trav, extended, config) is None

    def test_require_equal_length_flag(self):
        image, trav = diamond_traversal()
        config = HomotopySearchConfig(require_equal_length=True)
        with pytest.raises(ValueError):
            subdivision_homotopic(image, trav, constant_loop(image, 2), config)

    def test_different_basings_of_same_length(self):
        image = UNIT_SQUARE
        a = DigitalPath(image, [(0, 0), (1, 0), (0, 0)])
        b = constant_loop(image, 2)
        assert subdivision_homotopic(image, a, b) is True


class TestEdgeHomotopyBounded:
    def setup_method(self):
        self.image = diamond()
        self.complex, self.tree, _ = edge_group_data(self.image)
        self.base = self.complex.basepoint

    def test_repeat_collapse(self):
        v = sorted(self.complex.neighbors(self.base))[0]
        assert edge_homotopic_bounded(self.complex, (self.base, v, v, self.base), (self.base, v, self.base), 500) is True

    def test_triangle_collapse_to_point(self):
        complex_, _, _ = edge_group_data(UNIT_SQUARE)
        u = complex_.basepoint
        triangle = next(t for t in complex_.triangles if u in t)
        v, w = [x for x in triangle if x != u]
        assert edge_homotopic_bounded(complex_, (u, v, w, u), (u,), 5000) is True

    def test_traversal_inconclusive(self):
        image, trav = diamond_traversal()
        loop = edge_loop_of(trav)
        assert edge_homotopic_bounded(self.complex, loop, (self.base,), 3000) is None

    def test_rejects_non_loops(self):
        with pytest.raises(ValueError):
            edge_homotopic_bounded(self.complex, (self.base, self.base + 1), (self.base,), 100)


class TestOracleWordAgreement:
    """Homotopic loops must get equal words in the simplified presentation;
    distinct words must never be certified homotopic."""

    @pytest.mark.parametrize("image", [diamond(), UNIT_SQUARE])
    def test_exhaustive_short_loops(self, image):
        analysis = analyze_image(image)
        assert not analysis.simplified.relators
        for length in range(1, 5):
            for cls in homotopy_classes_fixed_length(image, length):
                words = {
                    analysis.word_in_simplified(
                        phi(image, DigitalPath(image, steps))
                    )
                    for steps in cls
                }
                assert len(words) == 1

    def test_word_difference_never_certified(self):
        image, trav = diamond_traversal()
        analysis = analyze_image(image)
        c4 = constant_loop(image, 4)
        assert analysis.word_in_simplified(phi(image, trav)) != analysis.word_in_simplified(
            phi(image, c4)
        )
        config = HomotopySearchConfig(max_factor=2, max_states=20_000)
        assert subdivision_homotopic(image, trav, c4, config) is not True
