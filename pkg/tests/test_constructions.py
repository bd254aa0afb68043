import random
from itertools import combinations

import pytest

from conftest import random_connected_graph
from digtop.analysis import analyze_image
from digtop.complexes import SimpleGraph, max_clique_size, two_skeleton
from digtop.constructions import (
    circle,
    cycle_graph,
    diamond,
    digital_interval,
    double_diamond,
    double_diamond_halves,
    embed_graph,
    is_circle,
    projective_plane,
    realization_complex,
    realize_presentation,
)
from digtop.groups import (
    Presentation,
    abelianization,
    disconnected_complements,
    tietze_simplify,
    todd_coxeter,
)
from digtop.images import DigitalImage, adjacent, is_connected


class TestInterval:
    def test_unit(self):
        image = digital_interval(1)
        assert image.points == ((0,), (1,))
        assert image.basepoint == (0,)

    def test_singleton(self):
        assert digital_interval(0).points == ((0,),)

    def test_length_two_adjacencies(self):
        image = digital_interval(2)
        assert adjacent((0,), (1,)) and adjacent((1,), (2,))
        assert not adjacent((0,), (2,))
        assert is_connected(image)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            digital_interval(-1)


class TestDiamond:
    def test_is_four_point_circle(self):
        image = diamond()
        assert len(image) == 4
        assert is_circle(image)
        assert image.basepoint == (1, 0)

    def test_f_vector(self):
        assert two_skeleton(diamond()).f_vector == (4, 4, 0)

    def test_fundamental_group_is_z(self):
        inv = analyze_image(diamond()).invariants
        assert inv.rank == 1 and not inv.torsion


class TestCircle:
    @pytest.mark.parametrize("n", range(4, 16))
    def test_exact_cycle(self, n):
        image = circle(n)
        assert len(image) == n
        assert is_circle(image)
        assert all(len(image.neighbors(p)) == 2 for p in image)

    def test_four_is_diamond(self):
        assert circle(4) == diamond()

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            circle(3)

    def test_no_other_adjacencies(self):
        # the defining condition, checked pairwise from scratch
        for n in (5, 7, 9):
            image = circle(n)
            edge_count = sum(
                adjacent(p, q) for p, q in combinations(image.points, 2)
            )
            assert edge_count == n


class TestDoubleDiamond:
    def test_f_vector(self):
        assert two_skeleton(double_diamond()).f_vector == (7, 8, 0)

    def test_brute_force_adjacency_count(self):
        pts = double_diamond().points
        assert sum(adjacent(p, q) for p, q in combinations(pts, 2)) == 8

    def test_halves_are_diamonds_with_disconnected_complements(self):
        u, v = double_diamond_halves()
        assert is_circle(u) and is_circle(v)
        assert set(u.points) & set(v.points) == {(0, 0)}
        assert disconnected_complements(u, v)

    def test_h1_is_z_squared(self):
        inv = analyze_image(double_diamond()).invariants
        assert inv.rank == 2 and not inv.torsion


class TestProjectivePlane:
    def test_point_count_and_dimension(self):
        image = projective_plane()
        assert len(image) == 13
        assert image.dimension == 8
        assert image.basepoint == (0, 0, 0, 0, 0, 0, 0, 1)

    def test_f_vector_and_clique(self):
        image = projective_plane()
        assert two_skeleton(image).f_vector == (13, 36, 24)
        assert max_clique_size(image) == 3

    def test_group_is_z2(self):
        analysis = analyze_image(projective_plane())
        assert analysis.invariants.rank == 0
        assert analysis.invariants.torsion == (2,)
        assert analysis.coset.order == 2

    def test_coordinates_in_cube(self):
        for p in projective_plane().points:
            assert all(c in (-1, 0, 1) for c in p)


class TestEmbedGraph:
    def test_single_vertex(self):
        image, correspondence = embed_graph(SimpleGraph(1, []))
        assert image.points == ((0,),)
        assert correspondence == ((0,),)

    def test_single_edge(self):
        image, correspondence = embed_graph(SimpleGraph(2, [(0, 1)]))
        assert adjacent(correspondence[0], correspondence[1])
        assert image.dimension == 1

    def test_two_isolated_vertices(self):
        _, correspondence = embed_graph(SimpleGraph(2, []))
        assert not adjacent(correspondence[0], correspondence[1])

    def test_correspondence_is_isomorphism(self):
        rng = random.Random(70)
        for _ in range(80):
            graph = random_connected_graph(rng, max_vertices=10)
            image, correspondence = embed_graph(graph)
            assert len(set(correspondence)) == graph.n
            for u in range(graph.n):
                for v in range(u + 1, graph.n):
                    assert graph.has_edge(u, v) == adjacent(correspondence[u], correspondence[v])

    def test_coordinates_stay_small(self):
        rng = random.Random(72)
        for _ in range(20):
            graph = random_connected_graph(rng, max_vertices=10)
            image, _ = embed_graph(graph)
            assert all(c in (-1, 0, 1) for p in image.points for c in p)
            if graph.n >= 2:
                assert image.dimension == graph.n - 1

    def test_cycle_graph_embeds_as_circle(self):
        for n in (5, 8):
            image, _ = embed_graph(cycle_graph(n))
            assert is_circle(image)


class TestRealizationComplex:
    def test_example_vertex_count(self):
        built = realization_complex(2, [(1, 2, -1)])
        assert built.graph.n == 1 + 3 * 2 + (4 * 3 + 1) == 20

    def test_free_presentation_is_wedge(self):
        built = realization_complex(1, [])
        assert built.graph.n == 4
        assert set(built.graph.edges) == {(0, 1), (1, 2), (2, 3), (0, 3)}
        assert built.triangles == ()

    def test_rejects_unreduced_relator(self):
        with pytest.raises(ValueError):
            realization_complex(1, [(1, -1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            realization_complex(1, [(2,)])

    def test_rejects_empty_relator(self):
        with pytest.raises(ValueError):
            realization_complex(1, [()])

    @pytest.mark.parametrize("n_gens,relators", [
        (1, [(1,)]),
        (1, [(1, 1)]),
        (2, [(1, 2, -1)]),
        (2, [(1, 1, 2, 2)]),
        (2, [(1, 2, -1, -2)]),
        (3, [(1, 2, 3), (1, -3, 2)]),
        (1, [(1, 1, 1, 1, 1)]),
        (2, [(1, 2, 1, -2), (2, 2)]),
    ])
    def test_designed_triangles_are_exactly_the_cliques(self, n_gens, relators):
        built = realization_complex(n_gens, relators)
        complex_ = two_skeleton(built.graph)
        assert set(complex_.triangles) == set(built.triangles)
        assert max_clique_size(built.graph) == (3 if relators else 2)
        assert built.graph.is_connected()

    def test_vertex_count_formula(self):
        rng = random.Random(74)
        for _ in range(10):
            n = rng.randint(1, 3)
            relators = []
            for _ in range(rng.randint(0, 2)):
                while True:
                    word = tuple(
                        rng.choice([s for g in range(1, n + 1) for s in (g, -g)])
                        for _ in range(rng.randint(1, 4))
                    )
                    from digtop.groups import free_reduce

                    if free_reduce(word) == word:
                        relators.append(word)
                        break
            built = realization_complex(n, relators)
            assert built.graph.n == 1 + 3 * n + sum(4 * len(r) + 1 for r in relators)


class TestRealizePresentation:
    def test_example_group(self):
        image = realize_presentation(Presentation(2, [(1, 2, -1)]))
        assert len(image) == 20
        analysis = analyze_image(image)
        assert analysis.simplified.n_generators == 1
        assert analysis.simplified.relators == ()
        assert analysis.invariants.rank == 1 and not analysis.invariants.torsion

    def test_free_generator(self):
        image = realize_presentation(Presentation(1, []))
        inv = analyze_image(image).invariants
        assert inv.rank == 1 and not inv.torsion

    def test_order_two(self):
        image = realize_presentation(Presentation(1, [(1, 1)]))
        analysis = analyze_image(image)
        assert analysis.invariants.rank == 0
        assert analysis.invariants.torsion == (2,)
        assert analysis.coset.order == 2

    def test_no_four_cliques(self):
        image = realize_presentation(Presentation(2, [(1, 2, -1)]))
        assert max_clique_size(image) == 3

    def test_basepoint_is_wedge_point(self):
        # the wedge point has degree 2n in the wedge plus annulus contacts
        image = realize_presentation(Presentation(1, []))
        assert len(image.neighbors(image.basepoint)) == 2
