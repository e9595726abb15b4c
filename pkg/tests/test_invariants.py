import random

import pytest

from conejac import (
    AbelianGroup,
    CirculantSpec,
    IntPoly,
    char_poly,
    circulant,
    cone,
    cone_jacobian,
    cone_tree_count,
    cone_tree_count_via_charpoly,
    forest_count,
    forest_group,
    graph_from_edge_list,
    jacobian,
    join,
    joint_char_poly,
    laplacian,
    tree_count,
    tree_count_via_charpoly,
)
from support import random_multigraph


def c3():
    return circulant(CirculantSpec(3, (1,)))


def c4():
    return circulant(CirculantSpec(4, (1,)))


def k4():
    return circulant(CirculantSpec(4, (1, 2)))


def p2():
    return graph_from_edge_list(2, [(0, 1)])


def k1():
    return graph_from_edge_list(1, [])


class TestTreeCount:
    def test_cycle(self):
        assert tree_count(c4()) == 4

    def test_k4(self):
        assert tree_count(k4()) == 16

    def test_disconnected(self):
        g = graph_from_edge_list(4, [(0, 1), (2, 3)])
        assert tree_count(g) == 0

    def test_single_vertex(self):
        assert tree_count(k1()) == 1

    def test_charpoly_path_agrees(self):
        rng = random.Random(31)
        for _ in range(25):
            g = random_multigraph(rng, max_vertices=6, max_edges=10)
            assert tree_count_via_charpoly(g) == tree_count(g)


class TestForestCount:
    def test_p2(self):
        assert forest_count(p2()) == 3

    def test_c3(self):
        assert forest_count(c3()) == 16

    def test_c4(self):
        assert forest_count(c4()) == 45

    def test_always_at_least_one(self):
        rng = random.Random(37)
        for _ in range(25):
            g = random_multigraph(rng)
            f = forest_count(g)
            assert f >= 1
            if g.is_connected():
                # each spanning tree yields n rooted one-tree forests
                assert f >= g.n_vertices * tree_count(g)


class TestJacobian:
    def test_c3(self):
        assert jacobian(c3()) == AbelianGroup((3,))

    def test_k4(self):
        assert jacobian(k4()) == AbelianGroup((4, 4))

    def test_tree_is_trivial(self):
        assert jacobian(p2()).is_trivial

    def test_disconnected_reports_free_rank(self):
        g = graph_from_edge_list(4, [(0, 1), (2, 3)])
        grp = jacobian(g)
        assert grp.free_rank == 1

    def test_order_equals_tree_count(self, tiny_corpus):
        for g in tiny_corpus:
            assert jacobian(g).order == tree_count(g)


class TestForestGroup:
    def test_c3(self):
        assert forest_group(c3()) == AbelianGroup((4, 4))

    def test_k1(self):
        assert forest_group(k1()).is_trivial

    def test_p2(self):
        assert forest_group(p2()) == AbelianGroup((3,))

    def test_order_and_rank(self, tiny_corpus):
        for g in tiny_corpus:
            grp = forest_group(g)
            assert grp.free_rank == 0
            assert grp.order == forest_count(g)


class TestConeIdentities:
    def test_cone_tree_count_examples(self):
        assert cone_tree_count(c3()) == 16 == tree_count(cone(c3()))
        assert cone_tree_count(k1()) == 1
        assert cone_tree_count(c4()) == 45 == tree_count(cone(c4()))

    def test_cone_tree_count_via_charpoly_examples(self):
        assert cone_tree_count_via_charpoly(c3()) == 16
        assert cone_tree_count_via_charpoly(k1()) == 1
        assert cone_tree_count_via_charpoly(p2()) == 3

    def test_cone_jacobian_examples(self):
        assert cone_jacobian(c3()) == AbelianGroup((4, 4)) == jacobian(cone(c3()))
        assert cone_jacobian(k1()).is_trivial
        assert cone_jacobian(c4()) == AbelianGroup((3, 15)) == jacobian(cone(c4()))

    def test_cone_identities_hold_on_corpus(self, tiny_corpus):
        for g in tiny_corpus:
            assert tree_count(cone(g)) == forest_count(g)
            assert jacobian(cone(g)) == forest_group(g)
            assert cone_tree_count_via_charpoly(g) == forest_count(g)


class TestJointCharPoly:
    def test_cone_over_c3_is_k4(self):
        chi = joint_char_poly(char_poly(laplacian(c3())), 3, IntPoly([0, 1]), 1)
        # x (x-4)^3
        assert chi == IntPoly([0, -64, 48, -12, 1])
        assert chi == char_poly(laplacian(cone(c3())))

    def test_two_points(self):
        x = IntPoly([0, 1])
        assert joint_char_poly(x, 1, x, 1) == IntPoly([0, -2, 1])

    def test_cone_over_p2_is_triangle(self):
        chi = joint_char_poly(char_poly(laplacian(p2())), 2, IntPoly([0, 1]), 1)
        assert chi == IntPoly([0, 9, -6, 1])

    def test_matches_join_laplacian(self):
        rng = random.Random(41)
        for _ in range(10):
            g1 = random_multigraph(rng, max_vertices=4, max_edges=6)
            g2 = random_multigraph(rng, max_vertices=4, max_edges=6)
            expected = char_poly(laplacian(join(g1, g2)))
            got = joint_char_poly(
                char_poly(laplacian(g1)),
                g1.n_vertices,
                char_poly(laplacian(g2)),
                g2.n_vertices,
            )
            assert got == expected

    def test_cone_charpoly_on_corpus(self, tiny_corpus):
        apex = IntPoly([0, 1])
        for g in tiny_corpus[:500]:
            got = joint_char_poly(char_poly(laplacian(g)), g.n_vertices, apex, 1)
            assert got == char_poly(laplacian(cone(g)))

    def test_invalid_inputs_rejected(self):
        with pytest.raises(ValueError):
            joint_char_poly(IntPoly([1, 1]), 1, IntPoly([0, 1]), 1)
