import pytest

from _helpers import balls_isomorphic
from saw_lab.graphball import GraphError, girth_within, induced_ball
from saw_lab.lattices import (build_free_product, build_ladder,
                              build_periodic, build_tree,
                              build_twisted_ladder, free_product_neighbors,
                              periodic_graph, planar_cyclic_orders)
from saw_lab.sawengine import count_saws, naive_count_saws


def test_ladder_degrees():
    ball = build_ladder(8, doubly_infinite=True)
    for v, nbrs in enumerate(ball.adjacency):
        if ball.complete[v]:
            assert len(nbrs) == 3


def test_tree_counts():
    ball = build_tree(3, 8)
    counts = count_saws(ball, 7)
    assert counts == [1] + [3 * 2 ** (n - 1) for n in range(1, 8)]


def test_twisted_ladder_structure():
    ball = build_twisted_ladder(6)
    for v, nbrs in enumerate(ball.adjacency):
        if ball.complete[v]:
            assert len(nbrs) == 3
    assert girth_within(ball, 8) == 4
    # counts differ from the plain ladder from n=3 on
    plain = build_ladder(13, doubly_infinite=True)
    tw = build_twisted_ladder(8)
    assert count_saws(tw, 6) != count_saws(plain, 6)
    assert count_saws(tw, 6) == naive_count_saws(tw, 6)


@pytest.mark.parametrize("name", ("hexagonal", "arch_4_8_8", "arch_4_6_12"))
def test_periodic_ball_degrees(name):
    ball, pg = build_periodic(name, 5)
    dist = ball.bfs_distances(ball.root)
    for v, nbrs in enumerate(ball.adjacency):
        assert ball.complete[v] == (dist[v] < 5)
        if ball.complete[v]:
            assert len(nbrs) == 3
        assert len(nbrs) <= 3


def test_periodic_girths():
    assert girth_within(build_periodic("hexagonal", 4)[0], 8) == 6
    assert girth_within(build_periodic("arch_4_8_8", 4)[0], 8) == 4
    assert girth_within(build_periodic("arch_4_6_12", 4)[0], 8) == 4


def test_translation_consistency():
    # the ball around the root and the ball around a translated copy of the
    # root agree as rooted graphs
    ball, pg = build_periodic("hexagonal", 7)
    tags = ball.vertex_tags
    shifted = None
    for v, (dv, cell) in enumerate(tags):
        if dv == tags[ball.root][0] and cell != tags[ball.root][1] \
                and ball.bfs_distances(ball.root)[v] <= 2:
            shifted = v
            break
    assert shifted is not None
    a = induced_ball(ball, 4)
    moved = type(ball)(ball.adjacency, shifted,
                       ball.complete, validate=False)
    b = induced_ball(moved, 4)
    assert balls_isomorphic(a, b)


def test_free_product_ball():
    ball = build_free_product(3, 3, 4)
    assert girth_within(ball, 6) == 3
    for v, nbrs in enumerate(ball.adjacency):
        if ball.complete[v]:
            assert len(nbrs) == 3
    # lazy neighbor function agrees with the materialized ball at the root
    nbrs = free_product_neighbors(3, 3)
    assert len(nbrs(())) == 3


def test_planar_cyclic_orders():
    ball, pg = build_periodic("arch_4_6_12", 4)
    orders = planar_cyclic_orders(ball, pg)
    for v, order in enumerate(orders):
        if ball.complete[v]:
            assert sorted(order) == sorted(ball.adjacency[v])


def test_unknown_periodic_name():
    with pytest.raises(GraphError):
        periodic_graph("nope")
