import pytest
from hypothesis import given, strategies as st

from saw_lab.graphball import (GraphBall, GraphError, canonical_cycle,
                               enumerate_cycles_up_to, girth_within,
                               induced_ball, max_vertices_cap)
from saw_lab.lattices import build_ladder, build_tree


def test_text_round_trip():
    for ball in (build_ladder(6), build_tree(3, 4)):
        again = GraphBall.from_text(ball.to_text())
        assert again.adjacency == ball.adjacency
        assert again.complete == ball.complete
        assert again.root == ball.root


def test_validation_rejects_asymmetry():
    with pytest.raises(GraphError):
        GraphBall([[1], []], 0, [True, True])


def test_validation_rejects_loop():
    with pytest.raises(GraphError):
        GraphBall([[0, 1], [0]], 0, [True, True])


def test_validation_rejects_disconnected():
    with pytest.raises(GraphError):
        GraphBall([[1], [0], [3], [2]], 0, [False] * 4)


def test_bfs_distances_ladder():
    ball = build_ladder(5)
    dist = ball.bfs_distances(ball.root)
    # corner root: the far corner of a 5-column ladder is 5 steps away
    assert dist[ball.root] == 0
    assert max(dist.values()) == 5


def test_induced_ball_completeness():
    ball = build_tree(3, 5)
    sub = induced_ball(ball, 3)
    dist = sub.bfs_distances(sub.root)
    for v, d in dist.items():
        assert d <= 3
        assert not sub.complete[v] or d < 3


def test_girth_ladder_and_tree():
    assert girth_within(build_ladder(5), 10) == 4
    assert girth_within(build_tree(3, 5), 10) is None


def test_ladder_square_count():
    # 10-column ladder has 9 rung squares
    cycles = enumerate_cycles_up_to(build_ladder(10), 4)
    assert len(cycles) == 9
    assert all(len(c) == 4 for c in cycles)


@given(st.lists(st.integers(0, 50), min_size=3, max_size=9, unique=True),
       st.integers(0, 8), st.booleans())
def test_canonical_cycle_invariance(cycle, shift, flip):
    k = shift % len(cycle)
    other = cycle[k:] + cycle[:k]
    if flip:
        other = other[::-1]
    assert canonical_cycle(cycle) == canonical_cycle(other)


def test_vertex_cap_env(monkeypatch):
    monkeypatch.setenv("SAW_LAB_MAX_VERTICES", "123")
    assert max_vertices_cap() == 123
