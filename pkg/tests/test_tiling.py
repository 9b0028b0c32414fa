import math

import pytest

from _helpers import balls_isomorphic
from saw_lab.graphball import GraphError, enumerate_cycles_up_to
from saw_lab.height import verify_injection
from saw_lab.lattices import build_periodic
from saw_lab.sawengine import eastward_count
from saw_lab.tiling import (admissible_family, caseA_injection,
                            caseB_injection, caseB_projection_spans,
                            caseC_first_step_length_sets, caseC_verify_lifts,
                            caseD_injection, check_l95_l96, classify,
                            curvature_f, enclosed_faces, generate_tiling,
                            rho, turn_span)


def test_curvature_and_classes():
    assert abs(curvature_f((6, 6, 6)) - 2.0) < 1e-12
    assert classify((6, 6, 6)) == "euclidean"
    assert classify((4, 8, 8)) == "euclidean"
    assert classify((7, 7, 7)) == "hyperbolic"
    assert classify((3, 3, 3)) == "spherical"
    assert curvature_f((4, 6, math.inf)) > 2.0


def test_families():
    assert admissible_family((7, 7, 7)) == "A"
    assert admissible_family((5, 8, 8)) == "B"
    assert admissible_family((4, 6, 12)) == "C"
    assert admissible_family((3, 4, 5)) is None
    with pytest.raises(GraphError):
        generate_tiling((3, 4, 5), 3)


@pytest.mark.parametrize("name,tv", [("hexagonal", (6, 6, 6)),
                                     ("arch_4_8_8", (4, 8, 8)),
                                     ("arch_4_6_12", (4, 6, 12))])
def test_generator_matches_coordinates(name, tv):
    t = generate_tiling(tv, 5)
    ball, _ = build_periodic(name, 5)
    assert balls_isomorphic(t.ball, ball)


def test_turn_calculus_round_trip():
    t = generate_tiling((6, 6, 6), 4)
    v = 0
    a = t.nbr[v][0]
    r = t.right_neighbor(v, a)
    l = t.left_neighbor(v, a)
    assert t.turn(a, v, r) == 1
    assert t.turn(a, v, l) == -1


def test_rho_single_faces():
    t = generate_tiling((7, 7, 7), 6)
    face = t.closed_faces(7)[0]
    assert rho(t, face.path) == 7
    assert [f.size for f in enclosed_faces(t, face.path)] == [7]
    t2 = generate_tiling((6, 6, 6), 6)
    assert rho(t2, t2.closed_faces(6)[0].path) == 6


def test_turn_identity_batch():
    t = generate_tiling((5, 10, 10), 9)
    cycles = [c for c in enumerate_cycles_up_to(t.ball, 12)
              if max(t.dist[v] for v in c) <= 3]
    assert cycles
    reports, min_rho, ok = check_l95_l96(t, cycles, lower=5)
    assert ok
    assert min_rho >= 5


def test_caseA_small():
    t = generate_tiling((7, 7, 7), 10)
    walks = caseA_injection(t, 8)
    rep = verify_injection(walks)
    assert rep.all_saw and rep.injective and rep.walks == eastward_count(8)
    assert max(turn_span(t, w) for w in walks) <= 3


def test_caseA_rejects_even():
    t = generate_tiling((6, 6, 6), 5)
    with pytest.raises(GraphError):
        caseA_injection(t, 4)


def test_caseB_small():
    t = generate_tiling((4, 8, 10), 12)
    rep = verify_injection(caseB_injection(t, 8))
    assert rep.all_saw and rep.injective and rep.walks == eastward_count(8)
    assert max(caseB_projection_spans(t, 8)) <= 1


def test_caseD_small():
    t = generate_tiling((5, 8, 8), 12)
    walks = caseD_injection(t, 8)
    rep = verify_injection(walks)
    assert rep.all_saw and rep.injective and rep.walks == eastward_count(8)
    # alternating midpoint/vertex sequences are incidence-consistent
    for w in walks[:5]:
        for i in range(1, len(w)):
            if i % 2 == 1:
                assert w[i] in w[i - 1]
            else:
                assert w[i - 1] in w[i]


def test_caseC_step_shapes():
    t = generate_tiling((4, 6, 12), 12)
    sets = caseC_first_step_length_sets(t)
    assert sorted(sets) == [(2, 3, 5, 6), (3, 4, 4, 5)]


def test_caseC_short_lifts():
    t = generate_tiling((4, 6, 12), 26)
    walks, lifts, first_lens = caseC_verify_lifts(t, 4)
    assert walks > 1 and lifts == walks - 1
    assert first_lens <= {2, 3, 4, 5, 6}
