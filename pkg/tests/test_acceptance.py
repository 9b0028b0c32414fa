"""End-to-end acceptance checks.

Each test exercises one headline claim at full scale, prints a single
pass/fail line, and enforces its runtime budget.  Tolerances are asserted
exactly as stated; nothing here is loosened to make a check pass.
"""
import itertools
import math
import time

import pytest

from _helpers import balls_isomorphic
from saw_lab import fisher, grigorchuk, height, lattices, sawengine, tiling
from saw_lab.graphball import enumerate_cycles_up_to, girth_within, induced_ball

PHI = (1.0 + math.sqrt(5.0)) / 2.0
THREADS = 8


def report(name, ok, detail=""):
    print(f"{name}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def budget(name, t0, limit):
    dt = time.monotonic() - t0
    report(f"{name} runtime", dt < limit, f"{dt:.1f}s < {limit}s")


def test_word_counts_are_fibonacci():
    t0 = time.monotonic()
    fib = [1, 1]
    while len(fib) <= 31:
        fib.append(fib[-1] + fib[-2])
    ok = all(sawengine.eastward_count(n) == fib[n] for n in range(31))
    report("admissible word counts n<=30 follow the Fibonacci recursion", ok)
    spot = (sawengine.eastward_count(10), sawengine.eastward_count(16))
    report("spot values (89, 1597)", spot == (89, 1597))
    budget("word counts", t0, 1.0)


def test_certified_bound_constants():
    t0 = time.monotonic()
    targets = {
        "x1": 1.529, "x2": 1.769, "y1": 12.0 ** (1.0 / 6.0),
        "y2": 1.900, "twisted_ladder": 1.6529, "hex_lift_sqrt": 1.676,
    }
    for name, target in targets.items():
        res = fisher.solve(fisher.named_equation(name))
        report(f"constant {name} within 0.001 of {target:.6g}",
               abs(res.bound_value - target) < 1e-3,
               f"value {res.bound_value:.12g}")
        report(f"constant {name} residual <= 1e-12",
               abs(res.residual) <= 1e-12, f"residual {res.residual:.3g}")
    budget("bound constants", t0, 1.0)


def test_equation_reductions():
    x2 = fisher.solve(fisher.named_equation("x2")).bound_value
    y2 = fisher.solve(fisher.named_equation("y2")).bound_value
    r33 = fisher.solve(fisher.ratio_bound_equation(3, 3)).bound_value
    r34 = fisher.solve(fisher.ratio_bound_equation(3, 4)).bound_value
    report("degree-3 girth-3 ratio equation reduces to x2",
           abs(r33 - x2) < 1e-9, f"{r33:.12g} vs {x2:.12g}")
    report("degree-3 girth-4 ratio equation reduces to y2",
           abs(r34 - y2) < 1e-9, f"{r34:.12g} vs {y2:.12g}")
    root = fisher.solve(fisher.hexagon_lift_equation(PHI)).root
    report("hexagon-lift equation at growth phi has root 1/phi",
           abs(root - 1.0 / PHI) < 1e-12, f"root {root:.15g}")


def test_exact_walk_counts():
    t0 = time.monotonic()
    def tree_neighbors(v):
        kids = 3 if v == () else 2
        out = [v + (i,) for i in range(kids)]
        if v:
            out.append(v[:-1])
        return out

    counts = sawengine.count_saws_lazy(tree_neighbors, (), 20)
    ok = counts[0] == 1 and all(counts[n] == 3 * 2 ** (n - 1)
                                for n in range(1, 21))
    report("3-tree walk counts are 3*2^(n-1) for n<=20", ok)

    ladder = lattices.build_ladder(86, doubly_infinite=True)
    lc = sawengine.count_saws(ladder, 40, threads=THREADS)
    ratio = lc[40] / lc[39]
    report("ladder count ratio at n=40 within 0.5% of phi",
           abs(ratio - PHI) / PHI < 0.005, f"ratio {ratio:.6f}")

    tw = lattices.build_twisted_ladder(46)
    tc = sawengine.count_saws(tw, 40, threads=THREADS)
    tratio = tc[40] / tc[39]
    tmu = math.sqrt(1.0 + math.sqrt(3.0))
    report("quadrilateral-chain ratio at n=40 within 1% of sqrt(1+sqrt 3)",
           abs(tratio - tmu) / tmu < 0.01, f"ratio {tratio:.6f}")

    hexball, _ = lattices.build_periodic("hexagonal", 30)
    hc = sawengine.count_saws(hexball, 28, threads=THREADS)
    hmu = math.sqrt(2.0 + math.sqrt(2.0))
    hratio = hc[28] / hc[27]
    report("honeycomb count ratio at n=28 within 5% of sqrt(2+sqrt 2)",
           abs(hratio - hmu) / hmu < 0.05, f"ratio {hratio:.6f}")

    small, _ = lattices.build_periodic("hexagonal", 14)
    report("honeycomb counts n<=12 agree with the reference counter",
           sawengine.count_saws(small, 12) ==
           sawengine.naive_count_saws(small, 12))
    budget("exact walk counts", t0, 300.0)


@pytest.mark.parametrize("family,steps", [("hexagonal", 16),
                                          ("arch_4_6_12", 14)])
def test_height_injections(family, steps):
    t0 = time.monotonic()
    pname, growth = {"hexagonal": ("hexagonal", (2, 0)),
                     "arch_4_6_12": ("arch_4_6_12", (2, 1))}[family]
    ball, pg = lattices.build_periodic(pname, steps + 4)
    h = height.solve_periodic_harmonic(pg, growth).on_ball(ball)
    report(f"{family} height is exactly harmonic", height.is_harmonic(ball, h))
    cond = height.check_conditions(ball, h)
    report(f"{family} step inequalities hold",
           cond.eq1.holds and cond.eq2.holds and cond.qm.holds
           and cond.ag.holds and cond.band_ok)
    rep = height.verify_injection(height.build_injection(ball, h, steps))
    expected = sawengine.eastward_count(steps)
    report(f"{family} injection yields {expected} distinct walks at n={steps}",
           rep.all_saw and rep.injective and rep.walks == expected,
           f"{rep.walks} walks")
    budget(f"{family} injection", t0, 30.0)


def test_tiling_generator_and_injections():
    t0 = time.monotonic()
    for tv, name in [((6, 6, 6), "hexagonal"), ((4, 8, 8), "arch_4_8_8"),
                     ((4, 6, 12), "arch_4_6_12")]:
        t = tiling.generate_tiling(tv, 5)
        ball, _ = lattices.build_periodic(name, 5)
        report(f"generated {tv} tiling matches the coordinate builder",
               balls_isomorphic(t.ball, ball))

    for tv, lower in [((7, 7, 7), 6), ((5, 10, 10), 5)]:
        t = tiling.generate_tiling(tv, 9 if tv[0] == 7 else 10)
        depth = 4 if tv[0] == 7 else 3
        cycles = [c for c in enumerate_cycles_up_to(t.ball, 14)
                  if max(t.dist[v] for v in c) <= depth]
        reports, min_rho, ok = tiling.check_l95_l96(t, cycles, lower=lower)
        report(f"turn-balance identity on {len(reports)} cycles of {tv}", ok)
        report(f"total-turn lower bound {lower} on {tv}", min_rho >= lower,
               f"min {min_rho}")

    def check_case(tv, radius, n, fn):
        t = tiling.generate_tiling(tv, radius)
        rep = height.verify_injection(fn(t, n))
        expected = sawengine.eastward_count(n)
        report(f"{tv} injection yields {expected} distinct walks at n={n}",
               rep.all_saw and rep.injective and rep.walks == expected,
               f"{rep.walks} walks")
        return t

    t777 = check_case((7, 7, 7), 16, 14, tiling.caseA_injection)
    spans = [tiling.turn_span(t777, w)
             for w in tiling.caseA_injection(t777, 14)]
    report("(7,7,7) walks stay within a turn-band of width 3",
           max(spans) <= 3)

    t4810 = check_case((4, 8, 10), 16, 12, tiling.caseB_injection)
    report("(4,8,10) projected walks stay within a turn-band of width 1",
           max(tiling.caseB_projection_spans(t4810, 12)) <= 1)

    check_case((5, 8, 8), 16, 12, tiling.caseD_injection)

    t = tiling.generate_tiling((4, 6, 12), 44)
    sets = sorted(tiling.caseC_first_step_length_sets(t))
    report("(4,6,12) first-step lift length multisets",
           sets == [(2, 3, 5, 6), (3, 4, 4, 5)], str(sets))
    lift = tiling.HexagonLift(t)
    h0 = lift.hexagon_of_vertex(0)
    own = lift.square_of_vertex(0)

    def stems(hex_idx, visited, steps, first):
        total = 1
        if steps < 8:
            for nxt, square in lift.adj.get(hex_idx, []):
                if nxt in visited or (first and square is own):
                    continue
                total += stems(nxt, visited | {nxt}, steps + 1, False)
        return total

    hexcounts = sawengine.naive_count_saws(
        lattices.build_periodic("hexagonal", 12)[0], 8)
    expected_stems = 1 + 2 * sum(hexcounts[1:9]) // 3
    report("(4,6,12) supergraph walk tree is complete to 8 steps",
           stems(h0, {h0}, 0, True) == expected_stems,
           f"expected {expected_stems}")
    walks, lifts, _ = tiling.caseC_verify_lifts(t, 8)
    report("(4,6,12) every lift of every short supergraph walk is a SAW",
           lifts == walks - 1 and lifts > 10 ** 7, f"{lifts} lifts")
    budget("tiling checks", t0, 180.0)


def _reduced_words(max_len):
    for k in range(1, max_len + 1):
        for start in ("a", "bcd"):
            for w in _alternating(start, k):
                yield w


def _alternating(kind, k):
    if kind == "a":
        heads, tails = ["a"], "bcd"
    else:
        heads, tails = list("bcd"), "a"
    if k == 1:
        yield from heads
        return
    for head in heads:
        for rest in _alternating("bcd" if kind == "a" else "a", k - 1):
            yield head + rest


def test_group_calculus():
    t0 = time.monotonic()
    relations = ["aa", "bb", "cc", "dd", "bcd", "cdb", "dbc"]
    report("defining relations hold",
           all(grigorchuk.is_identity(w) for w in relations))
    report("b*c equals d and c*d equals b and b*d equals c",
           grigorchuk.equal_elements("bc", "d")
           and grigorchuk.equal_elements("cd", "b")
           and grigorchuk.equal_elements("bd", "c"))

    mismatches = 0
    total = 0
    for w in _reduced_words(12):
        total += 1
        ident = grigorchuk.is_identity(w)
        witness = grigorchuk.identity_witness(w, 8)
        if witness is None and not ident:
            witness = grigorchuk.identity_witness(w, 16)
        if ident != (witness is None):
            mismatches += 1
    report(f"identity test agrees with the action on {total} reduced words",
           mismatches == 0, f"{mismatches} mismatches")

    ball = grigorchuk.cayley_ball(3)
    report("Cayley ball has girth 4", girth_within(ball, 10) == 4)
    tags = {t: v for v, t in enumerate(ball.vertex_tags)}
    quad = [tags[""], tags["b"], tags["d"], tags["c"]]
    ok = all(quad[(i + 1) % 4] in ball.adjacency[quad[i]] for i in range(4))
    report("vertices id, b, bc, c form a quadrilateral", ok)

    z = 1.0 / PHI
    report("block weight sum equals 1 at z = 1/phi",
           abs(grigorchuk.weight_Z2(z) - 1.0) < 1e-12,
           f"{grigorchuk.weight_Z2(z):.15g}")
    report("companion weight sum exceeds 1 at z = 1/phi",
           grigorchuk.weight_Z1(z) > 1.0, f"{grigorchuk.weight_Z1(z):.6g}")

    sch = grigorchuk.SchreierGraph(40)
    words = [w for ws in grigorchuk.generate_words(sch, 16).values()
             for w in ws]
    rep = grigorchuk.lift_and_verify(words)
    report(f"all {rep.words} block words of length <= 16 lift to "
           "self-avoiding walks", rep.all_saw and rep.words == len(words))

    growth = grigorchuk.word_count_growth(sch, 20)
    report("distinct length-20 walk count growth is at least phi - 0.05",
           growth >= PHI - 0.05, f"{growth:.4f}")
    budget("group calculus", t0, 120.0)


def test_cycle_contraction_and_covers():
    t0 = time.monotonic()
    tree = lattices.build_tree(3, 6)
    blown = fisher.fisher_transform(tree)
    back = fisher.contract_small_faces(blown, 3)
    report("contracting the triangles of a transformed 3-tree recovers it",
           balls_isomorphic(induced_ball(back, 4), induced_ball(tree, 4)))

    free = lattices.build_free_product(3, 3, 7)
    report("triangle free product: every deep vertex on exactly one triangle",
           fisher.unique_small_face_cover(free, 3))
    squares, _ = lattices.build_periodic("arch_4_8_8", 8)
    report("square/octagon lattice: every deep vertex on exactly one square",
           fisher.unique_small_face_cover(squares, 4))
    ladder = lattices.build_ladder(16, doubly_infinite=True)
    report("ladder squares are not a unique cover",
           not fisher.unique_small_face_cover(ladder, 4))
    budget("contraction and covers", t0, 10.0)


def test_recurrence_constants():
    r1 = fisher.recurrence_growth((1, 1))
    report("recurrence x^2 = x + 1 gives phi",
           abs(r1 - PHI) < 1e-10, f"{r1:.12g}")
    r2 = fisher.recurrence_growth((0, 2, 0, 2))
    target = math.sqrt(1.0 + math.sqrt(3.0))
    report("recurrence x^4 = 2x^2 + 2 gives sqrt(1+sqrt 3)",
           abs(r2 - target) < 1e-10, f"{r2:.12g}")
