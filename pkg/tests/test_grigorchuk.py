import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from saw_lab.graphball import girth_within
from saw_lab.grigorchuk import (GENERATORS, SchreierGraph, act, cayley_ball,
                                classify_section, count_walk_prefixes,
                                equal_elements, generate_words,
                                identity_witness, is_identity,
                                lift_and_verify, reduce_word, weight_Z1,
                                weight_Z2, word_count_growth)

PHI = (1 + math.sqrt(5)) / 2

words = st.text(alphabet=GENERATORS, max_size=10)


def test_reduce_examples():
    assert reduce_word("bc") == "d"
    assert reduce_word("bcd") == ""
    assert reduce_word("aa") == ""
    assert reduce_word("abab") == "abab"


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_reduce_confluent(u, v):
    assert reduce_word(reduce_word(u) + v) == reduce_word(u + v)


def test_act_examples():
    assert act("a", "111") == "011"
    assert act("d", "01") == "01"
    assert act("b", "1111") == "1111"
    assert act("b", "0111") == "0011"


def test_relations():
    for w in ["aa", "bb", "cc", "dd", "bcd", "cdb", "dbc", "bcbc"]:
        assert is_identity(w)
    for w in ["a", "b", "ab", "ad", "abab"]:
        assert not is_identity(w)


def test_equal_elements():
    assert equal_elements("bc", "d")
    assert not equal_elements("a", "b")


def test_identity_witness():
    assert identity_witness("bcd", 6) is None
    moved = identity_witness("ab", 6)
    assert moved is not None and act("ab", moved) != moved


def test_cross_oracle_random():
    rng = random.Random(7)
    for _ in range(100):
        w = "".join(rng.choice(GENERATORS) for _ in range(rng.randrange(1, 12)))
        ident = is_identity(w)
        fixes = all(act(w, format(k, "06b")) == format(k, "06b")
                    for k in range(64))
        if ident:
            assert fixes
        if not fixes:
            assert not ident


def test_cayley_ball_structure():
    ball = cayley_ball(3)
    assert len(ball.adjacency[ball.root]) == 3
    assert girth_within(ball, 8) == 4


def test_schreier_root():
    g = SchreierGraph(6)
    root = g.index[""]
    assert set(g.fixers(root)) >= {"b", "c", "d"}
    assert classify_section(g, root) == "root"
    nonloop = {g.step(root, s) for s in "abcd"} - {root}
    assert len(nonloop) <= 2


def test_generate_words_counts():
    g = SchreierGraph(22)
    w = generate_words(g, 8)
    assert {k: len(v) for k, v in w.items() if v} == {2: 2, 4: 4, 6: 8, 7: 8, 8: 16}


def test_weights():
    z = 1 / PHI
    assert abs(weight_Z2(z) - 1.0) < 1e-12
    assert weight_Z1(z) > 1.0


def test_lift_negative_control():
    rep = lift_and_verify(["bcbc"])
    assert not rep.all_saw


def test_lift_small():
    g = SchreierGraph(22)
    w = generate_words(g, 8)
    flat = [x for ws in w.values() for x in ws]
    rep = lift_and_verify(flat)
    assert rep.all_saw


def test_growth():
    g = SchreierGraph(40)
    n = 14
    assert word_count_growth(g, n) == pytest.approx(
        count_walk_prefixes(g, n) ** (1 / n))
    assert word_count_growth(g, n) > 1.4
