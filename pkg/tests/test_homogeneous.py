"""Tests for 3-homogeneous subsets and the equal-H3 conditions."""

import random
from itertools import combinations

import pytest

from clawfree.decompose import build_M, build_Mpp
from clawfree.graph import (
    SizeMismatchError,
    boolean_sum,
    complement,
    cycle,
    empty,
    enumerate_graphs,
    graph_count,
    graph_from_mask,
    k3,
    p9,
    path,
)
from clawfree.homogeneous import (
    TripleSet,
    homogeneous_triples,
    lemma3_condition_b,
    lemma3_condition_c,
    same_3_homogeneous,
    triple_diff,
)


def _brute_h3(g):
    out = set()
    for t in combinations(range(g.n), 3):
        inside = sum(g.adjacent(a, b) for a, b in combinations(t, 2))
        if inside in (0, 3):
            out.add(t)
    return frozenset(out)


# ── H3 ───────────────────────────────────────────────────────────

def test_h3_of_triangle():
    assert homogeneous_triples(k3()).members == frozenset({(0, 1, 2)})


def test_h3_of_p9_has_twelve_triples():
    # six lines (rows, columns) and six transversals
    assert len(homogeneous_triples(p9())) == 12


def test_h3_of_small_graphs():
    assert len(homogeneous_triples(empty(4))) == 4
    assert len(homogeneous_triples(path(3))) == 0
    assert len(homogeneous_triples(empty(2))) == 0


def test_h3_matches_brute_force():
    rng = random.Random(2)
    for _ in range(100):
        g = graph_from_mask(8, rng.getrandbits(28))
        assert homogeneous_triples(g).members == _brute_h3(g)


def test_h3_is_complement_invariant():
    for g in enumerate_graphs(5):
        assert same_3_homogeneous(g, complement(g))


def test_m4_and_mpp4_share_h3():
    assert same_3_homogeneous(build_M(4), build_Mpp(4))


def test_same_3_homogeneous_size_mismatch():
    with pytest.raises(SizeMismatchError):
        same_3_homogeneous(path(3), path(4))


# ── TripleSet ────────────────────────────────────────────────────

def test_triple_set_validation():
    with pytest.raises(ValueError):
        TripleSet(3, frozenset({(0, 2, 1)}))
    with pytest.raises(ValueError):
        TripleSet(3, frozenset({(0, 1, 3)}))


def test_triple_set_text():
    ts = homogeneous_triples(empty(4))
    assert ts.to_text() == "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"
    assert TripleSet.from_text(4, ts.to_text()) == ts
    assert TripleSet.from_text(4, "3 1 0\n\n") == TripleSet(4, frozenset({(0, 1, 3)}))


def test_triple_set_contains_and_iter():
    ts = homogeneous_triples(p9())
    assert (2, 1, 0) in ts
    assert (0, 1, 3) not in ts
    assert list(ts)[0] == (0, 1, 2)


def test_triple_diff():
    assert triple_diff(path(3), k3()) == ([], [(0, 1, 2)])
    a, b = homogeneous_triples(path(4)), homogeneous_triples(cycle(4))
    assert a.symmetric_difference(b) == sorted(a.members ^ b.members)


# ── Equal-H3 conditions ──────────────────────────────────────────

def test_conditions_on_m_construction():
    g, g2 = build_M(6), build_Mpp(6)
    u = boolean_sum(g, g2)
    assert lemma3_condition_b(g, u)
    assert lemma3_condition_c(g, u)


def test_condition_b_fails_on_mixed_pair():
    # U = K2 + K1 on {0,1,2}: U(02) = U(12) != U(01); G must split 02/12
    u = graph_from_mask(3, 0b001)
    g = graph_from_mask(3, 0b000)
    assert not lemma3_condition_b(g, u)
    assert not same_3_homogeneous(g, boolean_sum(g, u))


def test_three_conditions_agree_exhaustive():
    for n in range(0, 5):
        total = graph_count(n)
        for u_mask in range(total):
            u = graph_from_mask(n, u_mask)
            for g_mask in range(total):
                g = graph_from_mask(n, g_mask)
                a = same_3_homogeneous(g, boolean_sum(g, u))
                assert lemma3_condition_b(g, u) == a
                assert lemma3_condition_c(g, u) == a
