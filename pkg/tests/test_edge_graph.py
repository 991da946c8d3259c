"""Tests for the edge-graph S(U) and the bipartite-complement coloring."""

import random

import pytest

from clawfree.edge_graph import (
    claim_holds,
    complement_coloring,
    edge_graph,
    is_proper_coloring,
    spans_line_graph,
    star_equivalence_check,
)
from clawfree.embedding import are_isomorphic
from clawfree.graph import (
    a6,
    claw,
    complement,
    complete,
    complete_bipartite,
    cycle,
    empty,
    enumerate_graphs,
    graph_from_mask,
    path,
    two_coloring,
)
from clawfree.structure import contains_claw


# ── S(U) ─────────────────────────────────────────────────────────

def test_claw_gives_triangle():
    s = edge_graph(claw())
    assert s.base.edge_count == 3
    assert not s.base.is_triangle_free()


def test_labels_are_lexicographic():
    assert [str(p) for p in edge_graph(cycle(4)).labels] == ["(0,1)", "(0,3)", "(1,2)", "(2,3)"]


def test_vertex_of():
    s = edge_graph(cycle(4))
    assert s.vertex_of(3, 0) == 1
    assert s.labels[s.vertex_of(2, 1)].lo == 1


def test_complete_graph_has_edgeless_s():
    s = edge_graph(complete(5))
    assert s.n == 10
    assert s.base.edge_count == 0


def test_s_of_cycles_is_cycle():
    for n in range(4, 11):
        assert are_isomorphic(edge_graph(cycle(n)).base, cycle(n)) is not None


def test_s_of_a6_is_c9():
    assert are_isomorphic(edge_graph(a6()).base, cycle(9)) is not None


def test_s_spans_line_graph():
    rng = random.Random(5)
    for _ in range(50):
        u = graph_from_mask(8, rng.getrandbits(28))
        assert spans_line_graph(u, edge_graph(u))


def test_source_cap():
    with pytest.raises(ValueError):
        edge_graph(empty(65))
    assert edge_graph(empty(64)).n == 0


# ── Claw <=> triangle ────────────────────────────────────────────

def test_star_equivalence_exhaustive():
    for n in range(0, 6):
        for u in enumerate_graphs(n):
            assert star_equivalence_check(u)


def test_star_equivalence_random():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(4, 16)
        u = graph_from_mask(n, rng.getrandbits(n * (n - 1) // 2))
        assert (contains_claw(u) is None) == edge_graph(u).base.is_triangle_free()


# ── Bipartite complement ─────────────────────────────────────────

def test_complement_coloring_of_path():
    s, derived = complement_coloring(path(4), (0, 1, 0, 1))
    assert [str(p) for p in s.labels] == ["(0,2)", "(0,3)", "(1,3)"]
    assert derived == (0, 1, 0)
    assert is_proper_coloring(s.base, derived)


def test_complement_coloring_rejects_improper_coloring():
    with pytest.raises(ValueError):
        complement_coloring(path(3), (0, 0, 1))
    with pytest.raises(ValueError):
        complement_coloring(path(3), (0, 1))


def test_claim_on_complete_bipartite():
    u = complete_bipartite(3, 4)
    assert claim_holds(u, two_coloring(u))


def test_claim_exhaustive():
    for n in range(0, 6):
        for u in enumerate_graphs(n):
            colors = two_coloring(u)
            assert claim_holds(u, colors)
            if colors is not None:
                assert two_coloring(edge_graph(complement(u)).base) is not None


def test_claim_vacuous_for_odd_cycles():
    assert claim_holds(cycle(5), None)
