"""Tests for inclusion matrices, exact ranks and the GF(2) kernel of W_2k^T."""

import random
from math import comb

import pytest

from clawfree.decompose import decompose
from clawfree.graph import (
    SizeMismatchError,
    boolean_sum,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    enumerate_graphs,
    graph_from_mask,
    path,
)
from clawfree.homogeneous import same_3_homogeneous
from clawfree.incidence import (
    BinMatrix,
    RatMatrix,
    SubsetIndex,
    build_W,
    edge_parity_agrees,
    gf2_kernel,
    gf2_rank,
    graph_column_vector,
    inclusion_rank,
    is_complete_bipartite,
    is_k_hypomorphic_up_to_comp,
    iso_up_to_complementation,
    kernel_span,
    rational_rank,
    wilson_kernel,
    wilson_kernel_members,
)


# ── Subset ranking ───────────────────────────────────────────────

def test_subset_index_colex():
    idx = SubsetIndex(4, 2)
    assert list(idx.subsets()) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert SubsetIndex(5, 2).rank((3, 0)) == 3
    assert SubsetIndex(5, 2).unrank(5) == (2, 3)


def test_subset_index_ranks_are_dense():
    idx = SubsetIndex(7, 3)
    assert [idx.rank(s) for s in idx.subsets()] == list(range(comb(7, 3)))


def test_subset_index_errors():
    with pytest.raises(ValueError):
        SubsetIndex(3, 4)
    with pytest.raises(ValueError):
        SubsetIndex(5, 2).rank((1, 1))
    with pytest.raises(ValueError):
        SubsetIndex(5, 2).rank((0, 5))
    with pytest.raises(ValueError):
        SubsetIndex(5, 2).unrank(10)


def test_graph_column_vector_follows_pair_order():
    u = cycle(5)
    idx = SubsetIndex(5, 2)
    vec = graph_column_vector(u, idx)
    for r, (x, y) in enumerate(idx.subsets()):
        assert bool((vec >> r) & 1) == u.adjacent(x, y)
    with pytest.raises(SizeMismatchError):
        graph_column_vector(u, SubsetIndex(6, 2))
    with pytest.raises(SizeMismatchError):
        graph_column_vector(u, SubsetIndex(5, 3))


# ── Matrices ─────────────────────────────────────────────────────

def test_build_w_small():
    w = build_W(1, 2, 3)
    assert w.to_text() == "3 3\n1 1 0\n1 0 1\n0 1 1\n"
    assert w.transpose().transpose() == w
    assert w.entry(2, 0) == 0


def test_build_w_errors():
    with pytest.raises(ValueError):
        build_W(3, 2, 5)
    with pytest.raises(ValueError):
        build_W(2, 3, 17)
    with pytest.raises(ValueError):
        build_W(-1, 2, 4)


def test_bin_matrix_validation():
    with pytest.raises(ValueError):
        BinMatrix(1, 2, (4,))
    with pytest.raises(ValueError):
        BinMatrix(2, 2, (1,))


def test_rank_differs_by_field():
    w = build_W(1, 2, 3)
    assert gf2_rank(w) == 2
    assert rational_rank(w.to_rational()) == 3


def test_rational_rank_with_fractions():
    assert rational_rank(RatMatrix.from_rows([["1/2", 1], [1, 2]])) == 1
    assert rational_rank(RatMatrix.from_rows([["1/2", 1], [1, 3]])) == 2
    assert rational_rank(RatMatrix.from_rows([[0, 0], [0, 0]])) == 0
    assert RatMatrix.from_rows([["1/2", 1], [1, 2]]).to_text() == "2 2\n1/2 1\n1 2\n"


def test_rational_rank_examples():
    assert rational_rank(build_W(2, 3, 6).to_rational()) == 15
    assert rational_rank(build_W(1, 2, 5).to_rational()) == 5


def test_gram_has_same_rank():
    for t, k, v in ((1, 2, 3), (1, 2, 5), (2, 3, 5), (2, 2, 4)):
        w = build_W(t, k, v)
        assert rational_rank(w.gram()) == rational_rank(w.to_rational())


def test_full_row_rank_of_inclusion_matrices():
    for v in range(2, 9):
        for t in range(0, 4):
            for k in range(t, v - t + 1):
                assert rational_rank(build_W(t, k, v).gram()) == comb(v, t)


def test_inclusion_rank_uses_shorter_side():
    w = build_W(2, 4, 6)
    assert inclusion_rank(w) == 15
    assert inclusion_rank(build_W(1, 3, 7)) == inclusion_rank(build_W(1, 3, 7).transpose()) == 7
    assert inclusion_rank(build_W(2, 3, 16)) == comb(16, 2)
    with pytest.raises(ValueError, match="at most 500"):
        inclusion_rank(build_W(6, 6, 12))


# ── GF(2) kernel ─────────────────────────────────────────────────

def test_gf2_kernel_vectors_vanish():
    for t, k, v in ((1, 2, 5), (2, 4, 6), (2, 3, 6)):
        m = build_W(t, k, v).transpose()
        basis = gf2_kernel(m)
        assert len(basis) == m.cols - gf2_rank(m)
        assert all(m.apply(vec) == 0 for vec in basis)


def test_kernel_span():
    assert sorted(kernel_span([0b01, 0b10])) == [0, 1, 2, 3]
    assert list(kernel_span([])) == [0]


def test_wilson_kernel_dimensions():
    assert wilson_kernel(6, 4) == [(1 << 15) - 1]
    assert len(wilson_kernel(7, 4)) == 1
    assert len(wilson_kernel(8, 4)) == 1
    assert len(wilson_kernel(7, 5)) == 7
    assert len(wilson_kernel(8, 5)) == 8


def test_wilson_members_7_5():
    report = wilson_kernel_members(7, 5)
    assert report.dimension == 7
    assert len(report.members) == 128
    assert report.all_explained
    with_property2 = {m.graph for m in report.members if m.property2}
    assert with_property2 == {empty(7), complete(7)}


def test_wilson_members_errors():
    with pytest.raises(ValueError):
        wilson_kernel_members(6, 5)
    with pytest.raises(ValueError):
        wilson_kernel_members(8, 4)
    with pytest.raises(ValueError):
        wilson_kernel_members(10, 5)


def test_is_complete_bipartite():
    assert is_complete_bipartite(complete_bipartite(2, 3))
    assert is_complete_bipartite(path(3))
    assert is_complete_bipartite(cycle(4))
    assert is_complete_bipartite(empty(3))
    assert not is_complete_bipartite(path(4))
    assert not is_complete_bipartite(disjoint_union(path(2), empty(1)))


# ── Edge parity ──────────────────────────────────────────────────

def test_edge_parity_matches_kernel_membership():
    rng = random.Random(4)
    for v, k in ((6, 4), (7, 5), (7, 3)):
        w_t = build_W(2, k, v).transpose()
        for _ in range(60):
            g = graph_from_mask(v, rng.getrandbits(comb(v, 2)))
            h = graph_from_mask(v, rng.getrandbits(comb(v, 2)))
            in_kernel = w_t.apply(boolean_sum(g, h).edge_mask) == 0
            assert edge_parity_agrees(g, h, k) == in_kernel


def test_edge_parity_complement_at_k4():
    # every 4-set spans 6 edges of G + co-G
    for g in (path(6), cycle(6), complete_bipartite(2, 4)):
        assert edge_parity_agrees(g, complement(g), 4)
    assert not edge_parity_agrees(g, complement(g), 3)


def test_edge_parity_range():
    with pytest.raises(ValueError):
        edge_parity_agrees(path(4), path(4), 5)


# ── Hypomorphy up to complementation ────────────────────────────

def test_iso_up_to_complementation():
    assert iso_up_to_complementation(path(3), complement(path(3)))
    assert not iso_up_to_complementation(path(4), cycle(4))
    with pytest.raises(SizeMismatchError):
        iso_up_to_complementation(path(3), path(4))


def test_3_hypomorphy_is_same_h3():
    for g in enumerate_graphs(4):
        for h in enumerate_graphs(4):
            assert is_k_hypomorphic_up_to_comp(g, h, 3) == same_3_homogeneous(g, h)


def test_hypomorphy_errors():
    with pytest.raises(SizeMismatchError):
        is_k_hypomorphic_up_to_comp(path(3), path(4), 2)
    with pytest.raises(ValueError):
        is_k_hypomorphic_up_to_comp(path(3), path(3), 0)
    with pytest.raises(ValueError):
        is_k_hypomorphic_up_to_comp(empty(11), empty(11), 3)


def _hypomorphy_pairs(n, seeds):
    sources = [path(n), cycle(n), disjoint_union(cycle(4), path(n - 4))]
    sources += [complement(u) for u in sources]
    rng = random.Random(n)
    sources += [graph_from_mask(n, rng.getrandbits(comb(n, 2))) for _ in range(seeds)]
    for u in sources:
        yield u, u
        yield u, complement(u)
        d = decompose(u)
        if d is not None:
            yield d.g, d.g_prime


@pytest.mark.parametrize("n", [6, 7])
def test_k_hypomorphy_descends_to_smaller_t(n):
    checked = 0
    for g, h in _hypomorphy_pairs(n, seeds=8):
        for k in range(2, n):
            if not is_k_hypomorphic_up_to_comp(g, h, k):
                continue
            for t in range(1, min(k, n - k) + 1):
                assert is_k_hypomorphic_up_to_comp(g, h, t), (k, t)
                checked += 1
    assert checked > 0
