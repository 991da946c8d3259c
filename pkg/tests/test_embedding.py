"""Tests for induced-embedding search and isomorphism."""

import random

import networkx as nx

from clawfree.embedding import (
    are_isomorphic,
    find_induced_embedding,
    is_induced_embedding,
    is_isomorphism,
    iter_induced_embeddings,
)
from clawfree.formats import to_networkx
from clawfree.graph import (
    a6,
    claw,
    complement,
    cycle,
    empty,
    graph_from_mask,
    k3,
    p9,
    paley9,
    path,
    relabel,
)


# ── Induced embeddings ───────────────────────────────────────────

def test_c4_embeds_in_p9():
    f = find_induced_embedding(cycle(4), p9())
    assert f is not None
    assert is_induced_embedding(cycle(4), p9(), f)


def test_p9_is_claw_free():
    assert find_induced_embedding(claw(), p9()) is None


def test_c5_is_not_induced_in_p9():
    assert find_induced_embedding(cycle(5), p9()) is None
    assert find_induced_embedding(cycle(6), p9()) is not None


def test_p9_embeds_identically_into_itself():
    assert find_induced_embedding(p9(), p9()) == tuple(range(9))


def test_triangles_of_p9():
    # six triangles (rows and columns), 3! maps each
    assert len(list(iter_induced_embeddings(k3(), p9()))) == 36


def test_larger_pattern_never_embeds():
    assert find_induced_embedding(path(10), p9()) is None
    assert list(iter_induced_embeddings(empty(10), p9())) == []


def test_is_induced_embedding_rejects_bad_maps():
    assert not is_induced_embedding(path(3), p9(), (0, 1, 1))
    assert not is_induced_embedding(path(3), p9(), (0, 1))
    assert not is_induced_embedding(path(3), p9(), (0, 1, 2))      # 0-2 adjacent in P9
    assert not is_induced_embedding(path(3), p9(), (0, 1, 9))


# ── Isomorphism ──────────────────────────────────────────────────

def test_c5_self_complementary():
    f = are_isomorphic(cycle(5), complement(cycle(5)))
    assert f is not None
    assert is_isomorphism(cycle(5), complement(cycle(5)), f)


def test_p9_and_paley9():
    f = are_isomorphic(p9(), paley9())
    assert f is not None and is_isomorphism(p9(), paley9(), f)
    assert are_isomorphic(p9(), complement(p9())) is not None


def test_non_isomorphic():
    assert are_isomorphic(path(4), cycle(4)) is None
    assert are_isomorphic(a6(), complement(a6())) is None
    assert are_isomorphic(path(3), path(4)) is None


def test_relabeled_graphs_are_isomorphic():
    rng = random.Random(3)
    for _ in range(30):
        g = graph_from_mask(7, rng.getrandbits(21))
        perm = list(range(7))
        rng.shuffle(perm)
        h = relabel(g, perm)
        f = are_isomorphic(g, h)
        assert f is not None and is_isomorphism(g, h, f)


def test_isomorphism_agrees_with_networkx():
    rng = random.Random(11)
    for _ in range(200):
        g = graph_from_mask(6, rng.getrandbits(15))
        h = graph_from_mask(6, rng.getrandbits(15))
        expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
        assert (are_isomorphic(g, h) is not None) == expected
