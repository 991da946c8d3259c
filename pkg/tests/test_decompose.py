"""Tests for M_n constructions, properties (2)/(3) and Boolean-sum decompositions."""

import pytest

from clawfree.decompose import (
    Decomposition,
    Property3Case,
    build_M,
    build_Mp,
    build_Mpp,
    decompose,
    decompose_explicit,
    decompose_generic,
    decomposition_of,
    property2,
    property3,
    verify_decomposition,
)
from clawfree.formats import encode_graph6
from clawfree.graph import (
    SizeMismatchError,
    a6,
    boolean_sum,
    claw,
    complement,
    component_shapes,
    cycle,
    disjoint_union,
    empty,
    enumerate_graphs,
    is_connected,
    p9,
    path,
    two_coloring,
)


# ── M_n ──────────────────────────────────────────────────────────

def test_m4_edges():
    assert build_M(4).edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert build_Mp(4).edges() == [(0, 2), (1, 2), (1, 3)]
    assert build_Mpp(4).edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_m_sums_give_paths_and_cycles():
    for n in range(1, 11):
        assert boolean_sum(build_M(n), build_Mp(n)) == path(n)
    for n in range(4, 11, 2):
        assert boolean_sum(build_M(n), build_Mpp(n)) == cycle(n)


def test_m_pairs_are_decompositions():
    for n in range(1, 11):
        assert verify_decomposition(decomposition_of(build_M(n), build_Mp(n)))
    for n in range(4, 11, 2):
        assert verify_decomposition(decomposition_of(build_M(n), build_Mpp(n)))


def test_m_order_errors():
    for bad in (0, -1):
        with pytest.raises(ValueError):
            build_M(bad)
        with pytest.raises(ValueError):
            build_Mp(bad)
    for bad in (2, 5, 7):
        with pytest.raises(ValueError):
            build_Mpp(bad)


# ── Properties ───────────────────────────────────────────────────

def test_property3_cases():
    assert property3(cycle(6)).case == Property3Case.COMPONENTS
    assert property3(complement(cycle(6))).case == Property3Case.COMPLEMENT_COMPONENTS
    result = property3(p9())
    assert result.case == Property3Case.P9_INDUCED
    assert result.embedding == tuple(range(9))


def test_property3_fails():
    for u in (a6(), cycle(5), claw()):
        result = property3(u)
        assert result.case == Property3Case.NONE
        assert not result
        assert not property2(u)


def test_property3_components_witness():
    u = disjoint_union(cycle(4), path(3))
    result = property3(u)
    assert result.holds
    assert [str(s) for s in result.components] == ["Cycle(4)", "Path(3)"]


def test_property2_size_cap():
    with pytest.raises(ValueError):
        property2(empty(65))


def test_properties_equivalent_exhaustive():
    for n in range(0, 7):
        for u in enumerate_graphs(n):
            assert property2(u) == property3(u).holds


def test_triangle_free_property2_graphs_are_even_cycles_or_paths():
    for n in range(1, 7):
        for u in enumerate_graphs(n):
            if not property2(u):
                continue
            if u.is_triangle_free():
                assert two_coloring(u) is not None
                for shape in component_shapes(u):
                    assert shape.is_path or (shape.is_cycle and shape.length % 2 == 0)
            if not is_connected(u):
                assert u.is_triangle_free()


# ── Decompositions ───────────────────────────────────────────────

def test_decompose_even_cycle():
    d = decompose(cycle(6))
    assert d is not None and verify_decomposition(d)
    assert d.g == build_M(6)
    assert d.g_prime == build_Mpp(6)


def test_decompose_complement_case():
    u = complement(cycle(8))
    d = decompose_explicit(u)
    assert d.u == u
    assert verify_decomposition(d)


def test_decompose_p9_uses_generic():
    d = decompose(p9())
    assert d is not None and verify_decomposition(d)


def test_decompose_none():
    assert decompose(a6()) is None
    assert decompose_generic(claw()) is None
    assert decompose_explicit(cycle(5)) is None


def test_decompositions_exhaustive():
    for n in range(0, 6):
        for u in enumerate_graphs(n):
            holds = property2(u)
            for build in (decompose_explicit, decompose_generic):
                d = build(u)
                assert (d is not None) == holds
                if d is not None:
                    assert d.u == u
                    assert verify_decomposition(d)


def test_verify_rejects_bad_pairs():
    assert not verify_decomposition(Decomposition(path(3), empty(3), path(3)))
    assert not verify_decomposition(Decomposition(empty(3), empty(4), empty(3)))
    with pytest.raises(SizeMismatchError):
        decomposition_of(path(3), path(4))


def test_decomposition_text():
    d = decompose(cycle(4))
    lines = d.to_text().splitlines()
    assert lines[:3] == [encode_graph6(d.g), encode_graph6(d.g_prime), encode_graph6(cycle(4))]
    assert lines[3] == "verify: ok"
    assert d.to_text(verified=False).endswith("verify: FAILED\n")
