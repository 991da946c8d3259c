"""
Edge-Graph S(U)
===============

S(U) has one vertex per edge of U. Two edges xy and xz are adjacent in
S(U) when y != z and yz is not an edge of U, so S(U) is a spanning
subgraph of the line graph L(U). A claw of U with center x and leaves
a, b, c is exactly a triangle xa, xb, xc of S(U); hence U is claw-free
iff S(U) is triangle-free.

Usage:
    >>> from clawfree.graph import claw, cycle, a6
    >>> from clawfree.edge_graph import edge_graph
    >>> edge_graph(claw()).base.edge_count
    3
    >>> [str(p) for p in edge_graph(cycle(4)).labels]
    ['(0,1)', '(0,3)', '(1,2)', '(2,3)']
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence, Tuple

from .graph import Graph, LabeledGraph, VertexPair, _bits, complement
from .stability import stable
from .structure import contains_claw

MAX_EDGE_GRAPH_SOURCE = 64


@stable(since="0.1.0")
def edge_graph(u: Graph) -> LabeledGraph:
    """S(U), vertices ordered by their (lo, hi) labels.

    Raises:
        ValueError: U has more than 64 vertices
    """
    if u.n > MAX_EDGE_GRAPH_SOURCE:
        raise ValueError(f"edge-graph source limited to {MAX_EDGE_GRAPH_SOURCE} vertices, got {u.n}")
    labels = tuple(VertexPair(x, y) for x, y in u.edges())
    index = {(p.lo, p.hi): i for i, p in enumerate(labels)}
    rows = [0] * len(labels)
    for x in range(u.n):
        around = list(_bits(u.rows[x]))
        for y, z in combinations(around, 2):
            if u.adjacent(y, z):
                continue
            a = index[(x, y) if x < y else (y, x)]
            b = index[(x, z) if x < z else (z, x)]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return LabeledGraph(Graph(len(labels), tuple(rows)), labels)


@stable(since="0.1.0")
def star_equivalence_check(u: Graph) -> bool:
    """U claw-free <=> S(U) triangle-free; always True for a correct implementation."""
    return (contains_claw(u) is None) == edge_graph(u).base.is_triangle_free()


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[x] != coloring[y] for x, y in g.edges())


def complement_coloring(u: Graph, coloring: Sequence[int]) -> Tuple[LabeledGraph, Tuple[int, ...]]:
    """S(co-U) with the coloring c'({x,y}) = c(x) + c(y) mod 2.

    ``coloring`` is a proper 2-coloring of U; the returned coloring is then
    proper on S(co-U).
    """
    if not is_proper_coloring(u, coloring):
        raise ValueError("coloring is not a proper 2-coloring of U")
    s = edge_graph(complement(u))
    return s, tuple((coloring[p.lo] + coloring[p.hi]) % 2 for p in s.labels)


def claim_holds(u: Graph, coloring: Optional[Sequence[int]]) -> bool:
    """For a bipartite U, the derived coloring is proper on S(co-U)."""
    if coloring is None:
        return True
    s, derived = complement_coloring(u, coloring)
    return is_proper_coloring(s.base, derived)


def spans_line_graph(u: Graph, s: LabeledGraph) -> bool:
    """Every edge of S(U) joins two edges of U sharing exactly one endpoint."""
    if s.n != u.edge_count:
        return False
    for a, b in s.base.edges():
        if s.labels[a].shared(s.labels[b]) is None:
            return False
    return True

