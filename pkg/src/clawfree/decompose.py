"""
Boolean-Sum Decompositions
==========================

For a graph U the following are equivalent:

    (1) U = G + G' for two graphs G, G' with the same 3-homogeneous subsets;
    (2) S(U) and S(co-U) are bipartite;
    (3) U is an induced subgraph of P9, or the components of U (or of
        co-U) are even cycles or paths.

This module decides (2) and (3) and builds witnesses for (1) two ways:

    decompose_generic   2-color S(U) and S(co-U); E(G) = A1 ∪ B1 and
                        E(G') = A2 ∪ B1 for color classes A1, A2 of S(U)
                        and B1 of S(co-U).
    decompose_explicit  per component: a path on k vertices gives
                        (M_k, M'_k), an even cycle on k vertices gives
                        (M_k, M''_k); across components, G and G' both join
                        even-indexed to even-indexed and odd to odd vertices.

Usage:
    >>> from clawfree.graph import cycle, p9
    >>> from clawfree.decompose import decompose, verify_decomposition, property2
    >>> property2(p9())
    True
    >>> verify_decomposition(decompose(cycle(6)))
    True
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Optional, Tuple

from .edge_graph import MAX_EDGE_GRAPH_SOURCE, edge_graph
from .embedding import find_induced_embedding
from .formats import encode_graph6
from .graph import (
    ComponentShape,
    Graph,
    boolean_sum,
    check_same_order,
    complement,
    component_order,
    component_shapes,
    connected_components,
    from_edges,
    p9,
    two_coloring,
)
from .homogeneous import same_3_homogeneous
from .stability import stable, beta

logger = logging.getLogger(__name__)

_P9 = p9()


@dataclass(frozen=True)
class Decomposition:
    """U = G + G' with G, G' sharing their 3-homogeneous subsets."""
    g: Graph
    g_prime: Graph
    u: Graph

    def to_text(self, verified: Optional[bool] = None) -> str:
        """Three graph6 lines (G, G', U) and a verification flag."""
        ok = verify_decomposition(self) if verified is None else verified
        lines = [encode_graph6(self.g), encode_graph6(self.g_prime), encode_graph6(self.u)]
        lines.append("verify: ok" if ok else "verify: FAILED")
        return "\n".join(lines) + "\n"


@stable(since="0.1.0")
def verify_decomposition(d: Decomposition) -> bool:
    """G + G' = U and H3(G) = H3(G')."""
    if not d.g.n == d.g_prime.n == d.u.n:
        return False
    return boolean_sum(d.g, d.g_prime) == d.u and same_3_homogeneous(d.g, d.g_prime)


# ── Properties (2) and (3) ───────────────────────────────────────────

@stable(since="0.1.0")
def property2(u: Graph) -> bool:
    """S(U) and S(co-U) are both bipartite.

    Raises:
        ValueError: U has more than 64 vertices
    """
    if u.n > MAX_EDGE_GRAPH_SOURCE:
        raise ValueError(f"property (2) is limited to {MAX_EDGE_GRAPH_SOURCE} vertices, got {u.n}")
    return (two_coloring(edge_graph(u).base) is not None
            and two_coloring(edge_graph(complement(u)).base) is not None)


class Property3Case(str, Enum):
    COMPONENTS = "components"
    COMPLEMENT_COMPONENTS = "complement-components"
    P9_INDUCED = "p9-induced"
    NONE = "none"


@dataclass(frozen=True)
class Property3Result:
    """Which disjunct of property (3) holds, with its witness."""
    case: Property3Case
    components: Optional[Tuple[ComponentShape, ...]] = None
    embedding: Optional[Tuple[int, ...]] = None

    @property
    def holds(self) -> bool:
        return self.case != Property3Case.NONE

    def __bool__(self) -> bool:
        return self.holds


def _even_cycles_or_paths(shapes) -> bool:
    return all(s.is_path or (s.is_cycle and s.length % 2 == 0) for s in shapes)


@stable(since="0.1.0")
def property3(u: Graph) -> Property3Result:
    """First disjunct that holds: components of U, components of co-U, induced in P9."""
    shapes = tuple(component_shapes(u))
    if _even_cycles_or_paths(shapes):
        return Property3Result(Property3Case.COMPONENTS, components=shapes)
    shapes = tuple(component_shapes(complement(u)))
    if _even_cycles_or_paths(shapes):
        return Property3Result(Property3Case.COMPLEMENT_COMPONENTS, components=shapes)
    if u.n <= 9:
        emb = find_induced_embedding(u, _P9)
        if emb is not None:
            return Property3Result(Property3Case.P9_INDUCED, embedding=emb)
    return Property3Result(Property3Case.NONE)


# ── M_n, M'_n, M''_n ─────────────────────────────────────────────────

def _r_edges(n: int) -> List[Tuple[int, int]]:
    """All pairs within the even-indexed vertices and within the odd-indexed ones."""
    return [(i, j) for i, j in combinations(range(n), 2) if (i - j) % 2 == 0]


def _check_m_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"M_n needs n >= 1, got {n!r}")


@stable(since="0.1.0")
def build_M(n: int) -> Graph:
    """R_n plus x_{2i} x_{2i+1}."""
    _check_m_order(n)
    return from_edges(n, _r_edges(n) + [(i, i + 1) for i in range(0, n - 1, 2)])


@stable(since="0.1.0")
def build_Mp(n: int) -> Graph:
    """R_n plus x_{2i+1} x_{2i+2}."""
    _check_m_order(n)
    return from_edges(n, _r_edges(n) + [(i, i + 1) for i in range(1, n - 1, 2)])


@stable(since="0.1.0")
def build_Mpp(n: int) -> Graph:
    """M'_n plus x_0 x_{n-1}, for even n >= 4."""
    if not isinstance(n, int) or n < 4 or n % 2:
        raise ValueError(f"M''_n needs an even n >= 4, got {n!r}")
    return from_edges(n, _r_edges(n) + [(i, i + 1) for i in range(1, n - 1, 2)] + [(0, n - 1)])


# ── Decompositions ───────────────────────────────────────────────────

def _explicit_for_components(u: Graph) -> Decomposition:
    """Components of u are even cycles or paths."""
    n = u.n
    g_rows = [0] * n
    gp_rows = [0] * n
    parity = [0] * n
    labels = [0] * n
    for c, part in enumerate(connected_components(u)):
        order = component_order(u, part)
        k = len(order)
        if sum(u.degree(v) for v in part) // 2 == k:
            local, local_p = build_M(k), build_Mpp(k)
        else:
            local, local_p = build_M(k), build_Mp(k)
        for i, v in enumerate(order):
            parity[v] = i % 2
            labels[v] = c
        for i, j in local.edges():
            g_rows[order[i]] |= 1 << order[j]
            g_rows[order[j]] |= 1 << order[i]
        for i, j in local_p.edges():
            gp_rows[order[i]] |= 1 << order[j]
            gp_rows[order[j]] |= 1 << order[i]
    for x, y in combinations(range(n), 2):
        if labels[x] != labels[y] and parity[x] == parity[y]:
            for rows in (g_rows, gp_rows):
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return Decomposition(Graph(n, tuple(g_rows)), Graph(n, tuple(gp_rows)), u)


@stable(since="0.1.0")
def decompose_explicit(u: Graph) -> Optional[Decomposition]:
    """Explicit M_n / M'_n / M''_n construction; None when property (3) fails.

    A U that is only covered by the P9 disjunct is handed to
    ``decompose_generic``.
    """
    result = property3(u)
    if result.case == Property3Case.COMPONENTS:
        return _explicit_for_components(u)
    if result.case == Property3Case.COMPLEMENT_COMPONENTS:
        inner = _explicit_for_components(complement(u))
        # co-U = H + H'  gives  U = co-H + H'
        return Decomposition(complement(inner.g), inner.g_prime, u)
    if result.case == Property3Case.P9_INDUCED:
        logger.debug("U with %d vertices is only covered by P9, using the generic construction", u.n)
        return decompose_generic(u)
    return None


@stable(since="0.1.0")
def decompose_generic(u: Graph) -> Optional[Decomposition]:
    """Color-class construction from 2-colorings of S(U) and S(co-U); None unless property (2) holds."""
    s = edge_graph(u)
    s_co = edge_graph(complement(u))
    colors = two_coloring(s.base)
    colors_co = two_coloring(s_co.base)
    if colors is None or colors_co is None:
        return None
    a1 = [p for p, c in zip(s.labels, colors) if c == 0]
    a2 = [p for p, c in zip(s.labels, colors) if c == 1]
    b1 = [p for p, c in zip(s_co.labels, colors_co) if c == 0]
    g = from_edges(u.n, [(p.lo, p.hi) for p in a1 + b1])
    g_prime = from_edges(u.n, [(p.lo, p.hi) for p in a2 + b1])
    return Decomposition(g, g_prime, u)


@beta(note="routing between the two constructions may change")
def decompose(u: Graph) -> Optional[Decomposition]:
    """Explicit construction for path/cycle cases (direct or complemented), generic otherwise."""
    return decompose_explicit(u)


def decomposition_of(g: Graph, g_prime: Graph) -> Decomposition:
    check_same_order(g, g_prime)
    return Decomposition(g, g_prime, boolean_sum(g, g_prime))
