"""
Induced Embeddings & Isomorphism
================================

Backtracking search for maps V(H) -> V(G) that preserve adjacency and
non-adjacency. Candidate sets are bitmasks: each already-mapped vertex
narrows the candidates by one AND with its image's row (or its negation).

Usage:
    >>> from clawfree.graph import cycle, p9, claw, complement
    >>> from clawfree.embedding import find_induced_embedding, are_isomorphic
    >>> find_induced_embedding(cycle(4), p9()) is not None
    True
    >>> find_induced_embedding(claw(), p9()) is None
    True
    >>> are_isomorphic(cycle(5), complement(cycle(5))) is not None
    True

Intended for pattern graphs of up to ~9 vertices and isomorphism tests
up to ~12 vertices. No canonical labeling.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Sequence, Tuple

from .graph import Graph, _bits
from .stability import stable

Mapping = Tuple[int, ...]


def _search_order(h: Graph) -> List[int]:
    """Greedy order: highest degree first, then most neighbours already placed."""
    if h.n == 0:
        return []
    remaining = set(range(h.n))
    first = max(remaining, key=lambda v: (h.degree(v), -v))
    order = [first]
    remaining.discard(first)
    placed = 1 << first
    while remaining:
        nxt = max(remaining, key=lambda v: ((h.rows[v] & placed).bit_count(), h.degree(v), -v))
        order.append(nxt)
        remaining.discard(nxt)
        placed |= 1 << nxt
    return order


def _embeddings(h: Graph, g: Graph, allowed: Sequence[int]) -> Iterator[Mapping]:
    """All adjacency-preserving injections V(h) -> V(g), ``f(u)`` drawn from ``allowed[u]``."""
    order = _search_order(h)
    image = [0] * h.n
    full = g.vertex_mask

    def extend(i: int, used: int) -> Iterator[Mapping]:
        if i == len(order):
            yield tuple(image)
            return
        u = order[i]
        cand = allowed[u] & ~used
        row_u = h.rows[u]
        for j in range(i):
            w = order[j]
            if (row_u >> w) & 1:
                cand &= g.rows[image[w]]
            else:
                cand &= ~g.rows[image[w]] & full
            if not cand:
                return
        for v in _bits(cand):
            image[u] = v
            yield from extend(i + 1, used | (1 << v))

    yield from extend(0, 0)


@stable(since="0.1.0")
def find_induced_embedding(h: Graph, g: Graph) -> Optional[Mapping]:
    """An injection f with adj_h(x,y) <=> adj_g(f(x),f(y)), or None."""
    if h.n > g.n:
        return None
    g_deg = g.degrees()
    allowed = []
    for u in range(h.n):
        du, cu = h.degree(u), h.n - 1 - h.degree(u)
        mask = 0
        for v, dv in enumerate(g_deg):
            if dv >= du and g.n - 1 - dv >= cu:
                mask |= 1 << v
        allowed.append(mask)
    return next(_embeddings(h, g, allowed), None)


def iter_induced_embeddings(h: Graph, g: Graph) -> Iterator[Mapping]:
    """Every induced embedding of h into g (no degree pruning)."""
    if h.n > g.n:
        return iter(())
    return _embeddings(h, g, [g.vertex_mask] * h.n)


def _signature(g: Graph, v: int) -> Tuple[int, Tuple[int, ...]]:
    return g.degree(v), tuple(sorted(g.degree(w) for w in _bits(g.rows[v])))


@stable(since="0.1.0")
def are_isomorphic(g: Graph, h: Graph) -> Optional[Mapping]:
    """A bijection f: V(g) -> V(h) preserving adjacency both ways, or None."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    h_sig = [_signature(h, v) for v in range(h.n)]
    allowed = []
    for u in range(g.n):
        sig = _signature(g, u)
        mask = 0
        for v, other in enumerate(h_sig):
            if other == sig:
                mask |= 1 << v
        if not mask:
            return None
        allowed.append(mask)
    return next(_embeddings(g, h, allowed), None)


def is_induced_embedding(h: Graph, g: Graph, f: Sequence[int]) -> bool:
    """Re-check a claimed embedding edge by edge."""
    if len(f) != h.n or len(set(f)) != h.n:
        return False
    if any(not 0 <= v < g.n for v in f):
        return False
    for x in range(h.n):
        for y in range(x + 1, h.n):
            if h.adjacent(x, y) != g.adjacent(f[x], f[y]):
                return False
    return True


def is_isomorphism(g: Graph, h: Graph, f: Sequence[int]) -> bool:
    return g.n == h.n and is_induced_embedding(g, h, f)

