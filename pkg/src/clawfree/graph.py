"""
Graph Core
==========

Simple undirected graphs on the vertices 0..n-1, stored as one Python int
per vertex (bit y of ``rows[x]`` is set iff xy is an edge). Values are
immutable and hashable, so they can be shared between worker processes
and used as dictionary keys.

Usage:
    >>> from clawfree.graph import p9, complement, boolean_sum, cycle
    >>> g = p9()
    >>> g.edge_count
    18
    >>> complement(complement(g)) == g
    True
    >>> boolean_sum(cycle(5), cycle(5)).edge_count
    0

Vertex pairs are ordered colexicographically (01, 02, 12, 03, 13, 23, ...).
That order is shared by graph6 adjacency bits, the enumeration bitmask
(``Graph.edge_mask``) and the incidence-matrix column vector of a graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .stability import stable, beta

MAX_VERTICES = 2048
MAX_ENUMERATION_N = 8


class SizeMismatchError(ValueError):
    """Two graphs that must share a vertex set have different orders."""


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 0 or n > MAX_VERTICES:
        raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n!r}")


def check_same_order(g: "Graph", h: "Graph") -> None:
    if g.n != h.n:
        raise SizeMismatchError(f"graphs have {g.n} and {h.n} vertices")


# ── Types ────────────────────────────────────────────────────────────

@dataclass(frozen=True, order=True)
class VertexPair:
    """Canonical unordered pair of distinct vertices, ``lo < hi``."""
    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo < self.hi:
            raise ValueError(f"invalid vertex pair ({self.lo},{self.hi})")

    @classmethod
    def of(cls, x: int, y: int) -> "VertexPair":
        return cls(x, y) if x < y else cls(y, x)

    def other(self, x: int) -> int:
        """The endpoint that is not ``x``."""
        if x == self.lo:
            return self.hi
        if x == self.hi:
            return self.lo
        raise ValueError(f"{x} is not an endpoint of {self}")

    def shared(self, other: "VertexPair") -> Optional[int]:
        """The single common endpoint, or None when disjoint or equal."""
        common = {self.lo, self.hi} & {other.lo, other.hi}
        return common.pop() if len(common) == 1 else None

    def __str__(self) -> str:
        return f"({self.lo},{self.hi})"


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph with bit-packed adjacency rows.

    Attributes:
        n: Number of vertices (0 <= n <= 2048)
        rows: ``rows[x]`` is the neighbourhood of x as a bitmask

    Build graphs with the constructors of this module (``from_edges``,
    ``from_rows``, ``graph_from_mask``, the named graphs); the dataclass
    constructor itself only checks the row count.
    """
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks, checking symmetry and loops."""
        n = len(rows)
        _check_order(n)
        full = (1 << n) - 1
        for x, row in enumerate(rows):
            if row & ~full or row < 0:
                raise ValueError(f"row {x} references vertices outside 0..{n - 1}")
            if (row >> x) & 1:
                raise ValueError(f"loop at vertex {x}")
            for y in _bits(row):
                if not (rows[y] >> x) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({x},{y})")
        return cls(n, tuple(rows))

    # ── Queries ──────────────────────────────────────────────────

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, x: int, y: int) -> bool:
        return bool((self.rows[x] >> y) & 1)

    def degree(self, x: int) -> int:
        return self.rows[x].bit_count()

    def neighbors(self, x: int) -> List[int]:
        return list(_bits(self.rows[x]))

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as (lo, hi), in lexicographic order."""
        return [(x, y) for x, row in enumerate(self.rows) for y in _bits(row >> (x + 1), x + 1)]

    @property
    def edge_mask(self) -> int:
        """Edge set as a bitmask over vertex pairs in colex order."""
        mask = 0
        for j in range(1, self.n):
            base = j * (j - 1) // 2
            low = self.rows[j] & ((1 << j) - 1)
            mask |= low << base
        return mask

    def is_triangle_free(self) -> bool:
        rows = self.rows
        return all(rows[x] & rows[y] == 0 for x, y in self.edges())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class LabeledGraph:
    """
    A graph whose vertices carry vertex pairs of an originating graph.

    Used for edge-graphs S(U) and line graphs, where vertex i of ``base``
    stands for the edge ``labels[i]`` of the origin.
    """
    base: Graph
    labels: Tuple[VertexPair, ...]

    def __post_init__(self):
        if len(self.labels) != self.base.n:
            raise ValueError(f"{len(self.labels)} labels for {self.base.n} vertices")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be pairwise distinct")

    @cached_property
    def index(self) -> dict:
        """label -> vertex index"""
        return {label: i for i, label in enumerate(self.labels)}

    def vertex_of(self, x: int, y: int) -> int:
        return self.index[VertexPair.of(x, y)]

    @property
    def n(self) -> int:
        return self.base.n


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components, each sorted, ordered by smallest vertex."""
    parts: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.parts)

    def sizes(self) -> List[int]:
        return [len(p) for p in self.parts]


class ComponentKind(str, Enum):
    PATH = "Path"
    CYCLE = "Cycle"
    OTHER = "Other"


@dataclass(frozen=True)
class ComponentShape:
    """Shape of one connected component: Path(k), Cycle(k) or Other(k)."""
    kind: ComponentKind
    length: int

    @property
    def is_path(self) -> bool:
        return self.kind == ComponentKind.PATH

    @property
    def is_cycle(self) -> bool:
        return self.kind == ComponentKind.CYCLE

    def __str__(self) -> str:
        return f"{self.kind.value}({self.length})"

    @classmethod
    def parse(cls, token: str) -> "ComponentShape":
        name, _, rest = token.partition("(")
        if not rest.endswith(")"):
            raise ValueError(f"malformed component tag {token!r}")
        return cls(ComponentKind(name), int(rest[:-1]))


# ── Bit helpers ──────────────────────────────────────────────────────

def _bits(mask: int, offset: int = 0) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1 + offset
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """All pairs (i, j), i < j < n, in colex order."""
    return tuple((i, j) for j in range(n) for i in range(j))


def pair_index(i: int, j: int) -> int:
    """Colex rank of the pair {i, j}."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


# ── Constructors ─────────────────────────────────────────────────────

@stable(since="0.1.0")
def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given edges.

    Raises:
        ValueError: loop or endpoint outside 0..n-1
    """
    _check_order(n)
    rows = [0] * n
    for x, y in edges:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"edge ({x},{y}) has an endpoint outside 0..{n - 1}")
        if x == y:
            raise ValueError(f"loop at vertex {x}")
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    return Graph(n, tuple(rows))


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the colex pair bitmask ``mask``."""
    pairs = vertex_pairs(n)
    if mask >> len(pairs):
        raise ValueError(f"mask has bits beyond the {len(pairs)} pairs of {n} vertices")
    rows = [0] * n
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        mask ^= low
    return Graph(n, tuple(rows))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << x) for x in range(n)))


def path(n: int) -> Graph:
    """Path x0 - x1 - ... - x(n-1)."""
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n!r}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def k3() -> Graph:
    return complete(3)


def claw() -> Graph:
    """K_{1,3}: center 0, leaves 1, 2, 3."""
    return from_edges(4, [(0, 1), (0, 2), (0, 3)])


def co_claw() -> Graph:
    """Triangle 0, 1, 2 plus the isolated vertex 3."""
    return from_edges(4, [(0, 1), (0, 2), (1, 2)])


def diamond() -> Graph:
    """K4 minus the edge 23."""
    return from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def a6() -> Graph:
    """Inner triangle 0, 1, 2; vertex 3 on 01, 4 on 12, 5 on 20."""
    return from_edges(6, [
        (0, 1), (1, 2), (2, 0),
        (3, 0), (3, 1),
        (4, 1), (4, 2),
        (5, 2), (5, 0),
    ])


def p9() -> Graph:
    """3x3 rook's graph: (i, j) -> 3i + j, adjacent iff same row or column."""
    edges = []
    for a, b in combinations(range(9), 2):
        if a // 3 == b // 3 or a % 3 == b % 3:
            edges.append((a, b))
    return from_edges(9, edges)


def paley9() -> Graph:
    """Paley graph over GF(9) = Z3[x]/(x^2 + x + 2); element a + bx -> 3a + b.

    Two elements are adjacent iff their difference is a nonzero square.
    The squares are 1, 2, 1 + 2x and 2 + x, so the labeling differs from
    ``p9()``; the two graphs agree only up to isomorphism.
    """
    def mul(u, v):
        # x^2 = 2x + 1
        bd = u[1] * v[1]
        return ((u[0] * v[0] + bd) % 3, (u[0] * v[1] + u[1] * v[0] + 2 * bd) % 3)

    elements = [(a, b) for a in range(3) for b in range(3)]
    squares = {mul(e, e) for e in elements if e != (0, 0)}
    edges = []
    for (p, u), (q, v) in combinations(enumerate(elements), 2):
        diff = ((u[0] - v[0]) % 3, (u[1] - v[1]) % 3)
        if diff in squares:
            edges.append((p, q))
    return from_edges(9, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides 0..a-1 and a..a+b-1."""
    return from_edges(a + b, [(x, y) for x in range(a) for y in range(a, a + b)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the vertices of each graph are shifted after the previous ones."""
    rows: List[int] = []
    for g in graphs:
        shift = len(rows)
        rows.extend(row << shift for row in g.rows)
    return Graph(len(rows), tuple(rows))


@beta(note="helper for the line-graph recognition oracle")
def line_graph(r: Graph) -> LabeledGraph:
    """L(R): one vertex per edge of R (lexicographic), adjacent iff they share an endpoint."""
    labels = tuple(VertexPair(x, y) for x, y in r.edges())
    incident: List[List[int]] = [[] for _ in range(r.n)]
    for i, e in enumerate(labels):
        incident[e.lo].append(i)
        incident[e.hi].append(i)
    rows = [0] * len(labels)
    for around in incident:
        for i, j in combinations(around, 2):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return LabeledGraph(Graph(len(labels), tuple(rows)), labels)


# ── Operations ───────────────────────────────────────────────────────

@stable(since="0.1.0")
def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(~row & full & ~(1 << x) for x, row in enumerate(g.rows)))


@stable(since="0.1.0")
def boolean_sum(g: Graph, h: Graph) -> Graph:
    """Graph whose edge set is E(g) symmetric-difference E(h).

    Raises:
        SizeMismatchError: if the graphs have different orders
    """
    check_same_order(g, h)
    return Graph(g.n, tuple(a ^ b for a, b in zip(g.rows, h.rows)))


@stable(since="0.1.0")
def induced(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """Subgraph induced on ``vertices``, relabeled 0..k-1 in increasing order.

    Returns:
        (subgraph, mapping) where ``mapping[new] = old``

    Raises:
        ValueError: vertex outside 0..n-1
    """
    chosen = tuple(sorted(set(vertices)))
    for v in chosen:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise ValueError(f"vertex {v!r} outside 0..{g.n - 1}")
    return Graph(len(chosen), induced_rows(g, chosen)), chosen


def induced_rows(g: Graph, chosen: Sequence[int]) -> Tuple[int, ...]:
    """Adjacency rows of the subgraph induced on ``chosen`` (no validation)."""
    rows = []
    for v in chosen:
        row = g.rows[v]
        new = 0
        for i, w in enumerate(chosen):
            if (row >> w) & 1:
                new |= 1 << i
        rows.append(new)
    return tuple(rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex permutation x -> perm[x]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError(f"not a permutation of 0..{g.n - 1}: {list(perm)!r}")
    return from_edges(g.n, [(perm[x], perm[y]) for x, y in g.edges()])


def _component_mask(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.rows[v]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


@stable(since="0.1.0")
def connected_components(g: Graph) -> ComponentPartition:
    remaining = g.vertex_mask
    parts = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component_mask(g, start, g.vertex_mask)
        parts.append(tuple(_bits(comp)))
        remaining &= ~comp
    return ComponentPartition(tuple(parts))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or _component_mask(g, 0, g.vertex_mask) == g.vertex_mask


@stable(since="0.1.0")
def classify_component(g: Graph, vertices: Iterable[int]) -> ComponentShape:
    """Path(k), Cycle(k) or Other(k) for the connected component ``vertices``.

    An isolated vertex is Path(1).

    Raises:
        ValueError: ``vertices`` is not a connected component of g
    """
    comp = mask_of(vertices)
    if comp == 0 or comp & ~g.vertex_mask:
        raise ValueError("component must be a nonempty set of vertices of the graph")
    start = (comp & -comp).bit_length() - 1
    if _component_mask(g, start, comp) != comp:
        raise ValueError("vertex set is not connected")
    k = comp.bit_count()
    degrees = []
    for v in _bits(comp):
        if g.rows[v] & ~comp:
            raise ValueError(f"vertex {v} has a neighbour outside the vertex set")
        degrees.append(g.rows[v].bit_count())
    edges = sum(degrees) // 2
    if max(degrees) <= 2 and edges == k - 1:
        return ComponentShape(ComponentKind.PATH, k)
    if k >= 3 and edges == k and all(d == 2 for d in degrees):
        return ComponentShape(ComponentKind.CYCLE, k)
    return ComponentShape(ComponentKind.OTHER, k)


def component_shapes(g: Graph) -> List[ComponentShape]:
    return [classify_component(g, part) for part in connected_components(g)]


def component_order(g: Graph, vertices: Sequence[int]) -> List[int]:
    """Vertices of a path or cycle component listed along the path/cycle.

    Paths start at their smaller endpoint; cycles start at their smallest
    vertex and continue to its smaller neighbour.
    """
    comp = mask_of(vertices)
    ends = [v for v in _bits(comp) if g.rows[v].bit_count() <= 1]
    start = ends[0] if ends else (comp & -comp).bit_length() - 1
    order = [start]
    seen = 1 << start
    while True:
        step = g.rows[order[-1]] & ~seen
        if not step:
            return order
        nxt = (step & -step).bit_length() - 1
        order.append(nxt)
        seen |= 1 << nxt


@stable(since="0.1.0")
def two_coloring(g: Graph) -> Optional[Tuple[int, ...]]:
    """A proper 2-coloring, or None if g has an odd cycle.

    Each component's smallest vertex gets color 0.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _bits(g.rows[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


@stable(since="0.1.0")
def enumerate_graphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """All graphs on n labeled vertices, in increasing edge-bitmask order.

    ``start``/``stop`` select the half-open mask range [start, stop) so the
    stream can be split into disjoint shards.

    Raises:
        ValueError: n outside 0..8 or a bad range
    """
    if not isinstance(n, int) or not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUMERATION_N}, got {n!r}")
    total = graph_count(n)
    stop = total if stop is None else stop
    if not 0 <= start <= stop <= total:
        raise ValueError(f"mask range [{start}, {stop}) outside [0, {total})")
    for mask in range(start, stop):
        yield graph_from_mask(n, mask)


def graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)
