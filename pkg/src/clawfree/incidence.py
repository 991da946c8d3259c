"""
Incidence Matrices
==================

W_tk is the 0/1 matrix with rows indexed by the t-subsets and columns by
the k-subsets of {0..v-1}; entry (T, K) is 1 iff T ⊆ K. Subsets are
ranked colexicographically, so the 2-subset column vector of a graph U is
exactly ``U.edge_mask``.

Two computations are exact:

    gf2_kernel      right kernel over Z/2Z (bit-packed rows, Gauss-Jordan)
    rational_rank   rank over Q by fraction-free (Bareiss) elimination
    inclusion_rank  the same, on the Gram matrix of the shorter side

Usage:
    >>> from clawfree.incidence import build_W, gf2_kernel, rational_rank
    >>> len(gf2_kernel(build_W(2, 4, 6).transpose()))
    1
    >>> rational_rank(build_W(2, 3, 6).to_rational())
    15
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import comb, lcm
from typing import Iterator, List, Sequence, Tuple

from .decompose import property2
from .embedding import are_isomorphic
from .graph import (
    Graph,
    SizeMismatchError,
    boolean_sum,
    check_same_order,
    complement,
    graph_from_mask,
    induced_rows,
    is_connected,
    two_coloring,
)
from .stability import stable, beta

logger = logging.getLogger(__name__)

MAX_INCIDENCE_V = 16
MAX_WILSON_V = 8
MAX_HYPOMORPHY_N = 10
MAX_RATIONAL_SIDE = 500


# ── Subset ranking ───────────────────────────────────────────────────

@dataclass(frozen=True)
class SubsetIndex:
    """Colex bijection between k-subsets of {0..v-1} and 0..C(v,k)-1."""
    v: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.v:
            raise ValueError(f"need 0 <= k <= v, got k={self.k}, v={self.v}")

    @property
    def size(self) -> int:
        return comb(self.v, self.k)

    def rank(self, subset: Sequence[int]) -> int:
        items = sorted(subset)
        if len(items) != self.k or len(set(items)) != self.k:
            raise ValueError(f"expected {self.k} distinct elements, got {subset!r}")
        if items and not 0 <= items[0] <= items[-1] < self.v:
            raise ValueError(f"subset {subset!r} is not inside 0..{self.v - 1}")
        return sum(comb(x, i + 1) for i, x in enumerate(items))

    def unrank(self, r: int) -> Tuple[int, ...]:
        if not 0 <= r < self.size:
            raise ValueError(f"rank {r} outside 0..{self.size - 1}")
        out = []
        x = self.v - 1
        for i in range(self.k, 0, -1):
            while comb(x, i) > r:
                x -= 1
            out.append(x)
            r -= comb(x, i)
            x -= 1
        return tuple(reversed(out))

    def subsets(self) -> Iterator[Tuple[int, ...]]:
        """All k-subsets in rank order."""
        return (self.unrank(r) for r in range(self.size))


# ── Matrices ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class BinMatrix:
    """Matrix over Z/2Z; ``bits[r]`` holds row r with column c at bit c."""
    rows: int
    cols: int
    bits: Tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError(f"{len(self.bits)} rows stored, {self.rows} declared")
        if any(row >> self.cols for row in self.bits):
            raise ValueError(f"row has bits beyond column {self.cols - 1}")

    def entry(self, r: int, c: int) -> int:
        return (self.bits[r] >> c) & 1

    def transpose(self) -> "BinMatrix":
        out = [0] * self.cols
        for r, row in enumerate(self.bits):
            while row:
                low = row & -row
                out[low.bit_length() - 1] |= 1 << r
                row ^= low
        return BinMatrix(self.cols, self.rows, tuple(out))

    def apply(self, vector: int) -> int:
        """M·x over Z/2Z, x and the result as bitmasks."""
        out = 0
        for r, row in enumerate(self.bits):
            if (row & vector).bit_count() & 1:
                out |= 1 << r
        return out

    def gram(self) -> "RatMatrix":
        """M·M^T over Q; it has the same rational rank as M."""
        return RatMatrix(self.rows, self.rows, tuple(
            tuple(Fraction((a & b).bit_count()) for b in self.bits) for a in self.bits
        ))

    def to_rational(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(
            tuple(Fraction((row >> c) & 1) for c in range(self.cols)) for row in self.bits
        ))

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str((row >> c) & 1) for c in range(self.cols)) for row in self.bits]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RatMatrix:
    """Matrix of exact rationals, stored row by row."""
    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        """Accepts ints, Fractions or "p/q" strings."""
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"


@stable(since="0.1.0")
def build_W(t: int, k: int, v: int) -> BinMatrix:
    """Inclusion matrix of t-subsets (rows) versus k-subsets (columns).

    Raises:
        ValueError: unless 0 <= t <= k <= v <= 16
    """
    if not all(isinstance(x, int) for x in (t, k, v)) or not 0 <= t <= k <= v <= MAX_INCIDENCE_V:
        raise ValueError(f"need 0 <= t <= k <= v <= {MAX_INCIDENCE_V}, got t={t}, k={k}, v={v}")
    rows_index = SubsetIndex(v, t)
    cols_index = SubsetIndex(v, k)
    bits = [0] * rows_index.size
    for c, subset in enumerate(cols_index.subsets()):
        for inner in combinations(subset, t):
            bits[rows_index.rank(inner)] |= 1 << c
    return BinMatrix(rows_index.size, cols_index.size, tuple(bits))


# ── GF(2) elimination ────────────────────────────────────────────────

def _gf2_reduce(m: BinMatrix) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = list(m.bits)
    pivots: List[int] = []
    row_idx = 0
    for col in range(m.cols):
        pivot = next((r for r in range(row_idx, len(work)) if (work[r] >> col) & 1), None)
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and (work[r] >> col) & 1:
                work[r] ^= work[row_idx]
        pivots.append(col)
        row_idx += 1
        if row_idx == len(work):
            break
    return work[:row_idx], pivots


@stable(since="0.1.0")
def gf2_rank(m: BinMatrix) -> int:
    return len(_gf2_reduce(m)[1])


@stable(since="0.1.0")
def gf2_kernel(m: BinMatrix) -> List[int]:
    """Basis of {x : Mx = 0} over Z/2Z, one bitmask per vector."""
    reduced, pivots = _gf2_reduce(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, col in zip(reduced, pivots):
            if (row >> free) & 1:
                vec |= 1 << col
        basis.append(vec)
    return basis


def kernel_span(basis: Sequence[int]) -> Iterator[int]:
    """All 2^len(basis) vectors of the span."""
    for choice in range(1 << len(basis)):
        vec = 0
        for i, b in enumerate(basis):
            if (choice >> i) & 1:
                vec ^= b
        yield vec


# ── Rational rank ────────────────────────────────────────────────────

@stable(since="0.1.0")
def rational_rank(m: RatMatrix) -> int:
    """Exact rank over Q by fraction-free elimination on integer rows."""
    work = []
    for row in m.entries:
        scale = reduce(lcm, (x.denominator for x in row), 1)
        work.append([int(x * scale) for x in row])

    rank = 0
    prev = 1
    for col in range(m.cols):
        pivot = next((r for r in range(rank, m.rows) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        p = work[rank][col]
        top = work[rank]
        for r in range(rank + 1, m.rows):
            row = work[r]
            lead = row[col]
            for c in range(col + 1, m.cols):
                # exact: every entry is a minor of the input
                row[c] = (p * row[c] - lead * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == m.rows:
            break
    return rank


@stable(since="0.4.0")
def inclusion_rank(w: BinMatrix) -> int:
    """Rank of a 0/1 matrix over Q, taken on the Gram matrix of its shorter side.

    Raises:
        ValueError: both sides are longer than MAX_RATIONAL_SIDE
    """
    short = w if w.rows <= w.cols else w.transpose()
    if short.rows > MAX_RATIONAL_SIDE:
        raise ValueError(
            f"rational rank needs a side of at most {MAX_RATIONAL_SIDE}, "
            f"got {w.rows} x {w.cols}")
    return rational_rank(short.gram())


# ── Graphs as column vectors ─────────────────────────────────────────

@stable(since="0.1.0")
def graph_column_vector(u: Graph, index: SubsetIndex) -> int:
    """M_U over the 2-subsets of ``index``: bit r set iff the r-th pair is an edge.

    Raises:
        SizeMismatchError: index is not the 2-subset index of U's vertex set
    """
    if index.k != 2 or index.v != u.n:
        raise SizeMismatchError(f"pair index over {index.v} points ({index.k}-subsets) does not fit U with {u.n} vertices")
    return u.edge_mask


def is_complete_bipartite(g: Graph) -> bool:
    """K_{A,B} with A ∪ B = V; the edgeless graph counts (one side empty)."""
    if g.edge_count == 0:
        return True
    colors = two_coloring(g)
    if colors is None or not is_connected(g):
        return False
    a = colors.count(0)
    return g.edge_count == a * (g.n - a)


@dataclass(frozen=True)
class KernelMember:
    graph: Graph
    complete_bipartite: bool
    co_complete_bipartite: bool
    property2: bool

    @property
    def explained(self) -> bool:
        return self.complete_bipartite or self.co_complete_bipartite


@dataclass(frozen=True)
class WilsonReport:
    v: int
    k: int
    dimension: int
    members: Tuple[KernelMember, ...]

    @property
    def all_explained(self) -> bool:
        return all(m.explained for m in self.members)


def _check_wilson(v: int, k: int) -> None:
    if not 2 <= k <= v - 2 or v > MAX_WILSON_V:
        raise ValueError(f"need 2 <= k <= v - 2 and v <= {MAX_WILSON_V}, got v={v}, k={k}")


@stable(since="0.1.0")
def wilson_kernel(v: int, k: int) -> List[int]:
    """Basis of the GF(2) kernel of the transpose of W_2k."""
    return gf2_kernel(build_W(2, k, v).transpose())


@beta(note="report fields may grow")
def wilson_kernel_members(v: int, k: int) -> WilsonReport:
    """Decode every kernel vector of W_2k^T as a graph and classify it.

    Raises:
        ValueError: unless k = 1 (mod 4), 2 <= k <= v - 2 and v <= 8
    """
    _check_wilson(v, k)
    if k % 4 != 1:
        raise ValueError(f"member classification needs k = 1 (mod 4), got k={k}")
    basis = wilson_kernel(v, k)
    logger.debug("W_2k^T kernel at v=%d k=%d has dimension %d", v, k, len(basis))
    members = []
    for vec in kernel_span(basis):
        g = graph_from_mask(v, vec)
        members.append(KernelMember(
            graph=g,
            complete_bipartite=is_complete_bipartite(g),
            co_complete_bipartite=is_complete_bipartite(complement(g)),
            property2=property2(g),
        ))
    return WilsonReport(v, k, len(basis), tuple(members))


@stable(since="0.1.0")
def edge_parity_agrees(g: Graph, h: Graph, k: int) -> bool:
    """Every k-subset spans edge counts of equal parity in g and h."""
    u = boolean_sum(g, h)
    if not 0 <= k <= u.n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={u.n}")
    rows = u.rows
    for subset in combinations(range(u.n), k):
        mask = 0
        for x in subset:
            mask |= 1 << x
        if (sum((rows[x] & mask).bit_count() for x in subset) // 2) & 1:
            return False
    return True


# ── Hypomorphy up to complementation ────────────────────────────────

@stable(since="0.1.0")
def iso_up_to_complementation(g: Graph, h: Graph) -> bool:
    check_same_order(g, h)
    return are_isomorphic(g, h) is not None or are_isomorphic(complement(g), h) is not None


@stable(since="0.1.0")
def is_k_hypomorphic_up_to_comp(g: Graph, h: Graph, k: int) -> bool:
    """Every k-subset induces subgraphs of g and h isomorphic up to complementation.

    Raises:
        SizeMismatchError: different orders
        ValueError: unless 1 <= k <= n <= 10
    """
    check_same_order(g, h)
    if not 1 <= k <= g.n <= MAX_HYPOMORPHY_N:
        raise ValueError(f"need 1 <= k <= n <= {MAX_HYPOMORPHY_N}, got k={k}, n={g.n}")
    for subset in combinations(range(g.n), k):
        a = Graph(k, induced_rows(g, subset))
        b = Graph(k, induced_rows(h, subset))
        if a != b and not iso_up_to_complementation(a, b):
            return False
    return True
