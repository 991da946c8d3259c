"""
3-Homogeneous Subsets
=====================

H3(G) collects the vertex triples on which G induces a triangle or an
independent set. Two graphs G, G' on the same vertices with U = G + G'
(Boolean sum) have the same H3 exactly when

    (b) for all distinct x, y, z:  U(xy) = U(xz) != U(yz)  implies  G(xy) != G(xz)

and exactly when

    (c) E(U) ∩ E(G), E(U) \\ E(G) are independent in S(U), and
        E(co-U) ∩ E(G), E(co-U) \\ E(G) are independent in S(co-U).

Usage:
    >>> from clawfree.graph import k3, cycle, p9
    >>> from clawfree.homogeneous import homogeneous_triples
    >>> homogeneous_triples(k3()).members
    frozenset({(0, 1, 2)})
    >>> len(homogeneous_triples(p9()))
    12
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterator, List, Tuple

from .edge_graph import edge_graph
from .graph import Graph, _bits, check_same_order, complement
from .stability import stable, beta

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class TripleSet:
    """A set of 3-element vertex subsets of {0..n-1}, each stored ascending."""
    n: int
    members: FrozenSet[Triple]

    def __post_init__(self):
        for t in self.members:
            if len(t) != 3 or not 0 <= t[0] < t[1] < t[2] < self.n:
                raise ValueError(f"invalid triple {t} for n={self.n}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self.members))

    def __contains__(self, triple) -> bool:
        return tuple(sorted(triple)) in self.members

    def symmetric_difference(self, other: "TripleSet") -> List[Triple]:
        return sorted(self.members ^ other.members)

    def to_text(self) -> str:
        """One "a b c" line per triple, lexicographic."""
        return "".join(f"{a} {b} {c}\n" for a, b, c in self)

    @classmethod
    def from_text(cls, n: int, text: str) -> "TripleSet":
        members = set()
        for line in text.splitlines():
            if line.strip():
                a, b, c = sorted(int(tok) for tok in line.split())
                members.add((a, b, c))
        return cls(n, frozenset(members))


@stable(since="0.1.0")
def homogeneous_triples(g: Graph) -> TripleSet:
    """Triples inducing K3 or an independent set."""
    rows = g.rows
    full = g.vertex_mask
    found = []
    for a, b in combinations(range(g.n), 2):
        above = full & ~((1 << (b + 1)) - 1)
        if (rows[a] >> b) & 1:
            common = rows[a] & rows[b] & above
        else:
            common = ~(rows[a] | rows[b]) & above
        found.extend((a, b, c) for c in _bits(common))
    return TripleSet(g.n, frozenset(found))


@stable(since="0.1.0")
def same_3_homogeneous(g: Graph, h: Graph) -> bool:
    check_same_order(g, h)
    return homogeneous_triples(g).members == homogeneous_triples(h).members


@stable(since="0.1.0")
def lemma3_condition_b(g: Graph, u: Graph) -> bool:
    """U(xy) = U(xz) != U(yz) implies G(xy) != G(xz), for every apex x of every triple."""
    check_same_order(g, u)
    for t in combinations(range(g.n), 3):
        for x, y, z in ((t[0], t[1], t[2]), (t[1], t[0], t[2]), (t[2], t[0], t[1])):
            uxy, uxz = u.adjacent(x, y), u.adjacent(x, z)
            if uxy == uxz != u.adjacent(y, z) and g.adjacent(x, y) == g.adjacent(x, z):
                return False
    return True


def splits_independently(s_graph, g: Graph) -> bool:
    """The labels of ``s_graph`` that are edges of g, and those that are not, are both independent."""
    labels = s_graph.labels
    for a, b in s_graph.base.edges():
        pa, pb = labels[a], labels[b]
        if g.adjacent(pa.lo, pa.hi) == g.adjacent(pb.lo, pb.hi):
            return False
    return True


@stable(since="0.1.0")
def lemma3_condition_c(g: Graph, u: Graph) -> bool:
    """A1/A2 split S(U) and B1/B2 split S(co-U) into independent sets."""
    check_same_order(g, u)
    return splits_independently(edge_graph(u), g) and splits_independently(edge_graph(complement(u)), g)


@beta(note="diff output format may change")
def triple_diff(g: Graph, h: Graph) -> Tuple[List[Triple], List[Triple]]:
    """(only in H3(g), only in H3(h))"""
    check_same_order(g, h)
    a, b = homogeneous_triples(g).members, homogeneous_triples(h).members
    return sorted(a - b), sorted(b - a)
