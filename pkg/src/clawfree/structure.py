"""
Forbidden Induced Subgraphs & the Claw/Co-claw Classifier
=========================================================

Detectors for claws, co-claws and diamonds, and a certifying classifier
for Forb{claw, co-claw}. The class consists of A6, the induced
subgraphs of P9, the graphs whose components are paths or cycles of
length at least 4, and the complements of all of these. Every positive
answer carries a witness that ``Certificate.verify`` re-checks edge by
edge.

Usage:
    >>> from clawfree.graph import p9, claw, complement, a6
    >>> from clawfree.structure import classify, CertificateKind
    >>> classify(p9()).kind
    <CertificateKind.P9_INDUCED: 'P9Induced'>
    >>> classify(claw()).to_text()
    'NotInClass claw 0 1 2 3'
    >>> cert = classify(complement(a6()))
    >>> cert.kind, cert.verify(complement(a6()))
    (<CertificateKind.IS_CO_A6: 'IsCoA6'>, True)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .embedding import are_isomorphic, is_induced_embedding, is_isomorphism, find_induced_embedding
from .graph import (
    ComponentShape,
    Graph,
    a6,
    complement,
    component_shapes,
    connected_components,
    from_edges,
    induced,
    is_connected,
    line_graph,
    p9,
    vertex_pairs,
)
from .stability import stable, beta

logger = logging.getLogger(__name__)

_A6 = a6()
_CO_A6 = complement(_A6)
_P9 = p9()


# ── Detectors ────────────────────────────────────────────────────────

class Pattern(str, Enum):
    CLAW = "claw"
    CO_CLAW = "co-claw"
    DIAMOND = "diamond"


@dataclass(frozen=True)
class Witness:
    """Four vertices inducing ``pattern``.

    Vertex order: claw = center, then leaves; co-claw = isolated vertex,
    then triangle; diamond = the two degree-3 vertices, then the others.
    """
    pattern: Pattern
    vertices: Tuple[int, int, int, int]

    def to_text(self) -> str:
        return f"{self.pattern.value} " + " ".join(map(str, self.vertices))


# induced degree profile, sorted descending
_PROFILES = {
    Pattern.CLAW: (3, 1, 1, 1),
    Pattern.CO_CLAW: (2, 2, 2, 0),
    Pattern.DIAMOND: (3, 3, 2, 2),
}


def _scan(g: Graph, pattern: Pattern) -> Optional[Witness]:
    profile = _PROFILES[pattern]
    rows = g.rows
    for quad in combinations(range(g.n), 4):
        mask = (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])
        degs = [(rows[v] & mask).bit_count() for v in quad]
        if tuple(sorted(degs, reverse=True)) != profile:
            continue
        if pattern == Pattern.CO_CLAW:
            key = lambda v: (degs[quad.index(v)] != 0, v)
        else:
            key = lambda v: (-degs[quad.index(v)], v)
        return Witness(pattern, tuple(sorted(quad, key=key)))
    return None


@stable(since="0.1.0")
def contains_claw(g: Graph) -> Optional[Witness]:
    """First 4-subset (lexicographic) inducing K_{1,3}, or None."""
    if g.n < 4 or max(g.degrees()) < 3:
        return None
    return _scan(g, Pattern.CLAW)


@stable(since="0.1.0")
def contains_co_claw(g: Graph) -> Optional[Witness]:
    """First 4-subset inducing a triangle plus an isolated vertex, or None."""
    if g.n < 4 or min(g.degrees()) > g.n - 4:
        return None
    return _scan(g, Pattern.CO_CLAW)


@stable(since="0.1.0")
def contains_diamond(g: Graph) -> Optional[Witness]:
    """First 4-subset inducing K4 minus an edge, or None."""
    if g.n < 4:
        return None
    return _scan(g, Pattern.DIAMOND)


@stable(since="0.1.0")
def in_forb_claw_coclaw(g: Graph) -> bool:
    return contains_claw(g) is None and contains_co_claw(g) is None


@stable(since="0.1.0")
def is_claw_diamond_free(g: Graph) -> bool:
    """True iff g is the line graph of a triangle-free graph (Harary–Holzmann)."""
    return contains_claw(g) is None and contains_diamond(g) is None


def is_witness(g: Graph, w: Witness) -> bool:
    """Re-check a witness against g, including its vertex order."""
    vs = w.vertices
    if len(set(vs)) != 4 or any(not 0 <= v < g.n for v in vs):
        return False
    first, rest = vs[0], vs[1:]
    if w.pattern == Pattern.CLAW:
        return all(g.adjacent(first, v) for v in rest) and not any(
            g.adjacent(a, b) for a, b in combinations(rest, 2))
    if w.pattern == Pattern.CO_CLAW:
        return not any(g.adjacent(first, v) for v in rest) and all(
            g.adjacent(a, b) for a, b in combinations(rest, 2))
    a, b, c, d = vs
    return (g.adjacent(a, b) and not g.adjacent(c, d)
            and all(g.adjacent(x, y) for x in (a, b) for y in (c, d)))


def has_disjoint_k3_and_independent_triple(g: Graph) -> bool:
    """Some triangle and some independent triple share no vertex."""
    triangles, stables = [], []
    for t in combinations(range(g.n), 3):
        inside = g.adjacent(t[0], t[1]) + g.adjacent(t[0], t[2]) + g.adjacent(t[1], t[2])
        mask = (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        if inside == 3:
            triangles.append(mask)
        elif inside == 0:
            stables.append(mask)
    return any(t & s == 0 for t in triangles for s in stables)


# ── Certificates ─────────────────────────────────────────────────────

class CertificateKind(str, Enum):
    NOT_IN_CLASS = "NotInClass"
    IS_A6 = "IsA6"
    IS_CO_A6 = "IsCoA6"
    P9_INDUCED = "P9Induced"
    LINEAR_FOREST_OR_CYCLES = "LinearForestOrCycles"
    COMPLEMENT_CASE = "ComplementCase"


_MAPPING_KINDS = (CertificateKind.IS_A6, CertificateKind.IS_CO_A6, CertificateKind.P9_INDUCED)


@dataclass(frozen=True)
class Certificate:
    """
    Result of ``classify``; exactly one kind, with the matching payload.

    Attributes:
        kind: Which case of the characterization applies
        witness: Forbidden 4-vertex subgraph (NotInClass)
        mapping: ``mapping[v]`` is the image of v in A6, co-A6 or P9
        components: Per-component shapes (LinearForestOrCycles)
        inner: Positive certificate for the complement (ComplementCase)
    """
    kind: CertificateKind
    witness: Optional[Witness] = None
    mapping: Optional[Tuple[int, ...]] = None
    components: Optional[Tuple[ComponentShape, ...]] = None
    inner: Optional["Certificate"] = None

    @property
    def in_class(self) -> bool:
        return self.kind != CertificateKind.NOT_IN_CLASS

    def verify(self, g: Graph) -> bool:
        """Re-derive the certificate's claim on g."""
        kind = self.kind
        if kind == CertificateKind.NOT_IN_CLASS:
            return (self.witness is not None
                    and self.witness.pattern in (Pattern.CLAW, Pattern.CO_CLAW)
                    and is_witness(g, self.witness))
        if kind == CertificateKind.IS_A6:
            return self.mapping is not None and is_isomorphism(g, _A6, self.mapping)
        if kind == CertificateKind.IS_CO_A6:
            return self.mapping is not None and is_isomorphism(g, _CO_A6, self.mapping)
        if kind == CertificateKind.P9_INDUCED:
            return self.mapping is not None and is_induced_embedding(g, _P9, self.mapping)
        if kind == CertificateKind.LINEAR_FOREST_OR_CYCLES:
            return (self.components is not None
                    and _paths_or_long_cycles(self.components)
                    and tuple(component_shapes(g)) == self.components)
        if kind == CertificateKind.COMPLEMENT_CASE:
            inner = self.inner
            return (inner is not None
                    and inner.kind not in (CertificateKind.NOT_IN_CLASS, CertificateKind.COMPLEMENT_CASE)
                    and inner.verify(complement(g)))
        return False

    def to_text(self) -> str:
        """One line: tag, then the payload tokens."""
        kind = self.kind
        if kind == CertificateKind.NOT_IN_CLASS:
            return f"{kind.value} {self.witness.to_text()}"
        if kind in _MAPPING_KINDS:
            return " ".join([kind.value] + [f"{i}->{j}" for i, j in enumerate(self.mapping)])
        if kind == CertificateKind.LINEAR_FOREST_OR_CYCLES:
            return " ".join([kind.value] + [str(s) for s in self.components])
        return f"{kind.value} {self.inner.to_text()}"


def _paths_or_long_cycles(shapes) -> bool:
    return all(s.is_path or (s.is_cycle and s.length >= 4) for s in shapes)


@beta(note="certificate text format may gain fields")
def certificate_from_text(text: str) -> Certificate:
    """Parse the output of ``Certificate.to_text``.

    Raises:
        ValueError: unknown tag or malformed payload
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty certificate text")
    kind = CertificateKind(tokens[0])
    rest = tokens[1:]
    if kind == CertificateKind.NOT_IN_CLASS:
        if len(rest) != 5:
            raise ValueError("NotInClass needs a pattern and four vertices")
        return Certificate(kind, witness=Witness(Pattern(rest[0]), tuple(int(v) for v in rest[1:])))
    if kind in _MAPPING_KINDS:
        mapping = []
        for i, token in enumerate(rest):
            src, arrow, dst = token.partition("->")
            if not arrow or int(src) != i:
                raise ValueError(f"malformed mapping token {token!r}")
            mapping.append(int(dst))
        return Certificate(kind, mapping=tuple(mapping))
    if kind == CertificateKind.LINEAR_FOREST_OR_CYCLES:
        return Certificate(kind, components=tuple(ComponentShape.parse(t) for t in rest))
    return Certificate(kind, inner=certificate_from_text(" ".join(rest)))


# ── Classifier ───────────────────────────────────────────────────────

def _positive(g: Graph) -> Optional[Certificate]:
    """Positive cases that are checked on g itself, in priority order."""
    if g.n == 6:
        iso = are_isomorphic(g, _A6)
        if iso is not None:
            return Certificate(CertificateKind.IS_A6, mapping=iso)
        iso = are_isomorphic(g, _CO_A6)
        if iso is not None:
            return Certificate(CertificateKind.IS_CO_A6, mapping=iso)
    if g.n <= 9:
        emb = find_induced_embedding(g, _P9)
        if emb is not None:
            return Certificate(CertificateKind.P9_INDUCED, mapping=emb)
    shapes = tuple(component_shapes(g))
    if _paths_or_long_cycles(shapes):
        return Certificate(CertificateKind.LINEAR_FOREST_OR_CYCLES, components=shapes)
    return None


@stable(since="0.1.0")
def classify(g: Graph) -> Certificate:
    """Certifying membership test for Forb{claw, co-claw}.

    Order: claw / co-claw witness, A6 / co-A6 isomorphism, embedding into
    P9, component scan of g, component scan of the complement.

    Raises:
        RuntimeError: g is claw- and co-claw-free but no case applies
    """
    witness = contains_claw(g) or contains_co_claw(g)
    if witness is not None:
        return Certificate(CertificateKind.NOT_IN_CLASS, witness=witness)
    cert = _positive(g)
    if cert is not None:
        return cert
    shapes = tuple(component_shapes(complement(g)))
    if _paths_or_long_cycles(shapes):
        inner = Certificate(CertificateKind.LINEAR_FOREST_OR_CYCLES, components=shapes)
        return Certificate(CertificateKind.COMPLEMENT_CASE, inner=inner)
    raise RuntimeError(f"no certificate for a claw/co-claw-free graph with edges {g.edges()}")


classify_theorem1 = classify


# ── Line-graph roots ─────────────────────────────────────────────────

def _invariant(g: Graph) -> Tuple[int, ...]:
    return tuple(sorted(g.degrees()))


@lru_cache(maxsize=None)
def _line_graph_catalog(c: int) -> Dict[Tuple[int, ...], List[Graph]]:
    """Line graphs of connected triangle-free graphs with c edges on c+1 vertices, up to isomorphism."""
    pairs = vertex_pairs(c + 1)
    catalog: Dict[Tuple[int, ...], List[Graph]] = {}
    for chosen in combinations(pairs, c):
        r = from_edges(c + 1, chosen)
        support = [v for v in range(r.n) if r.degree(v)]
        core, _ = induced(r, support)
        if not is_connected(core) or not core.is_triangle_free():
            continue
        lg = line_graph(core).base
        bucket = catalog.setdefault(_invariant(lg), [])
        if all(are_isomorphic(lg, other) is None for other in bucket):
            bucket.append(lg)
    logger.debug("line-graph catalog for %d edges: %d classes", c,
                 sum(len(b) for b in catalog.values()))
    return catalog


def triangle_free_root_exists(g: Graph) -> bool:
    """Brute-force oracle: g = L(R) for some triangle-free R.

    Each component with c vertices must be the line graph of a connected
    triangle-free root with c edges, which has at most c + 1 vertices.
    """
    for part in connected_components(g):
        comp, _ = induced(g, part)
        bucket = _line_graph_catalog(len(part)).get(_invariant(comp), [])
        if all(are_isomorphic(comp, lg) is None for lg in bucket):
            return False
    return True
