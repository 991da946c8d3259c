"""
clawfree: Claw-free & Co-claw-free Graphs
=========================================

Certifying recognition of Forb{claw, co-claw}, the edge-graph S(U),
3-homogeneous subsets and Boolean-sum decompositions, and the exact
incidence-matrix computations behind reconstruction up to complementation.

    >>> from clawfree import p9, classify, decompose, verify_decomposition
    >>> classify(p9()).in_class
    True
    >>> verify_decomposition(decompose(p9()))
    True

Everything a claim rests on can be re-checked: certificates verify against
the input graph, decompositions verify by recomputing G + G' and both H3
sets, and ``clawfree verify`` replays the characterizations over every
labeled graph of a given order.
"""

__version__ = "0.3.0"

from .graph import (
    Graph,
    LabeledGraph,
    VertexPair,
    SizeMismatchError,
    a6,
    boolean_sum,
    claw,
    co_claw,
    complement,
    cycle,
    diamond,
    enumerate_graphs,
    from_edges,
    induced,
    p9,
    paley9,
    path,
)
from .formats import (
    Graph6Error,
    EdgeListError,
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
    read_graph,
)
from .structure import Certificate, CertificateKind, classify, classify_theorem1, in_forb_claw_coclaw
from .edge_graph import edge_graph
from .homogeneous import TripleSet, homogeneous_triples, same_3_homogeneous
from .decompose import Decomposition, decompose, property2, property3, verify_decomposition
from .incidence import build_W, gf2_kernel, inclusion_rank, rational_rank, is_k_hypomorphic_up_to_comp
from .stability import stable, beta, get_stability, is_stable, labeled_api

__all__ = [
    "Graph",
    "LabeledGraph",
    "VertexPair",
    "SizeMismatchError",
    "a6",
    "boolean_sum",
    "claw",
    "co_claw",
    "complement",
    "cycle",
    "diamond",
    "enumerate_graphs",
    "from_edges",
    "induced",
    "p9",
    "paley9",
    "path",
    "Graph6Error",
    "EdgeListError",
    "decode_edge_list",
    "decode_graph6",
    "encode_edge_list",
    "encode_graph6",
    "read_graph",
    "Certificate",
    "CertificateKind",
    "classify",
    "classify_theorem1",
    "in_forb_claw_coclaw",
    "edge_graph",
    "TripleSet",
    "homogeneous_triples",
    "same_3_homogeneous",
    "Decomposition",
    "decompose",
    "property2",
    "property3",
    "verify_decomposition",
    "build_W",
    "gf2_kernel",
    "inclusion_rank",
    "rational_rank",
    "is_k_hypomorphic_up_to_comp",
    "stable",
    "beta",
    "get_stability",
    "is_stable",
    "labeled_api",
]
