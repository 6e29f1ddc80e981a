from specgap.domain.canonical import CanonicalCert, are_isomorphic, canonical_cert
from specgap.domain.formats import from_graph6, from_json, to_graph6, to_json
from specgap.domain.graph import (
    Graph,
    SymMatrix,
    complement,
    complete_graph,
    cycle_graph,
    degrees,
    disjoint_union,
    from_networkx,
    is_connected,
    is_k_regular,
    laplacian,
    make_graph,
    path_graph,
    relabel,
    to_networkx,
)

__all__ = [
    # Types
    "Graph",
    "SymMatrix",
    "CanonicalCert",
    # Construction
    "make_graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complement",
    "disjoint_union",
    "relabel",
    # Structure
    "laplacian",
    "degrees",
    "is_k_regular",
    "is_connected",
    "canonical_cert",
    "are_isomorphic",
    # Conversion
    "to_networkx",
    "from_networkx",
    "to_graph6",
    "from_graph6",
    "to_json",
    "from_json",
]
