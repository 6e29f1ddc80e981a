"""
Canonical certificates for isomorphism rejection.

Certificates come from nauty through pynauty. Two graphs get equal certificates
exactly when they are isomorphic (respecting the vertex colouring, if one is
given).
"""

from typing import Optional, Sequence, Set

import pynauty
from pydantic import BaseModel, ConfigDict, Field

from specgap.domain.graph import Graph


class CanonicalCert(BaseModel):
    """Canonical relabelling certificate of a graph."""

    model_config = ConfigDict(frozen=True)

    value: bytes = Field(..., description="Order prefix followed by the nauty certificate")

    def hex(self) -> str:
        return self.value.hex()


def to_pynauty(g: Graph, coloring: Optional[Sequence[Set[int]]] = None) -> pynauty.Graph:
    adjacency = {v: nbrs for v, nbrs in enumerate(g.adjacency()) if nbrs}
    return pynauty.Graph(
        number_of_vertices=g.n,
        directed=False,
        adjacency_dict=adjacency,
        vertex_coloring=[set(cell) for cell in coloring] if coloring else [],
    )


def canonical_cert(
    g: Graph, coloring: Optional[Sequence[Set[int]]] = None
) -> CanonicalCert:
    """
    Isomorphism-invariant certificate of g.

    Args:
        g: Graph to certify
        coloring: Optional ordered vertex colouring; the certificate is then
            invariant only under colour-preserving relabellings

    Returns:
        CanonicalCert whose bytes start with the vertex count
    """
    prefix = g.n.to_bytes(4, "big")
    if g.n == 0:
        return CanonicalCert(value=prefix)
    return CanonicalCert(value=prefix + pynauty.certificate(to_pynauty(g, coloring)))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.size != b.size:
        return False
    return canonical_cert(a) == canonical_cert(b)
