"""
Graph core for specgap.

Graphs are simple and undirected with dense vertex ids 0..n-1. Every type in
this module is frozen after construction, so instances can be shared freely
across worker threads.

Key functions:
- make_graph(): validated construction from an edge list
- laplacian(): L = D - A built in integer arithmetic
- degrees(), is_k_regular(), is_connected(): basic structure queries
"""

from bisect import bisect_left
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from specgap.exceptions import IndexOutOfRangeError, InvalidInputError, LoopEdgeError

Edge = Tuple[int, int]


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..n-1 with a sorted edge list."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    edges: Tuple[Edge, ...] = Field(
        default=(), description="Sorted, deduplicated (u, v) pairs with u < v"
    )

    @model_validator(mode="before")
    @classmethod
    def normalize_edges(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        n = data.get("n")
        if not isinstance(n, int) or n < 0:
            return data
        normalized = set()
        for pair in data.get("edges", ()):
            u, v = (int(w) for w in pair)
            if u == v:
                raise LoopEdgeError(f"Loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRangeError(
                    f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}"
                )
            normalized.add((u, v) if u < v else (v, u))
        return {**data, "edges": tuple(sorted(normalized))}

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def adjacency(self) -> List[List[int]]:
        """Sorted neighbour lists indexed by vertex."""
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        i = bisect_left(self.edges, key)
        return i < len(self.edges) and self.edges[i] == key


class SymMatrix(BaseModel):
    """Dense symmetric real matrix; the stored array is read-only."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order: int = Field(..., ge=0, description="Matrix dimension")
    entries: np.ndarray = Field(..., description="Dense symmetric float64 array")

    @model_validator(mode="before")
    @classmethod
    def freeze_entries(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "entries" not in data:
            return data
        entries = np.array(data["entries"], dtype=np.float64)
        order = data.get("order", entries.shape[0] if entries.ndim == 2 else -1)
        if entries.shape != (order, order):
            raise InvalidInputError(
                f"Expected a {order}x{order} matrix, got shape {entries.shape}"
            )
        if not np.array_equal(entries, entries.T):
            raise InvalidInputError("Matrix is not symmetric")
        entries.setflags(write=False)
        return {"order": order, "entries": entries}

    def lower_triangle(self) -> List[float]:
        """Row-major lower triangle, diagonal included."""
        rows, cols = np.tril_indices(self.order)
        return [float(v) for v in self.entries[rows, cols]]


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a simple graph, sorting and deduplicating the edge list.

    Args:
        n: Vertex count; vertices are 0..n-1
        edges: Unordered vertex pairs

    Returns:
        The validated Graph

    Raises:
        LoopEdgeError: If a pair repeats a vertex
        IndexOutOfRangeError: If an endpoint is not below n
    """
    return Graph(n=n, edges=tuple(tuple(e) for e in edges))


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Integer adjacency matrix."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    if g.edges:
        idx = np.array(g.edges, dtype=np.int64)
        a[idx[:, 0], idx[:, 1]] = 1
        a[idx[:, 1], idx[:, 0]] = 1
    return a


def laplacian(g: Graph) -> SymMatrix:
    """
    Laplacian L = D - A.

    The matrix is assembled over the integers and only converted to float64
    once it is complete, so every row sums to exactly zero.
    """
    a = adjacency_matrix(g)
    lap = np.diag(a.sum(axis=1)) - a
    assert not lap.sum(axis=1).any()
    return SymMatrix(order=g.n, entries=lap.astype(np.float64))


def degrees(g: Graph) -> List[int]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_k_regular(g: Graph, k: int) -> bool:
    return all(d == k for d in degrees(g))


def to_networkx(g: Graph) -> nx.Graph:
    """networkx view with nodes inserted in id order."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges)
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling its nodes to 0..n-1 in node order."""
    index: Dict[Any, int] = {node: i for i, node in enumerate(graph.nodes())}
    return make_graph(len(index), ((index[u], index[v]) for u, v in graph.edges()))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return nx.is_connected(to_networkx(g))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed to perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidInputError("Relabelling must be a permutation of 0..n-1")
    return make_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    return make_graph(
        g.n,
        (
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if (u, v) not in present
        ),
    )


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = ((u + a.n, v + a.n) for u, v in b.edges)
    return make_graph(a.n + b.n, list(a.edges) + list(shifted))


# Standard graphs, built through networkx generators


def path_graph(h: int) -> Graph:
    return from_networkx(nx.path_graph(h))


def cycle_graph(n: int) -> Graph:
    return from_networkx(nx.cycle_graph(n))


def complete_graph(n: int) -> Graph:
    return from_networkx(nx.complete_graph(n))
