"""
Vertex partitions and equitability.

coarsest_equitable() is WL-1 colour refinement: each round recolours a vertex
by (own colour, sorted multiset of neighbour colours) and stops once the number
of colour classes no longer grows.
"""

from collections import Counter
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from specgap.domain.graph import Graph
from specgap.exceptions import NotAPartitionError


class Partition(BaseModel):
    """Ordered cells covering 0..n-1 exactly once."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    cells: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="before")
    @classmethod
    def check_cover(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        n = data.get("n")
        cells = tuple(tuple(int(v) for v in c) for c in data.get("cells", ()))
        seen: List[int] = []
        for cell in cells:
            if not cell:
                raise NotAPartitionError("Partition cells must be nonempty")
            seen.extend(cell)
        if sorted(seen) != list(range(n if isinstance(n, int) else -1)):
            raise NotAPartitionError(
                f"Cells do not cover 0..{n - 1 if isinstance(n, int) else '?'} "
                f"exactly once"
            )
        return {**data, "cells": cells}

    @property
    def size(self) -> int:
        return len(self.cells)

    def cell_index(self) -> List[int]:
        """Cell number of every vertex."""
        index = [0] * self.n
        for i, cell in enumerate(self.cells):
            for v in cell:
                index[v] = i
        return index

    def sizes(self) -> List[int]:
        return [len(c) for c in self.cells]


def make_partition(n: int, cells: Sequence[Sequence[int]]) -> Partition:
    return Partition(n=n, cells=tuple(tuple(c) for c in cells))


def _check_order(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise NotAPartitionError(
            f"Partition of {p.n} vertices used on a graph of order {g.n}"
        )


def neighbour_counts(g: Graph, p: Partition) -> np.ndarray:
    """counts[v, j] = number of neighbours of v in cell j."""
    _check_order(g, p)
    index = p.cell_index()
    counts = np.zeros((g.n, p.size), dtype=np.int64)
    for u, v in g.edges:
        counts[u, index[v]] += 1
        counts[v, index[u]] += 1
    return counts


def is_equitable(g: Graph, p: Partition) -> bool:
    """
    True iff every vertex of a cell has the same number of neighbours in each cell.

    Raises:
        NotAPartitionError: If p is not a partition of g's vertex set
    """
    counts = neighbour_counts(g, p)
    for cell in p.cells:
        rows = counts[list(cell)]
        if not (rows == rows[0]).all():
            return False
    return True


def cell_edge_counts(g: Graph, p: Partition) -> np.ndarray:
    """
    Edge counts between cells.

    Entry (i, j), i != j, is the number of edges with one end in C_i and the
    other in C_j; entry (i, i) counts edges inside C_i.
    """
    _check_order(g, p)
    index = p.cell_index()
    d = np.zeros((p.size, p.size), dtype=np.int64)
    for u, v in g.edges:
        i, j = index[u], index[v]
        d[i, j] += 1
        if i != j:
            d[j, i] += 1
    return d


def _refine(adj: List[List[int]], colors: Tuple[int, ...]) -> Tuple[int, ...]:
    sigs = []
    for u, neigh in enumerate(adj):
        cnt: Counter[int] = Counter(colors[v] for v in neigh)
        sigs.append((colors[u], tuple(sorted(cnt.items()))))
    uniq = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
    return tuple(uniq[s] for s in sigs)


def refine_colors(g: Graph, initial: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """Stable WL-1 colouring; starts from the degree colouring by default."""
    adj = g.adjacency()
    colors = tuple(initial) if initial is not None else tuple(len(a) for a in adj)
    classes = len(set(colors))
    while True:
        refined = _refine(adj, colors)
        refined_classes = len(set(refined))
        if refined_classes == classes:
            return refined
        colors, classes = refined, refined_classes


def partition_from_colors(colors: Sequence[int]) -> Partition:
    groups: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    cells = sorted(groups.values(), key=lambda cell: cell[0])
    return make_partition(len(colors), cells)


def coarsest_equitable(g: Graph) -> Partition:
    """Coarsest equitable partition refining the unit partition {V}."""
    return partition_from_colors(refine_colors(g, [0] * g.n))
