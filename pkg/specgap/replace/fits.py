"""
The fits relation between end blocks.

D' fits D when D has an equitable partition C_1..C_p and D' a partition
C'_1..C'_p (not necessarily equitable) with |C_i| <= |C'_i| and the same
number of edges between C_i, C_j as between C'_i, C'_j for every i < j.
The attachment vertex of each block sits in its last cell.
"""

from typing import Iterator, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.blocks.catalog import Block, block
from specgap.config import FIT_SEARCH_NODE_LIMIT
from specgap.exceptions import NotAPartitionError, SearchSpaceExceededError
from specgap.structure.partition import (
    Partition,
    cell_edge_counts,
    is_equitable,
    make_partition,
)

# (D, D'): D' fits D
END_PAIRS: Tuple[Tuple[str, str], ...] = (
    ("D0", "D1"),
    ("D0", "D2"),
    ("D0", "D3"),
    ("D0", "D4"),
    ("D1", "D2"),
    ("D1", "D3"),
    ("D1", "D4"),
    ("D2", "D3"),
    ("D3", "D4"),
)

DEFAULT_MAX_CELLS = 6


class FitWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    pi: Partition = Field(..., description="Equitable partition of D")
    pi_prime: Partition = Field(..., description="Partition of D'")
    edge_counts: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="Edges between cells of D, zero on the diagonal"
    )


def attachment(b: Block) -> Optional[int]:
    """The single attachment vertex of an end block, on whichever side it is."""
    return b.right_attach if b.right_attach is not None else b.left_attach


def _cross_counts(d: Block, p: Partition) -> Tuple[Tuple[int, ...], ...]:
    counts = cell_edge_counts(d.graph, p)
    return tuple(
        tuple(0 if i == j else int(counts[i, j]) for j in range(p.size))
        for i in range(p.size)
    )


def check_fit(d: Block, d_prime: Block, w: FitWitness) -> bool:
    """
    True iff the witness shows that d_prime fits d.

    Raises:
        NotAPartitionError: If a partition does not cover its block
    """
    if w.pi.n != d.order or w.pi_prime.n != d_prime.order:
        raise NotAPartitionError(
            f"Witness partitions cover {w.pi.n}/{w.pi_prime.n} vertices, blocks "
            f"have {d.order}/{d_prime.order}"
        )
    if w.pi.size != w.pi_prime.size:
        return False
    if not is_equitable(d.graph, w.pi):
        return False
    if any(a > b for a, b in zip(w.pi.sizes(), w.pi_prime.sizes())):
        return False
    return _cross_counts(d, w.pi) == _cross_counts(d_prime, w.pi_prime)


def attachments_in_last_cells(d: Block, d_prime: Block, w: FitWitness) -> bool:
    v, v_prime = attachment(d), attachment(d_prime)
    if v is None or v_prime is None:
        return False
    return v in w.pi.cells[-1] and v_prime in w.pi_prime.cells[-1]


def _set_partitions(n: int, p_max: int) -> Iterator[List[int]]:
    """Restricted growth strings of length n using at most p_max labels."""
    labels = [0] * n

    def rec(i: int, used: int) -> Iterator[List[int]]:
        if i == n:
            yield list(labels)
            return
        for c in range(min(used + 1, p_max)):
            labels[i] = c
            yield from rec(i + 1, max(used, c + 1))

    if n:
        yield from rec(1, 1)


def _equitable_labels(adj: List[List[int]], labels: Sequence[int], p: int) -> bool:
    signature: dict = {}
    for u, neigh in enumerate(adj):
        row = [0] * p
        for v in neigh:
            row[labels[v]] += 1
        key = tuple(row)
        if signature.setdefault(labels[u], key) != key:
            return False
    return True


def _ordered(labels: Sequence[int], p: int, last_vertex: int) -> Partition:
    cells: List[List[int]] = [[] for _ in range(p)]
    for v, c in enumerate(labels):
        cells[c].append(v)
    tail = labels[last_vertex]
    ordered = [c for i, c in enumerate(cells) if i != tail] + [cells[tail]]
    return make_partition(len(labels), ordered)


def equitable_partitions(d: Block, p_max: int = DEFAULT_MAX_CELLS) -> Iterator[Partition]:
    """
    Equitable partitions of d with at most p_max cells, attachment cell last.

    The structural cells come first when they are equitable.
    """
    v = attachment(d)
    last = v if v is not None else d.order - 1
    adj = d.graph.adjacency()
    structural = make_partition(d.order, d.cells)
    seen = set()
    if structural.size <= p_max and is_equitable(d.graph, structural):
        labels = structural.cell_index()
        seen.add(tuple(labels))
        yield _ordered(labels, structural.size, last)
    for labels in _set_partitions(d.order, p_max):
        key = tuple(labels)
        if key in seen:
            continue
        p = max(labels) + 1
        if _equitable_labels(adj, labels, p):
            yield _ordered(labels, p, last)


def _search_prime(
    d_prime: Block,
    sizes: Sequence[int],
    target: Tuple[Tuple[int, ...], ...],
    budget: List[int],
) -> Optional[Partition]:
    p = len(sizes)
    adj = d_prime.graph.adjacency()
    root = attachment(d_prime)
    start = root if root is not None else 0

    # breadth-first order from the attachment vertex
    order, seen = [start], {start}
    for u in order:
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                order.append(w)
    order.extend(v for v in range(d_prime.order) if v not in seen)

    assign = [-1] * d_prime.order
    count = [0] * p
    cross = [[0] * p for _ in range(p)]

    def rec(k: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchSpaceExceededError(
                f"Fit search for {d_prime.tag} exceeded its node budget"
            )
        if k == len(order):
            return all(count[i] >= sizes[i] for i in range(p)) and all(
                cross[i][j] == target[i][j] for i in range(p) for j in range(p)
            )
        deficit = sum(max(0, sizes[i] - count[i]) for i in range(p))
        if deficit > len(order) - k:
            return False
        u = order[k]
        choices = [p - 1] if k == 0 and root is not None else range(p)
        for c in choices:
            touched = [assign[w] for w in adj[u] if assign[w] >= 0 and assign[w] != c]
            for j in touched:
                cross[c][j] += 1
                cross[j][c] += 1
            if all(cross[c][j] <= target[c][j] for j in touched):
                assign[u] = c
                count[c] += 1
                if rec(k + 1):
                    return True
                assign[u] = -1
                count[c] -= 1
            for j in touched:
                cross[c][j] -= 1
                cross[j][c] -= 1
        return False

    if not rec(0):
        return None
    cells: List[List[int]] = [[] for _ in range(p)]
    for v, c in enumerate(assign):
        cells[c].append(v)
    return make_partition(d_prime.order, cells)


def find_fit_partition(
    d: Block,
    d_prime: Block,
    p_max: int = DEFAULT_MAX_CELLS,
    pi: Optional[Partition] = None,
    node_limit: int = FIT_SEARCH_NODE_LIMIT,
) -> Optional[FitWitness]:
    """
    Search for partitions showing that d_prime fits d.

    Args:
        d: Block being replaced
        d_prime: Candidate replacement
        p_max: Largest number of cells tried
        pi: Fix the partition of d instead of trying every equitable one
        node_limit: Total backtracking nodes allowed

    Returns:
        A verified witness, or None when no partition exists

    Raises:
        SearchSpaceExceededError: If the node budget runs out first
    """
    if d_prime.order < d.order:
        return None
    budget = [node_limit]
    candidates = [pi] if pi is not None else equitable_partitions(d, p_max)
    for candidate in candidates:
        target = _cross_counts(d, candidate)
        found = _search_prime(d_prime, candidate.sizes(), target, budget)
        if found is None:
            continue
        witness = FitWitness(pi=candidate, pi_prime=found, edge_counts=target)
        if check_fit(d, d_prime, witness):
            logger.debug(
                f"{d_prime.tag} fits {d.tag} with cells {candidate.sizes()} / "
                f"{found.sizes()}"
            )
            return witness
    return None


def end_pair_witnesses(p_max: int = DEFAULT_MAX_CELLS) -> List[Tuple[str, str, Optional[FitWitness]]]:
    return [
        (a, b, find_fit_partition(block(a), block(b), p_max)) for a, b in END_PAIRS
    ]
