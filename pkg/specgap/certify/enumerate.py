"""
Exhaustive generation of connected quartic graphs.

Graphs are grown one saturated vertex per layer: the least-deficient open
vertex is joined to every admissible set of open non-neighbours. The set of
completions of a partial graph depends only on its isomorphism class (open
vertices are exactly those of degree below four), so each layer is reduced
to one representative per nauty certificate before it is expanded.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
import pynauty
from loguru import logger
from pydantic import BaseModel, ConfigDict

from specgap.config import ENUMERATION_MAX_ORDER, get_threads
from specgap.domain.canonical import CanonicalCert, canonical_cert
from specgap.domain.graph import Graph, from_networkx, make_graph
from specgap.exceptions import InvalidInputError, OrderCapExceededError

DEGREE = 4
CHUNK_SIZE = 256

# connected quartic graphs by order
KNOWN_COUNTS: Dict[int, int] = {
    5: 1,
    6: 1,
    7: 2,
    8: 6,
    9: 16,
    10: 59,
    11: 265,
    12: 1544,
    13: 10778,
    14: 88168,
}

# adjacency as one bitmask per vertex
_Adj = Tuple[int, ...]


class CensusEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    cert: CanonicalCert
    graph: Graph
    mu: Optional[float] = None


def _degree(mask: int) -> int:
    return bin(mask).count("1")


def _components(adj: _Adj) -> List[int]:
    seen = 0
    comps = []
    for start in range(len(adj)):
        if seen >> start & 1:
            continue
        comp, frontier = 1 << start, 1 << start
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = adj[v] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        comps.append(comp)
    return comps


def _feasible(adj: _Adj) -> bool:
    """Necessary conditions for a quartic connected completion."""
    n = len(adj)
    deficit = [DEGREE - _degree(m) for m in adj]
    open_mask = sum(1 << v for v in range(n) if deficit[v] > 0)
    if sum(deficit) % 2:
        return False
    for v in range(n):
        if deficit[v] and _degree(open_mask & ~adj[v] & ~(1 << v)) < deficit[v]:
            return False
    full = (1 << n) - 1
    comps = _components(adj)
    if len(comps) > 1 and any((c & open_mask) == 0 for c in comps):
        return False
    return open_mask != 0 or comps == [full]


def _cert(adj: _Adj) -> bytes:
    g = pynauty.Graph(
        number_of_vertices=len(adj),
        directed=False,
        adjacency_dict={
            v: [u for u in range(len(adj)) if m >> u & 1] for v, m in enumerate(adj) if m
        },
    )
    return pynauty.certificate(g)


def _children(adj: _Adj) -> List[Tuple[bytes, _Adj]]:
    n = len(adj)
    deg = [_degree(m) for m in adj]
    open_vs = [v for v in range(n) if deg[v] < DEGREE]
    if not open_vs:
        return []
    v = max(open_vs, key=lambda u: (deg[u], -u))
    candidates = [u for u in open_vs if u != v and not adj[v] >> u & 1]
    out = []
    for chosen in combinations(candidates, DEGREE - deg[v]):
        new = list(adj)
        for u in chosen:
            new[v] |= 1 << u
            new[u] |= 1 << v
        child = tuple(new)
        if _feasible(child):
            out.append((_cert(child), child))
    return out


def _expand(states: Sequence[_Adj]) -> List[Tuple[bytes, _Adj]]:
    return [c for s in states for c in _children(s)]


def _chunks(items: List[_Adj], size: int) -> Iterable[List[_Adj]]:
    for i in range(0, len(items), size):
        yield items[i : i + size]


def _to_graph(adj: _Adj) -> Graph:
    n = len(adj)
    return make_graph(
        n, [(v, u) for v in range(n) for u in range(v + 1, n) if adj[v] >> u & 1]
    )


def enumerate_quartic(n: int, threads: Optional[int] = None) -> List[CensusEntry]:
    """
    Every connected quartic graph on n vertices, once up to isomorphism.

    Entries are sorted by certificate, so the output does not depend on the
    worker count.

    Raises:
        InvalidInputError: If n < 5
        OrderCapExceededError: If n exceeds ENUMERATION_MAX_ORDER
    """
    if n < DEGREE + 1:
        raise InvalidInputError(f"No quartic graph on {n} vertices")
    if n > ENUMERATION_MAX_ORDER:
        raise OrderCapExceededError(
            f"Enumeration is capped at n = {ENUMERATION_MAX_ORDER}, got {n}"
        )
    workers = threads or get_threads()

    # vertex 0 and its neighbourhood are fixed up to relabelling
    start = [0] * n
    for u in range(1, DEGREE + 1):
        start[0] |= 1 << u
        start[u] |= 1
    layer: Dict[bytes, _Adj] = {_cert(tuple(start)): tuple(start)}
    complete: Dict[bytes, _Adj] = {}

    depth = 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while layer:
            states = [layer[c] for c in sorted(layer)]
            nxt: Dict[bytes, _Adj] = {}
            for children in pool.map(_expand, _chunks(states, CHUNK_SIZE)):
                for cert, child in children:
                    if all(_degree(m) == DEGREE for m in child):
                        complete.setdefault(cert, child)
                    else:
                        nxt.setdefault(cert, child)
            logger.debug(
                f"n={n} layer {depth}: {len(states)} states -> {len(nxt)} open, "
                f"{len(complete)} complete"
            )
            layer = nxt
            depth += 1

    entries = []
    for adj in complete.values():
        g = _to_graph(adj)
        entries.append(CensusEntry(cert=canonical_cert(g), graph=g))
    entries.sort(key=lambda e: e.cert.value)
    logger.info(f"Enumerated {len(entries)} connected quartic graphs on {n} vertices")
    return entries


def _regular_labelled(n: int, k: int) -> Iterable[List[Tuple[int, int]]]:
    """All labelled k-regular graphs on n vertices, as edge lists."""
    deficit = [k] * n
    edges: List[Tuple[int, int]] = []
    adjacent: List[Set[int]] = [set() for _ in range(n)]

    def rec() -> Iterable[List[Tuple[int, int]]]:
        v = next((u for u in range(n) if deficit[u]), None)
        if v is None:
            yield list(edges)
            return
        options = [u for u in range(v + 1, n) if deficit[u] and u not in adjacent[v]]
        for chosen in combinations(options, deficit[v]):
            saved = deficit[v]
            deficit[v] = 0
            for u in chosen:
                deficit[u] -= 1
                adjacent[v].add(u)
                adjacent[u].add(v)
                edges.append((v, u))
            yield from rec()
            for u in chosen:
                deficit[u] += 1
                adjacent[v].discard(u)
                adjacent[u].discard(v)
                edges.pop()
            deficit[v] = saved

    yield from rec()


def complement_oracle(n: int) -> List[Graph]:
    """
    Connected quartic graphs on n <= 8 vertices via their complements.

    The complement of a quartic graph on n vertices is (n - 5)-regular; these
    are generated label by label and reduced with networkx isomorphism tests,
    independently of the nauty-based generator.
    """
    if not 5 <= n <= 8:
        raise InvalidInputError(f"The complement oracle covers 5 <= n <= 8, got {n}")
    k = n - DEGREE - 1
    buckets: Dict[str, List[nx.Graph]] = {}
    for edges in _regular_labelled(n, k):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        key = nx.weisfeiler_lehman_graph_hash(h)
        seen = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in seen):
            seen.append(h)
    out = []
    for group in buckets.values():
        for h in group:
            c = nx.complement(h)
            if nx.is_connected(c):
                out.append(from_networkx(c))
    return out


def audit_census(
    entries: Sequence[CensusEntry], n: int, samples: int = 32, seed: int = 0
) -> bool:
    """Every sampled random quartic graph of order n is present in the census."""
    certs = {e.cert for e in entries}
    for i in range(samples):
        h = nx.random_regular_graph(DEGREE, n, seed=seed + i)
        if not nx.is_connected(h):
            continue
        if canonical_cert(from_networkx(h)) not in certs:
            logger.error(f"Random quartic graph (seed {seed + i}) missing from census")
            return False
    return True
