"""
Locating a gadget in a host graph and splicing in its replacement.

An occurrence maps gadget vertex i to a host vertex. The replacement reuses
the same host ids position by position; stub slot i of the replacement takes
over the external edge held by slot i of the host gadget.
"""

from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
from loguru import logger
from networkx.algorithms.isomorphism import GraphMatcher

from specgap.blocks.gadgets import Gadget, GadgetPair
from specgap.domain.graph import Graph, is_k_regular, make_graph, to_networkx
from specgap.exceptions import GadgetNotFoundError, NotQuarticAfterGlueError

Occurrence = Tuple[int, ...]

MAX_OCCURRENCES = 256


def _gadget_nx(gadget: Gadget) -> nx.Graph:
    return to_networkx(gadget.graph)


def locate(
    host: Graph, gadget: Gadget, limit: int = MAX_OCCURRENCES
) -> List[Occurrence]:
    """
    Induced occurrences of a gadget whose frontier matches the host.

    A match is kept when every gadget vertex has exactly as many host
    neighbours outside the match as it has stub slots.

    Returns:
        Host id of each gadget vertex, one tuple per occurrence
    """
    matcher = GraphMatcher(to_networkx(host), _gadget_nx(gadget))
    adj = host.adjacency()
    stub_count = [gadget.stubs.count(i) for i in range(gadget.order)]
    found: List[Occurrence] = []
    for mapping in matcher.subgraph_isomorphisms_iter():
        occ = [0] * gadget.order
        for host_v, gadget_v in mapping.items():
            occ[gadget_v] = host_v
        inside = set(occ)
        if all(
            sum(1 for w in adj[occ[i]] if w not in inside) == stub_count[i]
            for i in range(gadget.order)
        ):
            found.append(tuple(occ))
            if len(found) >= limit:
                break
    logger.debug(f"Found {len(found)} occurrences of {gadget.name}")
    return found


def external_edges(host: Graph, occ: Occurrence) -> Dict[int, List[int]]:
    """Gadget vertex -> sorted host neighbours outside the occurrence."""
    adj = host.adjacency()
    inside = set(occ)
    return {i: [w for w in adj[v] if w not in inside] for i, v in enumerate(occ)}


def _slot_assignments(
    gadget: Gadget, outside: Dict[int, List[int]]
) -> Iterator[List[int]]:
    """Every way of handing external endpoints to the stub slots."""
    owners = sorted(set(gadget.stubs))
    options = [list(permutations(outside[v])) for v in owners]
    for choice in product(*options):
        queues = {v: list(order) for v, order in zip(owners, choice)}
        yield [queues[v].pop(0) for v in gadget.stubs]


def splice(host: Graph, pair: GadgetPair, occ: Occurrence) -> Graph:
    """
    Replace an occurrence of pair.host by pair.replacement.

    Raises:
        GadgetNotFoundError: If the occurrence frontier does not match the stubs
        NotQuarticAfterGlueError: If no slot assignment gives a simple quartic
            graph
    """
    h, hp = pair.host, pair.replacement
    outside = external_edges(host, occ)
    if any(len(outside[i]) != h.stubs.count(i) for i in range(h.order)):
        raise GadgetNotFoundError(f"Occurrence of {h.name} has a different frontier")
    inside = set(occ)
    kept = [(u, v) for u, v in host.edges if u not in inside and v not in inside]
    internal = [(occ[u], occ[v]) for u, v in hp.graph.edges]

    tried: Set[Tuple[Tuple[int, int], ...]] = set()
    for endpoints in _slot_assignments(h, outside):
        stubs = [(occ[hp.stubs[s]], w) for s, w in enumerate(endpoints)]
        edges = kept + internal + stubs
        normalized = [(min(a, b), max(a, b)) for a, b in edges]
        key = tuple(sorted(normalized))
        if key in tried:
            continue
        tried.add(key)
        if len(set(normalized)) != len(normalized):
            continue
        if any(a == b for a, b in normalized):
            continue
        g = make_graph(host.n, normalized)
        if is_k_regular(g, 4):
            return g
    raise NotQuarticAfterGlueError(
        f"Splicing {hp.name} into this occurrence does not give a simple quartic graph"
    )


def host_label_values(
    pair: GadgetPair, occ: Occurrence, x: Sequence[float]
) -> Dict[str, List[float]]:
    """Host components grouped by the value label of the gadget vertex holding them."""
    grouped: Dict[str, List[float]] = {}
    for i, label in enumerate(pair.host.values):
        if label is not None:
            grouped.setdefault(label, []).append(float(x[occ[i]]))
    return grouped


def left_neighbour_values(
    host: Graph, pair: GadgetPair, occ: Occurrence, x: Sequence[float]
) -> List[float]:
    """Components on the external neighbours of the first stubbed vertices."""
    outside = external_edges(host, occ)
    owners: List[int] = []
    for v in pair.host.stubs:
        if v not in owners:
            owners.append(v)
    # the two left-most vertices own the first stub slots
    first = owners[:2]
    return [float(x[w]) for v in first for w in outside[v]]


def carry_vector(
    pair: GadgetPair,
    occ: Occurrence,
    x: Sequence[float],
    values: Dict[str, float],
) -> List[float]:
    """
    Vector on the spliced graph.

    Replacement vertices take the value of their label; a vertex without a
    label keeps the host component at its id. Everything outside the
    occurrence is unchanged.
    """
    out = [float(v) for v in x]
    for i, label in enumerate(pair.replacement.values):
        if label is not None:
            out[occ[i]] = values[label]
    return out


def find_occurrence(
    host: Graph, pair: GadgetPair, limit: int = MAX_OCCURRENCES
) -> Optional[Occurrence]:
    found = locate(host, pair.host, limit=limit)
    return found[0] if found else None
