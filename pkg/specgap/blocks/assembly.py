"""
Path-like assemblies.

Blocks are glued left to right: the right attachment vertex of one block is
identified with the left attachment vertex of the next, and that shared vertex
becomes a cut vertex. Global ids are handed out block by block in cell order,
so ids increase from the left end to the right end.
"""

from typing import List, Optional, Sequence, Set, Tuple, Union

import networkx as nx
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.blocks.catalog import Block, block, catalog_tags, mirror_tag
from specgap.domain.graph import Graph, is_k_regular, make_graph, to_networkx
from specgap.exceptions import (
    IncompatibleAttachmentError,
    InvalidInputError,
    NotQuarticAfterGlueError,
)

BlockLike = Union[Block, str]


class Assembly(BaseModel):
    """Blocks glued at cut vertices, with per-cell and per-block provenance."""

    model_config = ConfigDict(frozen=True)

    blocks: Tuple[Block, ...]
    graph: Graph
    cell_order: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="Global cells, left to right, cut cells merged"
    )
    cut_vertices: Tuple[int, ...]
    block_vertices: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="Global id of each local vertex, per block"
    )

    @property
    def tags(self) -> List[str]:
        return [b.tag for b in self.blocks]

    @property
    def n(self) -> int:
        return self.graph.n

    def global_cell(self, block_index: int, local_cell: int) -> Tuple[int, ...]:
        mapping = self.block_vertices[block_index]
        cell = self.blocks[block_index].cells[local_cell]
        return tuple(sorted(mapping[v] for v in cell))


def resolve(seq: Sequence[BlockLike]) -> List[Block]:
    return [block(b) if isinstance(b, str) else b for b in seq]


def glue(
    seq: Sequence[BlockLike], tag: Optional[str] = None
) -> Tuple[Block, Tuple[Tuple[int, ...], ...], Tuple[int, ...]]:
    """
    Glue blocks at single attachment vertices without a degree check.

    Returns:
        The combined block (ports taken from the two ends), the global id of
        every local vertex per block, and the cut vertices

    Raises:
        IncompatibleAttachmentError: If two neighbours do not both offer a
            single attachment vertex on the shared side
    """
    blocks = resolve(seq)
    if not blocks:
        raise InvalidInputError("Cannot glue an empty block sequence")

    mappings: List[List[int]] = []
    cuts: List[int] = []
    edges: List[Tuple[int, int]] = []
    cells: List[Tuple[int, ...]] = []
    labels: List[str] = []
    next_id = 0

    for i, b in enumerate(blocks):
        mapping = [-1] * b.order
        if i > 0:
            prev = blocks[i - 1]
            if len(prev.right_port) != 1 or len(b.left_port) != 1:
                raise IncompatibleAttachmentError(
                    f"Cannot glue {prev.tag} to {b.tag}: both sides need a single "
                    f"attachment vertex"
                )
            cut = mappings[-1][prev.right_port[0]]
            mapping[b.left_port[0]] = cut
            cuts.append(cut)
        for cell in b.cells:
            for v in cell:
                if mapping[v] < 0:
                    mapping[v] = next_id
                    labels.append(f"{b.tag}:{b.labels[v]}")
                    next_id += 1
        mappings.append(mapping)
        edges.extend((mapping[u], mapping[v]) for u, v in b.graph.edges)

        for j, cell in enumerate(b.cells):
            global_cell = tuple(sorted(mapping[v] for v in cell))
            if i > 0 and j == 0 and cells and set(global_cell) & set(cells[-1]):
                cells[-1] = tuple(sorted(set(cells[-1]) | set(global_cell)))
            else:
                cells.append(global_cell)

    first, last = blocks[0], blocks[-1]
    kinds = {first.kind, last.kind}
    if len(blocks) == 1:
        kind = first.kind
    elif not first.left_port and not last.right_port:
        kind = "complete"
    elif "end" in kinds or not first.left_port or not last.right_port:
        kind = "end"
    else:
        kind = "middle"

    combined = Block(
        tag=tag or "".join(b.tag for b in blocks),
        kind=kind,
        labels=tuple(labels),
        graph=make_graph(next_id, edges),
        left_port=tuple(mappings[0][v] for v in first.left_port),
        right_port=tuple(mappings[-1][v] for v in last.right_port),
        cells=tuple(cells),
    )
    return combined, tuple(tuple(m) for m in mappings), tuple(cuts)


def assemble(seq: Sequence[BlockLike]) -> Assembly:
    """
    Assemble a path-like quartic graph from an end-to-end block sequence.

    Args:
        seq: Blocks or catalog tags, left to right; the first block must be
            closed on the left and the last closed on the right

    Returns:
        Assembly whose graph is 4-regular

    Raises:
        IncompatibleAttachmentError: On a dangling outer attachment or a bad
            junction
        NotQuarticAfterGlueError: If the glued graph is not 4-regular
    """
    blocks = resolve(seq)
    if blocks and (blocks[0].left_port or blocks[-1].right_port):
        raise IncompatibleAttachmentError(
            f"Sequence {[b.tag for b in blocks]} leaves an outer attachment open"
        )
    combined, mappings, cuts = glue(blocks)
    if not is_k_regular(combined.graph, 4):
        raise NotQuarticAfterGlueError(
            f"Gluing {[b.tag for b in blocks]} does not give a quartic graph"
        )
    logger.debug(
        f"Assembled {'|'.join(b.tag for b in blocks)} into {combined.order} vertices"
    )
    return Assembly(
        blocks=tuple(blocks),
        graph=combined.graph,
        cell_order=combined.cells,
        cut_vertices=cuts,
        block_vertices=mappings,
    )


def _with_roles(graph: nx.Graph, left: Optional[int], right: Optional[int]) -> nx.Graph:
    roled = graph.copy()
    nx.set_node_attributes(roled, "", "role")
    if left is not None:
        roled.nodes[left]["role"] = "left"
    if right is not None:
        roled.nodes[right]["role"] = "right"
    return roled


def identify_block(piece: nx.Graph) -> Optional[str]:
    """
    Catalog tag of a role-annotated piece, or None.

    The piece's nodes carry a "role" of "left", "right" or "" marking the cut
    vertices it shares with its neighbours. Plain tags are tried before their
    mirror images.
    """
    for base in catalog_tags():
        for tag in dict.fromkeys((base, mirror_tag(base))):
            b = block(tag)
            if b.kind not in ("end", "middle") or b.order != piece.number_of_nodes():
                continue
            reference = _with_roles(to_networkx(b.graph), b.left_attach, b.right_attach)
            if nx.is_isomorphic(
                piece, reference, node_match=lambda p, q: p["role"] == q["role"]
            ):
                return tag
    return None


def _read_from(
    graph: nx.Graph, pieces: List[Set[int]], cuts: Set[int], start: int
) -> Optional[List[str]]:
    tags: List[str] = []
    current, left = pieces[start], None
    while True:
        ahead = [c for c in current & cuts if c != left]
        right = ahead[0] if ahead else None
        tag = identify_block(_with_roles(graph.subgraph(current), left, right))
        if tag is None:
            return None
        tags.append(tag)
        if right is None:
            return tags
        current = next(p for p in pieces if right in p and p is not current)
        left = right


def block_sequence(g: Graph) -> Optional[List[str]]:
    """
    Recover the catalog block sequence of a path-like graph from its structure.

    The graph is cut into its biconnected components. They must form a path
    through single cut vertices, and each must be a catalog end or middle
    block joined at its attachment vertices. The two end-to-end readings are
    mirror images of each other; the lexicographically smaller one is returned.

    Returns:
        The tag sequence, or None if the graph is not such an assembly
    """
    graph = to_networkx(g)
    if not nx.is_connected(graph):
        return None
    cuts = set(nx.articulation_points(graph))
    pieces = [set(c) for c in nx.biconnected_components(graph)]
    if len(pieces) < 2:
        return None
    if any(sum(c in p for p in pieces) != 2 for c in cuts):
        return None
    if any(len(p & cuts) > 2 for p in pieces):
        return None
    ends = [i for i, p in enumerate(pieces) if len(p & cuts) == 1]
    if len(ends) != 2:
        return None
    readings = [_read_from(graph, pieces, cuts, i) for i in ends]
    found = [r for r in readings if r is not None]
    return min(found) if found else None
