"""
Block catalog.

Every short block, brick and mirror image used to assemble path-like quartic
graphs. Adjacencies are fixture tables keyed by the vertex names of the
drawings (r, r1, r2, ...); local vertex ids follow the structural cell order,
left to right.

Conventions:
- End blocks D0..D4 carry their attachment vertex on the right; the right end
  of an assembly uses the mirror image.
- A port is the tuple of boundary vertices on one side: one degree-2 vertex for
  a block, the two degree-3 vertices for a brick, empty for a closed side.
- Mirror images are tagged with a leading "~". Blocks with a reversing
  automorphism (M0, M1, M3, M''0, M''1) are their own mirror image.
"""

from typing import Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from specgap.domain.graph import Graph, degrees, make_graph
from specgap.exceptions import UnknownKindError

BlockKind = Literal["end", "middle", "brick", "complete"]
MIRROR_PREFIX = "~"


class Block(BaseModel):
    """A graph fragment with left/right ports and ordered structural cells."""

    model_config = ConfigDict(frozen=True)

    tag: str = Field(..., description="Catalog tag, e.g. M0, D'3, ~D1")
    kind: BlockKind
    labels: Tuple[str, ...] = Field(..., description="Drawing name of each local vertex")
    graph: Graph
    left_port: Tuple[int, ...] = ()
    right_port: Tuple[int, ...] = ()
    cells: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="Structural cells, left to right"
    )
    reversal: Optional[Tuple[int, ...]] = Field(
        default=None, description="Automorphism exchanging the two sides"
    )

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def left_attach(self) -> Optional[int]:
        return self.left_port[0] if len(self.left_port) == 1 else None

    @property
    def right_attach(self) -> Optional[int]:
        return self.right_port[0] if len(self.right_port) == 1 else None

    @property
    def symmetric(self) -> bool:
        return self.reversal is not None

    def vertex(self, label: str) -> int:
        """Local id of a drawing name."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownKindError(f"Block {self.tag} has no vertex {label}") from None

    def cell_of(self, v: int) -> int:
        for i, cell in enumerate(self.cells):
            if v in cell:
                return i
        raise UnknownKindError(f"Vertex {v} is not in any cell of {self.tag}")


def parse_edges(labels: Sequence[str], spec: str) -> List[Tuple[int, int]]:
    """Turn "r-r1 r1-r2 ..." into local id pairs."""
    index = {name: i for i, name in enumerate(labels)}
    pairs = []
    for token in spec.split():
        a, b = token.split("-")
        pairs.append((index[a], index[b]))
    return pairs


def _names(spec: str) -> Tuple[str, ...]:
    return tuple(spec.split())


def _fixture(
    tag: str,
    kind: BlockKind,
    cells: Sequence[str],
    edges: str,
    left: str = "",
    right: str = "",
    swaps: str = "",
) -> Block:
    cell_names = [_names(c) for c in cells]
    labels = tuple(name for cell in cell_names for name in cell)
    index = {name: i for i, name in enumerate(labels)}
    reversal = None
    if swaps:
        perm = list(range(len(labels)))
        for pair in swaps.split():
            a, b = (index[x] for x in pair.split("-"))
            perm[a], perm[b] = b, a
        reversal = tuple(perm)
    offsets, cell_ids = 0, []
    for cell in cell_names:
        cell_ids.append(tuple(range(offsets, offsets + len(cell))))
        offsets += len(cell)
    return Block(
        tag=tag,
        kind=kind,
        labels=labels,
        graph=make_graph(len(labels), parse_edges(labels, edges)),
        left_port=tuple(index[x] for x in _names(left)),
        right_port=tuple(index[x] for x in _names(right)),
        cells=tuple(cell_ids),
        reversal=reversal,
    )


_SHORT_BLOCKS: Dict[str, Block] = {
    "M0": _fixture(
        "M0",
        "middle",
        ["r", "r1 r2", "r3 r4", "r5"],
        "r-r1 r-r2 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r4 r4-r5 r3-r5",
        left="r",
        right="r5",
        swaps="r-r5 r1-r3 r2-r4",
    ),
    "M1": _fixture(
        "M1",
        "middle",
        ["r", "r1 r2", "r3 r4", "r5 r6", "r7"],
        "r-r1 r-r2 r5-r6 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r5 r5-r3 "
        "r4-r6 r5-r7 r7-r6",
        left="r",
        right="r7",
        swaps="r-r7 r1-r5 r2-r6",
    ),
    "M2": _fixture(
        "M2",
        "middle",
        ["r", "r1 r2", "r3", "r4 r5", "r6 r7", "r8"],
        "r-r2 r1-r r1-r2 r1-r3 r1-r4 r2-r3 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 "
        "r5-r6 r4-r7 r6-r7 r6-r8 r7-r8",
        left="r",
        right="r8",
    ),
    "M3": _fixture(
        "M3",
        "middle",
        ["r", "r1 r2", "r3", "r4 r5", "r6"],
        "r-r1 r-r2 r1-r2 r1-r3 r1-r4 r2-r3 r2-r5 r3-r4 r3-r5 r5-r4 r6-r5 r6-r4",
        left="r",
        right="r6",
        swaps="r-r6 r1-r4 r2-r5",
    ),
    "D0": _fixture(
        "D0",
        "end",
        ["r r1 r2", "r3 r4", "r5"],
        "r-r1 r-r2 r-r3 r-r4 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r5-r4 r5-r3",
        right="r5",
    ),
    "D1": _fixture(
        "D1",
        "end",
        ["r1 r2 r3 r4", "r5 r6", "r7"],
        "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r6 "
        "r7-r6 r5-r7",
        right="r7",
    ),
    "D2": _fixture(
        "D2",
        "end",
        ["r1 r2", "r3 r4", "r5", "r6 r7", "r8"],
        "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r7 r5-r7 "
        "r5-r6 r6-r7 r7-r8 r6-r8",
        right="r8",
    ),
    "D3": _fixture(
        "D3",
        "end",
        ["r1 r2 r3 r4", "r5 r6", "r7 r8", "r9"],
        "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r8 "
        "r5-r7 r6-r8 r6-r7 r7-r8 r9-r7 r9-r8",
        right="r9",
    ),
    "D4": _fixture(
        "D4",
        "end",
        ["r1 r2 r3", "r4 r5", "r6 r7", "r8 r9", "r10"],
        "r1-r2 r1-r3 r1-r4 r1-r5 r2-r3 r2-r4 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 "
        "r6-r7 r6-r8 r6-r9 r8-r7 r7-r9 r8-r9 r8-r10 r9-r10",
        right="r10",
    ),
}

# Bricks drop the degree-2 attachment vertex (or both); the two neighbours of a
# dropped vertex become the brick's port on that side.
_BRICKS: Dict[str, Block] = {
    "D'0": _fixture(
        "D'0",
        "brick",
        ["r r1 r2", "r3 r4"],
        "r-r1 r-r2 r-r3 r-r4 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4",
        right="r3 r4",
    ),
    "D'3": _fixture(
        "D'3",
        "brick",
        ["r1 r2 r3 r4", "r5 r6", "r7 r8"],
        "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r8 "
        "r5-r7 r6-r8 r6-r7 r7-r8",
        right="r7 r8",
    ),
    "M'0": _fixture(
        "M'0",
        "brick",
        ["r", "r1 r2", "r3 r4"],
        "r-r1 r-r2 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r4",
        left="r",
        right="r3 r4",
    ),
    "M'1": _fixture(
        "M'1",
        "brick",
        ["r", "r1 r2", "r3 r4", "r5 r6"],
        "r-r1 r-r2 r5-r6 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r5 r5-r3 r4-r6",
        left="r",
        right="r5 r6",
    ),
    "M'2": _fixture(
        "M'2",
        "brick",
        ["r", "r1 r2", "r3", "r4 r5", "r6 r7"],
        "r-r2 r1-r r1-r2 r1-r3 r1-r4 r2-r3 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 "
        "r5-r6 r4-r7 r6-r7",
        left="r",
        right="r6 r7",
    ),
    "M''0": _fixture(
        "M''0",
        "brick",
        ["r1 r2", "r3 r4"],
        "r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r4",
        left="r1 r2",
        right="r3 r4",
        swaps="r1-r3 r2-r4",
    ),
    "M''1": _fixture(
        "M''1",
        "brick",
        ["r1 r2", "r3 r4", "r5 r6"],
        "r5-r6 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r5 r5-r3 r4-r6",
        left="r1 r2",
        right="r5 r6",
        swaps="r1-r5 r2-r6",
    ),
}


def mirror(b: Block) -> Block:
    """
    Mirror image of a block.

    Symmetric blocks are returned unchanged. Otherwise the ports swap sides,
    the cell order is reversed and the tag gains (or loses) the "~" prefix;
    the adjacency itself is untouched.
    """
    if b.symmetric:
        return b
    tag = b.tag[1:] if b.tag.startswith(MIRROR_PREFIX) else MIRROR_PREFIX + b.tag
    return b.model_copy(
        update={
            "tag": tag,
            "left_port": b.right_port,
            "right_port": b.left_port,
            "cells": tuple(reversed(b.cells)),
        }
    )


def mirror_tag(tag: str) -> str:
    return mirror(block(tag)).tag


def catalog_tags() -> List[str]:
    """All base tags (mirror images excluded)."""
    return list(_SHORT_BLOCKS) + list(_BRICKS)


def block(kind: str) -> Block:
    """
    Fixed catalog block by tag.

    Args:
        kind: Tag such as "M0", "D4", "D'3", "M''1" or a mirror "~D2"

    Raises:
        UnknownKindError: If the tag is not in the catalog
    """
    key = kind.strip().replace("’", "'")
    mirrored = key.startswith(MIRROR_PREFIX)
    base = key[1:] if mirrored else key
    found = _SHORT_BLOCKS.get(base) or _BRICKS.get(base)
    if found is None:
        raise UnknownKindError(f"Unknown block kind: {kind}")
    return mirror(found) if mirrored else found


def attachment_degrees_ok(b: Block) -> bool:
    """Attachment vertices have degree 2 and brick port vertices degree 3."""
    deg = degrees(b.graph)
    for port in (b.left_port, b.right_port):
        want = 2 if len(port) == 1 else 3
        if any(deg[v] != want for v in port):
            return False
    return True
