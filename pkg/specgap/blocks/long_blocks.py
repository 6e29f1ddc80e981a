"""Long blocks: bricks chained by pairs of parallel edges."""

from typing import List, Literal, Sequence, Tuple

from loguru import logger

from specgap.blocks.catalog import Block, block
from specgap.domain.graph import make_graph
from specgap.exceptions import GrammarViolationError

LongBlockType = Literal["end", "middle", "complete"]

_INTERIOR = {"M''0", "M''1"}
_END_HEADS = {"D'0", "D'3"}
_MIDDLE_HEADS = {"M'0", "M'1", "M'2"}
_TAILS = {"~M'0", "~M'1", "~M'2"}
_COMPLETE_TAILS = {"~D'0", "~D'3"}

_GRAMMAR = {
    "end": (_END_HEADS, _TAILS),
    "middle": (_MIDDLE_HEADS, _TAILS),
    "complete": (_END_HEADS, _COMPLETE_TAILS),
}


def _check_grammar(tags: List[str], type_: LongBlockType) -> None:
    if type_ not in _GRAMMAR:
        raise GrammarViolationError(f"Unknown long block type: {type_}")
    if len(tags) < 2:
        raise GrammarViolationError("A long block needs at least two bricks")
    heads, tails = _GRAMMAR[type_]
    if tags[0] not in heads:
        raise GrammarViolationError(
            f"A {type_} long block cannot start with {tags[0]}; "
            f"expected one of {sorted(heads)}"
        )
    if tags[-1] not in tails:
        raise GrammarViolationError(
            f"A {type_} long block cannot end with {tags[-1]}; "
            f"expected one of {sorted(tails)}"
        )
    for tag in tags[1:-1]:
        if tag not in _INTERIOR:
            raise GrammarViolationError(
                f"Interior brick {tag} must be one of {sorted(_INTERIOR)}"
            )


def build_long_block(bricks: Sequence[str], type_: LongBlockType) -> Block:
    """
    Chain bricks into a long block.

    The right port pair of each brick is joined to the left port pair of the
    next one by two parallel edges (first to first, second to second). A
    complete long block has no ports and is a quartic graph on its own.

    Args:
        bricks: Brick tags, mirror images written with a leading "~"
        type_: "end", "middle" or "complete"

    Raises:
        GrammarViolationError: If the sequence is not a long block of that type
    """
    parts = [block(tag) for tag in bricks]
    tags = [b.tag for b in parts]
    _check_grammar(tags, type_)

    edges: List[Tuple[int, int]] = []
    cells: List[Tuple[int, ...]] = []
    labels: List[str] = []
    mappings: List[List[int]] = []
    next_id = 0
    for i, b in enumerate(parts):
        mapping = [-1] * b.order
        for cell in b.cells:
            ids = []
            for v in cell:
                mapping[v] = next_id
                labels.append(f"{b.tag}:{b.labels[v]}")
                ids.append(next_id)
                next_id += 1
            cells.append(tuple(ids))
        edges.extend((mapping[u], mapping[v]) for u, v in b.graph.edges)
        if i > 0:
            prev, prev_map = parts[i - 1], mappings[-1]
            for u, v in zip(prev.right_port, b.left_port):
                edges.append((prev_map[u], mapping[v]))
        mappings.append(mapping)

    result = Block(
        tag="[" + ",".join(tags) + "]",
        kind=type_,
        labels=tuple(labels),
        graph=make_graph(next_id, edges),
        left_port=tuple(mappings[0][v] for v in parts[0].left_port),
        right_port=tuple(mappings[-1][v] for v in parts[-1].right_port),
        cells=tuple(cells),
    )
    logger.debug(f"Built {type_} long block {result.tag} on {result.order} vertices")
    return result
