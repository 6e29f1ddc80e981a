"""
Lemma gadgets.

A gadget is a fixed subgraph together with its frontier: every vertex that has
edges leaving the gadget lists one stub per external edge. Gadgets come in
pairs (H, H') with the same number of vertices and edges; vertex i of H is
replaced by vertex i of H', and stub slot i of H hands its external edge to
stub slot i of H'.

Each vertex also carries a value label naming the Fiedler component it holds
("x1", "x_r", "z2", ...). A label of None means the vertex keeps whatever value
the host vector has there.
"""

import re
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from specgap.blocks.assembly import glue
from specgap.blocks.catalog import parse_edges
from specgap.blocks.long_blocks import build_long_block
from specgap.domain.graph import Graph, degrees, make_graph
from specgap.exceptions import InvalidInputError, UnknownKindError


class Gadget(BaseModel):
    """A subgraph with stubs and per-vertex value labels."""

    model_config = ConfigDict(frozen=True)

    name: str
    labels: Tuple[str, ...] = Field(..., description="Drawing name of each vertex")
    graph: Graph
    stubs: Tuple[int, ...] = Field(
        default=(), description="One entry per external edge, in slot order"
    )
    values: Tuple[Optional[str], ...] = Field(
        default=(), description="Value label per vertex; None keeps the host value"
    )

    @model_validator(mode="after")
    def _frontier_is_quartic(self) -> "Gadget":
        if self.values and len(self.values) != self.graph.n:
            raise InvalidInputError(
                f"Gadget {self.name}: {len(self.values)} value labels for "
                f"{self.graph.n} vertices"
            )
        deg = degrees(self.graph)
        for v in self.stubs:
            deg[v] += 1
        if self.stubs and any(d != 4 for d in deg):
            raise InvalidInputError(
                f"Gadget {self.name}: degree plus stubs is not 4 everywhere"
            )
        return self

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def frontier(self) -> List[int]:
        return sorted(set(self.stubs))

    def vertex(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownKindError(f"Gadget {self.name} has no vertex {label}") from None


class GadgetPair(BaseModel):
    """A forbidden subgraph and the replacement that lowers the connectivity."""

    model_config = ConfigDict(frozen=True)

    name: str
    host: Gadget
    replacement: Gadget
    boundary: Dict[str, int] = Field(
        default_factory=dict,
        description="Free value labels and the host-gadget vertex carrying each",
    )

    @model_validator(mode="after")
    def _shapes_agree(self) -> "GadgetPair":
        h, hp = self.host, self.replacement
        if h.order != hp.order or h.graph.size != hp.graph.size:
            raise InvalidInputError(
                f"Pair {self.name}: H and H' differ in vertex or edge count"
            )
        if len(h.stubs) != len(hp.stubs):
            raise InvalidInputError(f"Pair {self.name}: stub slot counts differ")
        return self


def _gadget(
    name: str,
    labels: str,
    edges: str,
    stubs: str = "",
    values: Sequence[Optional[str]] = (),
) -> Gadget:
    names = tuple(labels.split())
    index = {v: i for i, v in enumerate(names)}
    return Gadget(
        name=name,
        labels=names,
        graph=make_graph(len(names), parse_edges(names, edges)),
        stubs=tuple(index[v] for v in stubs.split()),
        values=tuple(values),
    )


_R1_R8 = "r1 r2 r3 r4 r5 r6 r7 r8"
_R1_R9 = _R1_R8 + " r9"
# D'3 and D3 share this head
_D3_HEAD = (
    "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r8 "
    "r5-r7 r6-r8 r6-r7 r7-r8"
)
_D0_PLUS_K4 = (
    "r1-r2 r1-r3 r1-r4 r1-r5 r2-r3 r2-r4 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 "
    "r6-r7 r6-r8 r6-r9 r8-r7 r7-r9"
)
_D1_HEAD = "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6"

_PAIRS: Dict[str, GadgetPair] = {
    # D'3 closing a long end block, replaced by the short end block D2
    "E3": GadgetPair(
        name="E3",
        host=_gadget(
            "E3",
            _R1_R8,
            _D3_HEAD,
            stubs="r7 r8",
            values=["x1"] * 4 + ["x2"] * 2 + ["x3"] * 2,
        ),
        replacement=_gadget(
            "E3'",
            _R1_R8,
            "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r7 r5-r7 "
            "r5-r6 r6-r7 r7-r8 r6-r8",
            stubs="r8 r8",
            values=["x1"] * 4 + ["x2"] * 3 + ["x3"],
        ),
        boundary={"x1": 0},
    ),
    # D'0 + M''0 inside a long block, replaced by D3
    "E1": GadgetPair(
        name="E1",
        host=_gadget(
            "E1",
            _R1_R9,
            _D0_PLUS_K4 + " r8-r9",
            stubs="r8 r9",
            values=["x1"] * 3 + ["x2"] * 2 + ["x3"] * 2 + ["x4"] * 2,
        ),
        replacement=_gadget(
            "E1'",
            _R1_R9,
            _D3_HEAD + " r9-r7 r9-r8",
            stubs="r9 r9",
            values=["z1"] * 4 + ["z2"] * 2 + ["z3"] * 2 + ["x4"],
        ),
        boundary={"x1": 0},
    ),
    # D'0 + M''1 or D'0 + ~M'2: the last pair keeps its host values
    "E2": GadgetPair(
        name="E2",
        host=_gadget(
            "E2",
            _R1_R9,
            _D0_PLUS_K4,
            stubs="r8 r8 r9 r9",
            values=["x1"] * 3 + ["x2"] * 2 + ["x3"] * 2 + [None, None],
        ),
        replacement=_gadget(
            "E2'",
            _R1_R9,
            _D1_HEAD + " r5-r6 r7-r6 r5-r7 r9-r8 r7-r8 r7-r9",
            stubs="r8 r8 r9 r9",
            values=["x1"] * 4 + ["x2"] * 2 + ["x3", None, None],
        ),
        boundary={"x1": 0},
    ),
    "H1": GadgetPair(
        name="H1",
        host=_gadget(
            "H1",
            "r1 r2 r3 r4 r5 r6 r7",
            "r1-r2 r1-r3 r2-r3 r3-r4 r3-r5 r4-r5 r4-r6 r4-r7 r5-r7 r5-r6",
            stubs="r1 r1 r2 r2 r6 r6 r7 r7",
            values=["x_r", "x_r", "x_r1", "x_r2", "x_r2", "x_r3", "x_r3"],
        ),
        replacement=_gadget(
            "H1'",
            "r1 r2 r3 r4 r5 r6 r7",
            "r1-r3 r1-r4 r2-r3 r2-r4 r3-r4 r3-r5 r4-r5 r5-r6 r5-r7 r6-r7",
            stubs="r1 r1 r2 r2 r6 r6 r7 r7",
            values=["x_r", "x_r", "z_r1", "z_r1", "z_r2", "x_r3", "x_r3"],
        ),
        boundary={"x_r": 0, "x_r3": 5},
    ),
    "H2": GadgetPair(
        name="H2",
        host=_gadget(
            "H2",
            _R1_R8,
            "r1-r2 r1-r3 r2-r3 r3-r4 r3-r5 r4-r5 r4-r6 r4-r7 r5-r6 r5-r8 "
            "r6-r7 r6-r8",
            stubs="r1 r1 r2 r2 r7 r7 r8 r8",
            values=["x_r", "x_r", "x_r1", "x_r2", "x_r2", "x_r3", "x_r4", "x_r4"],
        ),
        replacement=_gadget(
            "H2'",
            _R1_R8,
            "r1-r3 r1-r4 r2-r3 r2-r5 r3-r4 r3-r5 r4-r5 r4-r6 r5-r6 r6-r7 "
            "r6-r8 r8-r7",
            stubs="r1 r1 r2 r2 r7 r7 r8 r8",
            values=["x_r", "x_r", "z_r1", "z_r2", "z_r2", "z_r3", "x_r4", "x_r4"],
        ),
        boundary={"x_r": 0, "x_r4": 6},
    ),
    "H3": GadgetPair(
        name="H3",
        host=_gadget(
            "H3",
            _R1_R9,
            "r1-r2 r1-r3 r2-r3 r3-r4 r3-r5 r4-r5 r4-r6 r4-r7 r5-r7 r5-r6 "
            "r7-r6 r8-r6 r7-r9 r8-r9",
            stubs="r1 r1 r2 r2 r8 r8 r9 r9",
            values=["x_r", "x_r", "x_r1"]
            + ["x_r2"] * 2
            + ["x_r3"] * 2
            + ["x_r4"] * 2,
        ),
        replacement=_gadget(
            "H3'",
            "r r0 r1 r2 r3 r4 r5 r6 r7",
            "r-r0 r-r1 r0-r2 r1-r2 r1-r4 r1-r3 r2-r3 r2-r4 r3-r4 r3-r5 r4-r5 "
            "r5-r6 r5-r7 r6-r7",
            stubs="r r r0 r0 r6 r6 r7 r7",
            values=["x_r", "x_r"]
            + ["z_r1"] * 2
            + ["z_r2"] * 2
            + ["z_r3"]
            + ["x_r4"] * 2,
        ),
        boundary={"x_r": 0, "x_r4": 7},
    ),
    # x_r lives outside the gadget, on the left neighbours of r3 and r4
    "H4": GadgetPair(
        name="H4",
        host=_gadget(
            "H4",
            "r3 r4 r5 r6 r7 r8 r9 r10",
            "r4-r3 r3-r5 r4-r5 r5-r7 r5-r6 r7-r6 r8-r6 r6-r9 r8-r7 r10-r7 "
            "r8-r9 r8-r10 r9-r10",
            stubs="r3 r3 r4 r4 r9 r10",
            values=["x_r1", "x_r1", "x_r2", "x_r3", "x_r3", "x_r4", "x_r5", "x_r5"],
        ),
        replacement=_gadget(
            "H4'",
            "r3 r4 r5 r6 r7 r8 r9 r10",
            "r4-r3 r3-r5 r4-r5 r4-r6 r5-r6 r7-r6 r8-r6 r7-r9 r8-r7 r10-r7 "
            "r8-r9 r8-r10 r9-r10",
            stubs="r3 r3 r4 r5 r9 r10",
            values=["z_r1", "z_r2", "z_r2", "z_r3", "z_r4", "z_r4", "x_r5", "x_r5"],
        ),
        boundary={"x_r5": 6},
    ),
    # D0M3 replaced by D1 followed by M0
    "H5": GadgetPair(
        name="H5",
        host=_gadget(
            "H5",
            "r r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11",
            "r-r1 r-r2 r-r3 r-r4 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r5-r4 r5-r3 "
            "r5-r6 r5-r7 r6-r7 r6-r8 r6-r9 r7-r8 r7-r10 r9-r8 r8-r10 r9-r10 "
            "r9-r11 r10-r11",
            stubs="r11 r11",
            values=["x1"] * 3
            + ["x2"] * 2
            + ["x3"]
            + ["x4"] * 2
            + ["x5"]
            + ["x6"] * 2
            + [None],
        ),
        replacement=_gadget(
            "H5'",
            "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11 r12",
            _D1_HEAD + " r5-r6 r7-r6 r5-r7 r7-r8 r9-r7 r9-r8 r10-r8 r11-r8 "
            "r10-r9 r9-r11 r10-r11 r10-r12 r11-r12",
            stubs="r12 r12",
            values=["z1"] * 4
            + ["z2"] * 2
            + ["z3"]
            + ["z4"] * 2
            + ["x6"] * 2
            + [None],
        ),
        boundary={"x1": 0},
    ),
    # D2M3 replaced by D3 followed by M0
    "H6": GadgetPair(
        name="H6",
        host=_gadget(
            "H6",
            "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r r11 r12 r13",
            "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r7 "
            "r5-r7 r5-r6 r6-r7 r7-r8 r6-r8 r8-r9 r10-r8 r9-r10 r9-r11 r9-r "
            "r10-r r11-r r12-r r10-r12 r12-r11 r11-r13 r12-r13",
            stubs="r13 r13",
            values=["x1", "x1", "x2", "x2", "x3", "x4", "x4", "x5"]
            + ["x6", "x6", "x7", "x8", "x8", None],
        ),
        replacement=_gadget(
            "H6'",
            "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11 r12 r13 r14",
            _D3_HEAD + " r9-r7 r9-r8 r10-r9 r11-r9 r11-r10 r10-r12 r10-r13 "
            "r12-r11 r11-r13 r12-r13 r14-r13 r12-r14",
            stubs="r14 r14",
            values=["z1"] * 4
            + ["z2"] * 2
            + ["z3"] * 2
            + ["z4"]
            + ["z5"] * 2
            + ["x8"] * 2
            + [None],
        ),
        boundary={"x8": 11},
    ),
}

PAIR_NAMES: Tuple[str, ...] = tuple(_PAIRS)

# Complete long blocks of the small-order comparison, with the graphs that beat them
COMPARISON_BLOCKS: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    "long14": (("D'0", "M''0", "~D'0"), ("D1", "~D2")),
    "long17": (("D'0", "M''0", "~D'3"), ("D0", "M0", "~D1")),
}


def _normalize(name: str) -> str:
    key = name.strip().replace("’", "'").replace("_", "").replace("{", "")
    key = key.replace("}", "")
    # H'1 -> H1'
    match = re.fullmatch(r"([EH])'(\d)", key)
    if match:
        key = f"{match.group(1)}{match.group(2)}'"
    return key


def gadget_pair(name: str) -> GadgetPair:
    """
    Replacement pair by lemma name ("E1".."E3", "H1".."H6").

    Raises:
        UnknownKindError: If no pair carries that name
    """
    key = _normalize(name).rstrip("'")
    if key not in _PAIRS:
        raise UnknownKindError(f"Unknown gadget pair: {name}")
    return _PAIRS[key]


def gadget(name: str) -> Gadget:
    """
    Gadget by name.

    Accepts a pair member ("H1", "H1'", "H'_1", "E2'"), an end block glued to
    M3 ("D0M3" .. "D4M3", "D_2M_3") or a comparison block ("long14",
    "long17"). Glued and comparison gadgets carry no value labels.

    Raises:
        UnknownKindError: If the name matches nothing
    """
    raw = name.strip()
    if raw in COMPARISON_BLOCKS:
        bricks, _ = COMPARISON_BLOCKS[raw]
        b = build_long_block(list(bricks), "complete")
        return Gadget(name=raw, labels=b.labels, graph=b.graph)

    key = _normalize(raw)
    match = re.fullmatch(r"D(\d)M3", key)
    if match:
        combined, _, _ = glue([f"D{match.group(1)}", "M3"], tag=key)
        # The right attachment of M3 keeps two external edges
        right = combined.right_port[0]
        return Gadget(
            name=key,
            labels=combined.labels,
            graph=combined.graph,
            stubs=(right, right),
        )

    pair = gadget_pair(key)
    return pair.replacement if key.endswith("'") else pair.host
