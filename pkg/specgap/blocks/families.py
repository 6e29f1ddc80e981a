"""
Named families of path-like quartic graphs.

- G_n: the conjectured minimizers, ends chosen by (n - 11) mod 5
- H_{i,j}(m): m middle blocks M0 between end blocks Di and ~Dj
- sequence specs: comma separated tags, with long blocks written as
  "long:<type>:<brick>+<brick>+..."
"""

from typing import List, Tuple

from specgap.blocks.assembly import Assembly, BlockLike, assemble
from specgap.blocks.catalog import MIRROR_PREFIX
from specgap.blocks.long_blocks import build_long_block
from specgap.exceptions import InvalidInputError, OrderTooSmallError

# (left end, right end) by r = (n - 11) mod 5
G_N_END_PAIRS: Tuple[Tuple[str, str], ...] = (
    ("D0", "D0"),
    ("D0", "D1"),
    ("D1", "D1"),
    ("D1", "D2"),
    ("D0", "D4"),
)
END_BLOCK_ORDERS = {"D0": 6, "D1": 7, "D2": 8, "D3": 9, "D4": 10}


def g_n_sequence(n: int) -> List[str]:
    if n < 11:
        raise OrderTooSmallError(f"G_n is defined for n >= 11, got {n}")
    m, r = divmod(n - 11, 5)
    left, right = G_N_END_PAIRS[r]
    return [left] + ["M0"] * m + [MIRROR_PREFIX + right]


def build_G_n(n: int) -> Assembly:
    """
    The graph G_n.

    Raises:
        OrderTooSmallError: If n < 11
    """
    return assemble(g_n_sequence(n))


def h_sequence(m: int, i: int, j: int) -> List[str]:
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    if not (0 <= i <= 4 and 0 <= j <= 4):
        raise InvalidInputError(f"End indices must lie in 0..4, got ({i}, {j})")
    return [f"D{i}"] + ["M0"] * m + [f"{MIRROR_PREFIX}D{j}"]


def build_H(m: int, i: int, j: int) -> Assembly:
    """H_{i,j}(m), of order |Di| + |Dj| + 5m - 1."""
    return assemble(h_sequence(m, i, j))


def h_order(m: int, i: int, j: int) -> int:
    return END_BLOCK_ORDERS[f"D{i}"] + END_BLOCK_ORDERS[f"D{j}"] + 5 * m - 1


def parse_sequence(spec: str) -> List[BlockLike]:
    """
    Parse "D0,M0,long:middle:M'1+M''0+~M'2,~D0" into blocks and tags.

    Raises:
        InvalidInputError: On an empty spec or a malformed long block entry
    """
    items: List[BlockLike] = []
    for raw in spec.split(","):
        token = raw.strip()
        if not token:
            continue
        if token.startswith("long:"):
            parts = token.split(":")
            if len(parts) != 3:
                raise InvalidInputError(f"Malformed long block entry: {token}")
            _, type_, bricks = parts
            items.append(build_long_block(bricks.split("+"), type_))  # type: ignore[arg-type]
        else:
            items.append(token)
    if not items:
        raise InvalidInputError("Empty block sequence")
    return items


def build_family(spec: str) -> Assembly:
    """
    Assembly from a family spec.

    Accepted forms: "gn:<n>", "h:<m>,<i>,<j>", "seq:<sequence>" or a bare
    sequence (see parse_sequence).
    """
    text = spec.strip()
    try:
        if text.startswith("gn:"):
            return build_G_n(int(text[3:]))
        if text.startswith("h:"):
            m, i, j = (int(v) for v in text[2:].split(","))
            return build_H(m, i, j)
    except ValueError as e:
        raise InvalidInputError(f"Malformed family spec {spec!r}: {e}") from e
    if text.startswith("seq:"):
        text = text[4:]
    return assemble(parse_sequence(text))
