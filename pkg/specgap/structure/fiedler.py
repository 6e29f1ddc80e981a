"""
Shape of the Fiedler vector on a path-like assembly.

On a minimal graph the Fiedler vector is constant on every structural cell,
and the cell values form a strictly decreasing sequence that changes sign once.
The heads of D'0, D1 and D'3 are the known exceptions to cell constancy; a
spread failure confined to those cells is reported separately.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.blocks.assembly import Assembly
from specgap.blocks.catalog import MIRROR_PREFIX, Block, mirror_tag
from specgap.config import CELL_SPREAD_TOL, DECREASE_MARGIN, GAP23_TOL, SKEW_TOL
from specgap.domain.graph import Graph
from specgap.exceptions import (
    DimensionMismatchError,
    NotPalindromicError,
    UnknownKindError,
)
from specgap.structure.partition import Partition, make_partition

EXCEPTIONAL_HEADS = {"D0", "D1", "D3", "D'0", "D'3"}


class FiedlerStructureReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    cell_means: List[float]
    max_spread: float = Field(..., description="Largest in-cell spread outside known exceptions")
    cell_constant: bool
    known_exceptions: List[int] = Field(
        default_factory=list,
        description="Exceptional head cells whose spread exceeds the tolerance",
    )
    decreasing: bool
    sign_changes: int
    zero_cells: List[int] = Field(
        default_factory=list, description="Cells whose mean is zero within tolerance"
    )
    skew_symmetric: Optional[bool] = None

    @property
    def passed(self) -> bool:
        ok = self.cell_constant and self.decreasing and self.sign_changes == 1
        return ok and self.skew_symmetric is not False


def structure_status(report: FiedlerStructureReport, gap23: Optional[float]) -> str:
    """"pass", "fail", or "indeterminate" when lambda3 - lambda2 is tiny."""
    if gap23 is not None and gap23 < GAP23_TOL:
        return "indeterminate"
    return "pass" if report.passed else "fail"


def structural_partition(a: Assembly) -> Partition:
    """Left-to-right structural cells of an assembly."""
    return make_partition(a.n, a.cell_order)


def _head_tag(b: Block) -> str:
    tag = b.tag
    if tag.startswith("["):
        tag = tag[1:].split(",")[0]
    return tag


def exceptional_cells(a: Assembly) -> List[int]:
    """Global cell indices holding the head of a D'0, D1 or D'3 style block."""
    member = {v: i for i, cell in enumerate(a.cell_order) for v in cell}
    found = set()
    for k, b in enumerate(a.blocks):
        head = _head_tag(b)
        mirrored = head.startswith(MIRROR_PREFIX)
        base = head[len(MIRROR_PREFIX) :] if mirrored else head
        if base not in EXCEPTIONAL_HEADS:
            continue
        # a mirrored short block lists its head cell last
        local = b.cells[-1] if mirrored and not b.tag.startswith("[") else b.cells[0]
        found.add(member[a.block_vertices[k][local[0]]])
    return sorted(found)


def fiedler_structure(
    g: Graph,
    x: Sequence[float],
    p: Partition,
    tol: float = CELL_SPREAD_TOL,
    margin: float = DECREASE_MARGIN,
    mirror: Optional[Sequence[int]] = None,
    exceptional: Sequence[int] = (),
) -> FiedlerStructureReport:
    """
    Check cell constancy, strict decrease and the single sign change.

    Args:
        g: Graph the vector lives on
        x: Candidate Fiedler vector
        p: Cells ordered left to right
        tol: Allowed in-cell spread, also the zero threshold for cell means
        margin: Required drop between consecutive cell means
        mirror: Optional involution; when given, skew symmetry x = -x o mirror
            is tested
        exceptional: Cells exempt from the spread test

    Raises:
        DimensionMismatchError: If x or p does not match g
    """
    v = np.asarray(x, dtype=np.float64)
    if v.shape != (g.n,) or p.n != g.n:
        raise DimensionMismatchError(
            f"Vector of length {v.size} / partition of {p.n} on a graph of order {g.n}"
        )

    means: List[float] = []
    max_spread = 0.0
    known: List[int] = []
    exempt = set(exceptional)
    for i, cell in enumerate(p.cells):
        values = v[list(cell)]
        means.append(float(values.mean()))
        spread = float(values.max() - values.min())
        if i in exempt and spread > tol:
            known.append(i)
            continue
        max_spread = max(max_spread, spread)
    if known:
        logger.warning(f"Known exceptional cells not constant: {known}")

    decreasing = len(means) > 1 and all(
        means[i] - means[i + 1] > margin for i in range(len(means) - 1)
    )

    zero_cells = [i for i, m in enumerate(means) if abs(m) <= tol]
    signs = [np.sign(m) for i, m in enumerate(means) if i not in zero_cells]
    sign_changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    skew: Optional[bool] = None
    if mirror is not None:
        perm = np.asarray(mirror, dtype=np.int64)
        skew = bool(np.max(np.abs(v + v[perm])) <= SKEW_TOL) if g.n else True

    return FiedlerStructureReport(
        cell_means=means,
        max_spread=max_spread,
        cell_constant=max_spread <= tol,
        known_exceptions=known,
        decreasing=decreasing,
        sign_changes=sign_changes,
        zero_cells=zero_cells,
        skew_symmetric=skew,
    )


def is_palindromic(a: Assembly) -> bool:
    try:
        mirrored = [mirror_tag(t) for t in reversed(a.tags)]
    except UnknownKindError:
        return False
    return mirrored == a.tags


def mirror_map(a: Assembly) -> Tuple[int, ...]:
    """
    Vertex involution exchanging the two ends of a palindromic assembly.

    Raises:
        NotPalindromicError: If the block sequence is not its own mirrored
            reverse, or the induced map is not an automorphism
    """
    if not is_palindromic(a):
        raise NotPalindromicError(f"Assembly {a.tags} is not palindromic")
    count = len(a.blocks)
    perm = [-1] * a.n
    for k, b in enumerate(a.blocks):
        partner = a.block_vertices[count - 1 - k]
        local = b.reversal if b.symmetric else tuple(range(b.order))
        for v in range(b.order):
            perm[a.block_vertices[k][v]] = partner[local[v]]

    edges = set(a.graph.edges)
    for u, w in a.graph.edges:
        pu, pw = perm[u], perm[w]
        if (min(pu, pw), max(pu, pw)) not in edges:
            raise NotPalindromicError(f"Mirror of {a.tags} is not an automorphism")
    return tuple(perm)
