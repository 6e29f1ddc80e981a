"""Replacing an end block by one that fits it."""

from typing import List, Literal, Optional

import numpy as np
from loguru import logger

from specgap.blocks.assembly import Assembly, assemble
from specgap.blocks.catalog import MIRROR_PREFIX, Block, mirror
from specgap.config import CELL_SPREAD_TOL
from specgap.exceptions import CellNotConstantError, FitViolatedError
from specgap.replace.criterion import ReplacementOutcome, replacement_outcome
from specgap.replace.fits import (
    FitWitness,
    attachments_in_last_cells,
    check_fit,
    equitable_partitions,
    find_fit_partition,
)
from specgap.spectra.eigen import algebraic_connectivity
from specgap.structure.partition import Partition

End = Literal["left", "right"]


def _oriented(b: Block, end: End) -> Block:
    mirrored = b.tag.startswith(MIRROR_PREFIX)
    if (end == "right") != mirrored and not b.symmetric:
        return mirror(b)
    return b


def _end_index(a: Assembly, end: End) -> int:
    return 0 if end == "left" else len(a.blocks) - 1


def end_block_values(a: Assembly, end: End = "left") -> np.ndarray:
    """Fiedler components of an assembly restricted to one end block, local ids."""
    k = _end_index(a, end)
    x = algebraic_connectivity(a.graph, a.cell_order).vector
    return x[list(a.block_vertices[k])]


def constant_on_cells(
    values: np.ndarray, p: Partition, tol: float = CELL_SPREAD_TOL
) -> bool:
    return all(float(np.ptp(values[list(cell)])) <= tol for cell in p.cells)


def fit_for_end(
    a: Assembly, d_prime: Block, end: End = "left", p_max: int = 6
) -> Optional[FitWitness]:
    """A fit witness whose partition of the end block carries a constant Fiedler vector."""
    d = a.blocks[_end_index(a, end)]
    values = end_block_values(a, end)
    for pi in equitable_partitions(d, p_max):
        if not constant_on_cells(values, pi):
            continue
        witness = find_fit_partition(d, d_prime, pi=pi)
        if witness is not None:
            return witness
    return None


def replace_end_block(
    g: Assembly, d_prime: Block, w: FitWitness, end: End = "left"
) -> ReplacementOutcome:
    """
    Swap an end block D of g for d_prime and carry the Fiedler vector over.

    On each cell C'_i of d_prime the new vector takes the common value a_i of
    the Fiedler vector on C_i; elsewhere it agrees with the Fiedler vector.

    Args:
        g: Assembly whose end block is replaced
        d_prime: Replacement block, in either orientation
        w: Witness that d_prime fits the end block
        end: Which end to replace

    Raises:
        FitViolatedError: If w does not show a fit with both attachment
            vertices in the last cells
        CellNotConstantError: If the Fiedler vector of g is not constant on a
            cell of w.pi
    """
    k = _end_index(g, end)
    d = g.blocks[k]
    new = _oriented(d_prime, end)
    if not check_fit(d, new, w) or not attachments_in_last_cells(d, new, w):
        raise FitViolatedError(f"{d_prime.tag} does not fit {d.tag} with this witness")

    report = algebraic_connectivity(g.graph, g.cell_order)
    x = report.vector
    local = x[list(g.block_vertices[k])]
    cell_values: List[float] = []
    for i, cell in enumerate(w.pi.cells):
        values = local[list(cell)]
        spread = float(np.ptp(values))
        if spread > CELL_SPREAD_TOL:
            raise CellNotConstantError(
                f"Fiedler vector varies by {spread:.3g} on cell {i} of {d.tag}"
            )
        cell_values.append(float(values.mean()))

    blocks = list(g.blocks)
    blocks[k] = new
    g_new = assemble(blocks)

    x_new = np.zeros(g_new.n)
    for j in range(len(blocks)):
        if j == k:
            continue
        old_ids, new_ids = g.block_vertices[j], g_new.block_vertices[j]
        for v in range(blocks[j].order):
            x_new[new_ids[v]] = x[old_ids[v]]
    index = w.pi_prime.cell_index()
    for v in range(new.order):
        x_new[g_new.block_vertices[k][v]] = cell_values[index[v]]

    outcome = replacement_outcome(
        g.graph,
        x,
        report.mu,
        g_new.graph,
        x_new,
        touched=g.block_vertices[k],
        touched_prime=g_new.block_vertices[k],
    )
    logger.debug(
        f"{d.tag} -> {new.tag}: mu {outcome.mu_before:.12g} -> {outcome.mu_after:.12g} "
        f"(bound {outcome.bound_after:.12g})"
    )
    return outcome
