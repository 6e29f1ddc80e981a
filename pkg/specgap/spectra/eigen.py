"""
Dense symmetric eigensolver and algebraic connectivity.

Every spectrum in specgap goes through eigen_sym(), a thin wrapper over LAPACK
(scipy.linalg.eigh) that fixes the sign of each eigenvector so repeated runs
give identical output.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.domain.graph import Graph, SymMatrix, laplacian
from specgap.exceptions import ConvergenceFailureError, InvalidInputError

SIGN_TOL = 1e-12


class SpectralReport(BaseModel):
    """Laplacian spectrum summary with a sign-normalized Fiedler vector."""

    model_config = ConfigDict(frozen=True)

    n: int
    eigenvalues: List[float] = Field(..., description="Ascending Laplacian spectrum")
    mu: float = Field(..., description="Second-smallest Laplacian eigenvalue")
    fiedler: List[float] = Field(..., description="Unit eigenvector for mu")
    gap23: Optional[float] = Field(
        default=None, description="lambda3 - lambda2, None when n < 3"
    )
    residual: float = Field(..., description="max |L x - mu x| over components")

    @property
    def vector(self) -> np.ndarray:
        return np.asarray(self.fiedler, dtype=np.float64)


def _orient(v: np.ndarray) -> np.ndarray:
    """Flip v so its first component of largest magnitude is positive."""
    if v.size == 0:
        return v
    peak = np.max(np.abs(v))
    first = int(np.argmax(np.abs(v) >= peak - SIGN_TOL))
    return -v if v[first] < 0 else v


def eigen_sym(m: SymMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """
    All eigenpairs of a symmetric matrix.

    Returns:
        (values, vectors): ascending eigenvalues and orthonormal eigenvectors
        as columns, each column oriented deterministically

    Raises:
        ConvergenceFailureError: If LAPACK does not converge
    """
    if m.order == 0:
        return np.zeros(0), np.zeros((0, 0))
    try:
        values, vectors = scipy.linalg.eigh(m.entries, check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceFailureError(f"Eigensolver failed on order {m.order}: {e}")
    vectors = np.column_stack([_orient(vectors[:, i]) for i in range(m.order)])
    return values, vectors


def orient_by_cell(x: np.ndarray, cell: Sequence[int]) -> np.ndarray:
    """
    Flip x so its sum over the given cell is positive.

    Falls back to the largest-magnitude rule when that sum vanishes.
    """
    total = float(np.sum(x[list(cell)])) if len(cell) else 0.0
    if abs(total) > SIGN_TOL:
        return -x if total < 0 else x
    return _orient(x)


def algebraic_connectivity(
    g: Graph, cells: Optional[Sequence[Sequence[int]]] = None
) -> SpectralReport:
    """
    mu(G), its Fiedler vector and the spectral diagnostics.

    Args:
        g: Graph with at least two vertices
        cells: Optional left-to-right structural cells; when given, the Fiedler
            vector is oriented to be positive on the leftmost cell

    Raises:
        InvalidInputError: If g has fewer than two vertices
        ConvergenceFailureError: If the eigensolver fails
    """
    if g.n < 2:
        raise InvalidInputError(f"Algebraic connectivity needs n >= 2, got {g.n}")
    lap = laplacian(g)
    values, vectors = eigen_sym(lap)
    x = vectors[:, 1]
    if cells:
        x = orient_by_cell(x, cells[0])
    mu = float(values[1])
    residual = float(np.max(np.abs(lap.entries @ x - mu * x)))
    gap23 = float(values[2] - values[1]) if g.n >= 3 else None
    logger.debug(f"mu = {mu:.12g} on {g.n} vertices (gap23={gap23})")
    return SpectralReport(
        n=g.n,
        eigenvalues=[float(v) for v in values],
        mu=mu,
        fiedler=[float(v) for v in x],
        gap23=gap23,
        residual=residual,
    )


def mu_of(g: Graph) -> float:
    """Just mu(G)."""
    return algebraic_connectivity(g).mu
