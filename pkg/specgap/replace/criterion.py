"""
Energy bookkeeping for a local replacement.

Let x be a unit Fiedler vector of G with eigenvalue mu, and x' the vector
carried over to G'. With S the replaced vertices:

- h is the energy of the G edges touching S, h' the same for G'
- ell is the energy of the remaining edges, identical on both graphs
- delta = x' . 1 and eps = |x'|^2 - delta^2 / n' - 1

Then x' L(G') x' - mu (|x'|^2 - delta^2 / n') = h' - h - eps mu, so a negative
criterion certifies mu(G') < mu(G).
"""

from typing import Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.domain.graph import Graph
from specgap.exceptions import DimensionMismatchError
from specgap.spectra.eigen import mu_of

ELL_TOL = 1e-9


class ReplacementOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    g_prime: Graph
    x_prime: List[float]
    mu_before: float
    h: float = Field(..., description="Energy of the old edges touching the replaced part")
    h_prime: float = Field(..., description="Energy of the new edges touching it")
    ell: float = Field(..., description="Energy of the untouched edges")
    delta: float
    epsilon: float
    criterion: float = Field(..., description="h' - h - epsilon * mu")
    bound_after: float = Field(..., description="(ell + h') / (1 + epsilon)")
    mu_after: float

    @property
    def decreased(self) -> bool:
        return self.mu_after < self.mu_before


def criterion(h: float, h_prime: float, epsilon: float, mu: float) -> float:
    """h' - h - eps * mu; negative means mu strictly decreases."""
    return h_prime - h - epsilon * mu


def split_energy(g: Graph, x: np.ndarray, touched: Set[int]) -> Tuple[float, float]:
    """(energy of edges touching `touched`, energy of the others)."""
    inside, outside = 0.0, 0.0
    for u, v in g.edges:
        d = float(x[u] - x[v]) ** 2
        if u in touched or v in touched:
            inside += d
        else:
            outside += d
    return inside, outside


def replacement_outcome(
    g: Graph,
    x: Sequence[float],
    mu: float,
    g_prime: Graph,
    x_prime: Sequence[float],
    touched: Iterable[int],
    touched_prime: Optional[Iterable[int]] = None,
) -> ReplacementOutcome:
    """
    Compute every quantity of a replacement.

    Args:
        g: Original graph, with unit Fiedler vector x for mu
        g_prime: Graph after the replacement, with carried vector x_prime
        touched: Replaced vertices of g
        touched_prime: Replacing vertices of g_prime (defaults to `touched`)

    Raises:
        DimensionMismatchError: If a vector does not match its graph
    """
    xv = np.asarray(x, dtype=np.float64)
    xp = np.asarray(x_prime, dtype=np.float64)
    if xv.shape != (g.n,) or xp.shape != (g_prime.n,):
        raise DimensionMismatchError("Vector lengths do not match the graphs")
    s = set(touched)
    sp = set(touched_prime) if touched_prime is not None else s

    h, ell = split_energy(g, xv, s)
    h_prime, ell_prime = split_energy(g_prime, xp, sp)
    if abs(ell - ell_prime) > ELL_TOL * max(1.0, ell):
        logger.warning(f"Untouched energy differs: {ell:.12g} vs {ell_prime:.12g}")

    delta = float(xp.sum())
    epsilon = float(xp @ xp) - delta * delta / g_prime.n - float(xv @ xv)
    return ReplacementOutcome(
        g_prime=g_prime,
        x_prime=[float(v) for v in xp],
        mu_before=mu,
        h=h,
        h_prime=h_prime,
        ell=ell,
        delta=delta,
        epsilon=epsilon,
        criterion=criterion(h, h_prime, epsilon, mu),
        bound_after=(ell_prime + h_prime) / (1.0 + epsilon),
        mu_after=mu_of(g_prime),
    )
