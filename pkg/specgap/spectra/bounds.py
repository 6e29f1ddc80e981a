"""
Rayleigh-type bounds and closed forms.

- rayleigh(): sum over edges of (x_i - x_j)^2 divided by |x|^2
- shifted_bound(): mu(G) <= x L x / (|x|^2 - delta^2 / n) with delta = x . 1,
  valid for any non-constant x
- relaxation_time(): k / mu for a connected k-regular graph
- test_vector_H00(), closed_form_f(): the explicit upper bound on H_{0,0}(m)
"""

import math
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from specgap.blocks.assembly import Assembly
from specgap.blocks.families import build_H
from specgap.domain.graph import (
    Graph,
    SymMatrix,
    adjacency_matrix,
    degrees,
    is_connected,
)
from specgap.exceptions import (
    ConstantVectorError,
    ConvergenceFailureError,
    DimensionMismatchError,
    DisconnectedError,
    InvalidInputError,
    NotRegularError,
    ZeroVectorError,
)
from specgap.spectra.eigen import algebraic_connectivity, eigen_sym

RELAXATION_TOL = 1e-8
CONSTANT_TOL = 1e-14


class ShiftedBoundResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    delta: float
    energy: float
    denominator: float
    bound: float


def _as_vector(g: Graph, x: Sequence[float]) -> np.ndarray:
    v = np.asarray(x, dtype=np.float64)
    if v.shape != (g.n,):
        raise DimensionMismatchError(
            f"Vector of length {v.size} does not match a graph on {g.n} vertices"
        )
    return v


def energy(g: Graph, x: Sequence[float]) -> float:
    """x L x^T as a sum over edges."""
    v = _as_vector(g, x)
    if not g.edges:
        return 0.0
    idx = np.array(g.edges, dtype=np.int64)
    diff = v[idx[:, 0]] - v[idx[:, 1]]
    return float(diff @ diff)


def rayleigh(g: Graph, x: Sequence[float]) -> float:
    """
    Rayleigh quotient of the Laplacian.

    Raises:
        ZeroVectorError: If x is the zero vector
    """
    v = _as_vector(g, x)
    norm2 = float(v @ v)
    if norm2 == 0.0:
        raise ZeroVectorError("Rayleigh quotient of the zero vector")
    return energy(g, v) / norm2


def shifted_bound(g: Graph, x: Sequence[float]) -> ShiftedBoundResult:
    """
    Upper bound on mu(G) from a vector that need not be orthogonal to 1.

    Raises:
        ConstantVectorError: If x is a multiple of the all-ones vector
    """
    v = _as_vector(g, x)
    delta = float(v.sum())
    denominator = float(v @ v) - delta * delta / g.n
    if denominator <= CONSTANT_TOL * max(1.0, float(v @ v)):
        raise ConstantVectorError("Shifted bound needs a non-constant vector")
    e = energy(g, v)
    return ShiftedBoundResult(
        delta=delta, energy=e, denominator=denominator, bound=e / denominator
    )


def relaxation_time(g: Graph) -> float:
    """
    Relaxation time k / mu of the simple random walk on a k-regular graph.

    The value is cross-checked against 1 / (1 - eta2), eta2 being the second
    largest eigenvalue of the transition matrix A / k.

    Raises:
        NotRegularError: If g is not regular
        DisconnectedError: If g is not connected
    """
    deg = degrees(g)
    if not deg or len(set(deg)) != 1 or deg[0] == 0:
        raise NotRegularError("Relaxation time needs a regular graph of positive degree")
    if not is_connected(g):
        raise DisconnectedError("Relaxation time needs a connected graph")
    k = deg[0]
    tau = k / algebraic_connectivity(g).mu

    transition = SymMatrix(order=g.n, entries=adjacency_matrix(g) / k)
    values, _ = eigen_sym(transition)
    eta2 = float(values[-2])
    tau_walk = 1.0 / (1.0 - eta2)
    if abs(tau - tau_walk) > RELAXATION_TOL * max(1.0, tau):
        raise ConvergenceFailureError(
            f"Relaxation times disagree: k/mu={tau:.12g}, 1/(1-eta2)={tau_walk:.12g}"
        )
    return tau


def path_mu(h: int) -> float:
    """mu(P_h) = 2(1 - cos(pi / h))."""
    if h < 2:
        raise InvalidInputError(f"Path needs at least two vertices, got {h}")
    return 2.0 * (1.0 - math.cos(math.pi / h))


def cut_values(m: int) -> np.ndarray:
    """cos((2i - 1) pi / (2m + 2)) for i = 1..m+1."""
    i = np.arange(1, m + 2)
    return np.cos((2 * i - 1) * np.pi / (2 * m + 2))


def test_vector_H00(m: int, assembly: Optional[Assembly] = None) -> np.ndarray:
    """
    Skew-symmetric test vector on H_{0,0}(m).

    The i-th cut vertex carries x_i = cos((2i - 1) pi / (2m + 2)); the left end
    block is constant x_1 and the right end block constant x_{m+1}. Inside the
    k-th middle block the pair next to the left cut gets (3 x_k + 2 x_{k+1}) / 5
    and the pair next to the right cut (2 x_k + 3 x_{k+1}) / 5.
    """
    if m < 1:
        raise InvalidInputError(f"test_vector_H00 needs m >= 1, got {m}")
    a = assembly or build_H(m, 0, 0)
    x = cut_values(m)
    out = np.zeros(a.n)
    out[list(a.block_vertices[0])] = x[0]
    out[list(a.block_vertices[-1])] = x[m]
    for k in range(1, m + 1):
        b, mapping = a.blocks[k], a.block_vertices[k]
        left, right = x[k - 1], x[k]
        near = (3 * left + 2 * right) / 5
        far = (2 * left + 3 * right) / 5
        out[mapping[b.vertex("r")]] = left
        out[mapping[b.vertex("r5")]] = right
        for name in ("r1", "r2"):
            out[mapping[b.vertex(name)]] = near
        for name in ("r3", "r4"):
            out[mapping[b.vertex(name)]] = far
    return out


def closed_form_f(m: int) -> float:
    """Closed-form upper bound on the Rayleigh quotient of the H_{0,0}(m) test vector."""
    if m < 1:
        raise InvalidInputError(f"closed_form_f needs m >= 1, got {m}")
    theta = math.pi / (2 * m + 2)
    numerator = 40 * (m + 1) * math.sin(theta) ** 2
    denominator = 77 * ((m + 1) / 2 - math.cos(theta) ** 2) + 24 * (
        m * math.cos(math.pi / (m + 1)) - 1
    )
    return numerator / denominator
