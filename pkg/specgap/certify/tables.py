"""
Batch verifications over the G_n and H_{i,j}(m) families.

Each verification returns a report whose rows are pure computations; rows are
produced in parallel and kept in input order.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.blocks.families import build_G_n, build_H
from specgap.config import get_threads
from specgap.exceptions import InvalidInputError
from specgap.polyroots.claims import MU_BOUND_BY_ORDER
from specgap.spectra import bounds
from specgap.spectra.eigen import mu_of

T = TypeVar("T")
R = TypeVar("R")

TABLE2_ORDERS = range(11, 41)
ASYMPTOTIC_ORDERS = (100, 200, 500)
SANDWICH_RANGE = range(1, 13)
H00_RANGE = range(1, 51)

SANDWICH_TOL = 1e-9
RAYLEIGH_TOL = 1e-12
ORTHOGONALITY_TOL = 1e-10
ASYMPTOTIC_WINDOW = 0.10
F6_BOUND = 0.046


def _parallel(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int]) -> List[R]:
    with ThreadPoolExecutor(max_workers=threads or get_threads()) as pool:
        return list(pool.map(fn, items))


def ceil3(x: float) -> float:
    """Round up to three decimals."""
    return math.ceil(round(x * 1000, 9)) / 1000


# ============================================================================
# mu(G_n) bounds
# ============================================================================


class Table2Row(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    mu: float
    rounded_up: float
    quoted: Optional[float] = None
    decreasing: bool = Field(..., description="Strictly below the previous row")

    @property
    def passed(self) -> bool:
        quoted_ok = self.quoted is None or math.isclose(self.rounded_up, self.quoted)
        return quoted_ok and self.decreasing


class Table2Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[Table2Row]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows)


def verify_table2(
    orders: Sequence[int] = TABLE2_ORDERS, threads: Optional[int] = None
) -> Table2Report:
    """mu(G_n) over a range of orders, checked against the quoted upper bounds."""
    ns = sorted(orders)
    if not ns:
        raise InvalidInputError("at least one order is required")
    mus = _parallel(lambda n: mu_of(build_G_n(n).graph), ns, threads)
    rows = []
    for i, (n, mu) in enumerate(zip(ns, mus)):
        rows.append(
            Table2Row(
                n=n,
                mu=mu,
                rounded_up=ceil3(mu),
                quoted=MU_BOUND_BY_ORDER.get(n),
                decreasing=i == 0 or mu < mus[i - 1],
            )
        )
    report = Table2Report(rows=rows)
    logger.info(f"mu(G_n) bounds over n={ns[0]}..{ns[-1]}: passed={report.all_passed}")
    return report


# ============================================================================
# Asymptotics
# ============================================================================


class AsymptoticRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    mu: float
    ratio: float = Field(..., description="n^2 mu / (4 pi^2)")
    relaxation_time: float
    walk_bound_ratio: float = Field(
        ..., description="tau * 2 pi^2 / (3 n^2); the general regular-graph bound is 1"
    )

    @property
    def walk_bound_slack(self) -> bool:
        return self.walk_bound_ratio < 1.0


class AsymptoticReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[AsymptoticRow]

    @property
    def converging(self) -> bool:
        errors = [abs(r.ratio - 1.0) for r in self.rows]
        return all(b < a for a, b in zip(errors, errors[1:]))

    @property
    def within_window(self) -> bool:
        return bool(self.rows) and abs(self.rows[-1].ratio - 1.0) <= ASYMPTOTIC_WINDOW

    @property
    def all_passed(self) -> bool:
        return (
            self.converging
            and self.within_window
            and all(r.walk_bound_slack for r in self.rows)
        )


def _asymptotic_row(n: int) -> AsymptoticRow:
    g = build_G_n(n).graph
    mu = mu_of(g)
    tau = bounds.relaxation_time(g)
    return AsymptoticRow(
        n=n,
        mu=mu,
        ratio=n * n * mu / (4 * math.pi**2),
        relaxation_time=tau,
        walk_bound_ratio=tau * 2 * math.pi**2 / (3 * n * n),
    )


def verify_asymptotic(
    orders: Sequence[int] = ASYMPTOTIC_ORDERS, threads: Optional[int] = None
) -> AsymptoticReport:
    """n^2 mu(G_n) / (4 pi^2) along increasing n, with the relaxation-time comparison."""
    rows = _parallel(_asymptotic_row, sorted(orders), threads)
    report = AsymptoticReport(rows=rows)
    for r in rows:
        logger.debug(f"n={r.n}: ratio {r.ratio:.6f}, walk bound ratio {r.walk_bound_ratio:.6f}")
    return report


# ============================================================================
# H_{i,j}(m) sandwich
# ============================================================================


class SandwichRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    path_bound: float = Field(..., description="(4/25) mu(P_{m+11})")
    mu_44: float
    mu_00: float
    mu_ij: Dict[str, float] = Field(..., description="'i,j' -> mu(H_{i,j}(m))")

    @property
    def passed(self) -> bool:
        lower = self.path_bound - SANDWICH_TOL <= self.mu_44
        middle = all(
            self.mu_44 - SANDWICH_TOL <= v <= self.mu_00 + SANDWICH_TOL
            for v in self.mu_ij.values()
        )
        return lower and middle


class SandwichReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[SandwichRow]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows)


def _sandwich_row(m: int) -> SandwichRow:
    mus = {
        f"{i},{j}": mu_of(build_H(m, i, j).graph) for i in range(5) for j in range(5)
    }
    return SandwichRow(
        m=m,
        path_bound=4 / 25 * bounds.path_mu(m + 11),
        mu_44=mus["4,4"],
        mu_00=mus["0,0"],
        mu_ij=mus,
    )


def verify_sandwich(
    m_range: Sequence[int] = SANDWICH_RANGE, threads: Optional[int] = None
) -> SandwichReport:
    """mu(H_{4,4}(m)) <= mu(H_{i,j}(m)) <= mu(H_{0,0}(m)) and the path lower bound."""
    report = SandwichReport(rows=_parallel(_sandwich_row, list(m_range), threads))
    failed = [r.m for r in report.rows if not r.passed]
    if failed:
        logger.warning(f"Sandwich fails for m in {failed}")
    return report


# ============================================================================
# H_{0,0}(m) test vector
# ============================================================================


class H00Row(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    rayleigh: float
    closed_form: float
    mu: float
    vector_sum: float

    @property
    def passed(self) -> bool:
        return (
            self.rayleigh <= self.closed_form + RAYLEIGH_TOL
            and abs(self.vector_sum) <= ORTHOGONALITY_TOL
            and self.mu <= self.rayleigh + RAYLEIGH_TOL
        )


class H00Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[H00Row]
    f6: float

    @property
    def all_passed(self) -> bool:
        return self.f6 < F6_BOUND and all(r.passed for r in self.rows)


def _h00_row(m: int) -> H00Row:
    a = build_H(m, 0, 0)
    x = bounds.test_vector_H00(m, a)
    return H00Row(
        m=m,
        n=a.n,
        rayleigh=bounds.rayleigh(a.graph, x),
        closed_form=bounds.closed_form_f(m),
        mu=mu_of(a.graph),
        vector_sum=float(np.sum(x)),
    )


def verify_h00(
    m_range: Sequence[int] = H00_RANGE, threads: Optional[int] = None
) -> H00Report:
    """Rayleigh quotient of the H_{0,0}(m) test vector against its closed form."""
    rows = _parallel(_h00_row, list(m_range), threads)
    return H00Report(rows=rows, f6=bounds.closed_form_f(6))
