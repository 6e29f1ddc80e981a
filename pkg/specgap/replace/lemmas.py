"""
Numerical replacement experiments.

Each lemma forbids a gadget in a minimal graph: if the gadget sat in a graph
whose Fiedler vector meets the stated conditions, swapping in the replacement
would lower the algebraic connectivity. An experiment instantiates a concrete
host containing the gadget, splices in the replacement, builds the carried
vector from the closed-form values and reports every quantity of the
argument next to the direct eigenvalue comparison.
"""

from typing import Dict, List, Literal, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.blocks.assembly import Assembly
from specgap.blocks.families import build_family
from specgap.blocks.gadgets import GadgetPair, gadget_pair
from specgap.config import GAP23_TOL, HYPOTHESIS_TOL, RESIDUAL_TOL
from specgap.domain.graph import Graph
from specgap.exceptions import (
    GadgetNotFoundError,
    NotQuarticAfterGlueError,
    UnknownFormulaError,
)
from specgap.replace.criterion import replacement_outcome
from specgap.replace.formulas import closed_form_criterion, formula, lemma_formula
from specgap.replace.splice import (
    Occurrence,
    carry_vector,
    host_label_values,
    left_neighbour_values,
    locate,
    splice,
)
from specgap.spectra.eigen import algebraic_connectivity, mu_of

Status = Literal["verified", "hypothesis_unmet", "indeterminate"]

FORMULA_TOL = 1e-6
COMPARISON_MARGIN = 1e-8
MAX_SPLICE_ATTEMPTS = 8


class SignCondition(BaseModel):
    """values[left] op values[right], right defaulting to 0."""

    model_config = ConfigDict(frozen=True)

    left: str
    op: Literal[">", ">="]
    right: Optional[str] = None


class LemmaSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    mu_bound: float
    min_order: int = 11
    conditions: Tuple[SignCondition, ...] = ()
    equal_left_neighbours: bool = False
    hosts: Tuple[str, ...] = Field(..., description="Family specs of the default hosts")
    comparisons: Tuple[Tuple[str, str], ...] = Field(
        default=(), description="(smaller, larger) family specs compared directly"
    )


def _cond(left: str, op: Literal[">", ">="], right: Optional[str] = None) -> SignCondition:
    return SignCondition(left=left, op=op, right=right)


LEMMAS: Dict[str, LemmaSpec] = {
    "E3": LemmaSpec(
        name="E3",
        mu_bound=0.355,
        conditions=(_cond("x1", ">"),),
        hosts=("long:end:D'3+~M'0,M0,~D0",),
    ),
    "E1": LemmaSpec(
        name="E1",
        mu_bound=0.129,
        min_order=18,
        conditions=(_cond("x1", ">"),),
        hosts=("long:end:D'0+M''0+~M'0,M0,M0,~D0",),
        comparisons=(
            ("gn:14", "long:complete:D'0+M''0+~D'0"),
            ("gn:17", "long:complete:D'0+M''0+~D'3"),
        ),
    ),
    "E2": LemmaSpec(
        name="E2",
        mu_bound=0.268,
        min_order=13,
        conditions=(_cond("x1", ">"),),
        hosts=("long:end:D'0+~M'2,M0,~D0",),
    ),
    "H1": LemmaSpec(
        name="H1",
        mu_bound=0.355,
        conditions=(_cond("x_r3", ">="), _cond("x_r", ">", "x_r3")),
        hosts=("D1,M1,M0,M0,M0,~D1",),
    ),
    "H2": LemmaSpec(
        name="H2",
        mu_bound=0.355,
        conditions=(_cond("x_r4", ">="), _cond("x_r", ">", "x_r4")),
        hosts=("D1,M2,M0,M0,M0,~D0",),
    ),
    "H3": LemmaSpec(
        name="H3",
        mu_bound=0.091,
        min_order=21,
        conditions=(_cond("x_r3", ">="), _cond("x_r", ">", "x_r4")),
        hosts=("D0,M0,long:middle:M'0+~M'0,M0,M0,M0,M0,~D0",),
    ),
    "H4": LemmaSpec(
        name="H4",
        mu_bound=0.355,
        conditions=(_cond("x_r4", ">="), _cond("x_r", ">", "x_r5")),
        equal_left_neighbours=True,
        hosts=(
            "D1,M3,M0,M0,~D1",
            "D3,M3,M0,M0,~D1",
            "D4,M3,M0,M0,~D1",
            "D0,M0,M3,M0,~D0",
        ),
    ),
    "H5": LemmaSpec(
        name="H5",
        mu_bound=0.091,
        min_order=21,
        conditions=(_cond("x1", ">"),),
        hosts=("D0,M3,M0,M0,~D0",),
        comparisons=tuple(
            (f"gn:{17 + i}", f"D0,M3,~D{i}") for i in range(4)
        ),
    ),
    "H6": LemmaSpec(
        name="H6",
        mu_bound=0.059,
        min_order=26,
        conditions=(_cond("x8", ">"),),
        hosts=("D2,M3,M0,M0,~D0",),
        comparisons=(("gn:21", "D2,M3,~D2"),),
    ),
}

LEMMA_NAMES: Tuple[str, ...] = tuple(LEMMAS)


def lemma_spec(name: str) -> LemmaSpec:
    key = name.strip().upper()
    if key not in LEMMAS:
        raise UnknownFormulaError(f"Unknown lemma: {name}")
    return LEMMAS[key]


class LemmaInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    occurrence: List[int]
    orientation: int = Field(..., description="+1 or -1, the sign giving the conditions")
    boundary: Dict[str, float]
    formula_error: float = Field(..., description="max |closed form - host component|")
    formula_residual: float = Field(
        ..., description="Eigen-equation residual of the closed-form values"
    )
    mu_before: float
    bound_after: float
    mu_after: float
    h: float
    h_prime: float
    ell: float
    delta: float
    epsilon: float
    criterion: float
    closed_form: Optional[float] = None
    closed_form_error: Optional[float] = None
    status: Status
    reasons: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.status != "verified":
            return True
        ok = self.criterion < 0 and self.bound_after < self.mu_before
        if self.closed_form_error is not None:
            ok = ok and self.closed_form_error <= RESIDUAL_TOL
        return ok


class LemmaReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    host: List[str]
    n: int
    mu: float
    gap23: Optional[float]
    occurrences: int
    instance: LemmaInstance

    @property
    def passed(self) -> bool:
        return self.instance.passed


class ComparisonRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    smaller: str
    larger: str
    n: int
    mu_smaller: float
    mu_larger: float

    @property
    def margin(self) -> float:
        return self.mu_larger - self.mu_smaller

    @property
    def passed(self) -> bool:
        return self.margin > COMPARISON_MARGIN


class LemmaSuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    experiments: List[LemmaReport]
    comparisons: List[ComparisonRow]
    missing_hosts: List[str] = Field(default_factory=list)

    @property
    def verified(self) -> int:
        return sum(e.instance.status == "verified" for e in self.experiments)

    @property
    def all_passed(self) -> bool:
        # Instances whose hypotheses fail test nothing; one must be verified
        return (
            self.verified > 0
            and all(e.passed for e in self.experiments)
            and all(c.passed for c in self.comparisons)
            and not self.missing_hosts
        )


def _condition_state(c: SignCondition, values: Mapping[str, float]) -> int:
    """1 holds, 0 borderline, -1 fails."""
    diff = values[c.left] - (values[c.right] if c.right else 0.0)
    if c.op == ">=":
        if diff >= 0:
            return 1
        return 0 if diff >= -HYPOTHESIS_TOL else -1
    if diff > HYPOTHESIS_TOL:
        return 1
    return 0 if diff > -HYPOTHESIS_TOL else -1


def _orientation(
    conditions: Sequence[SignCondition], values: Mapping[str, float]
) -> Tuple[int, int]:
    """Best sign of x for the conditions and the resulting worst state."""
    best = (1, -2)
    for sign in (1, -1):
        flipped = {k: sign * v for k, v in values.items()}
        state = min((_condition_state(c, flipped) for c in conditions), default=1)
        if state > best[1]:
            best = (sign, state)
    return best


def _formula_residual(
    host: Graph,
    pair: GadgetPair,
    occ: Occurrence,
    x: np.ndarray,
    values: Mapping[str, float],
    mu: float,
) -> float:
    """Eigen-equation residual on gadget vertices with no external edges."""
    y = x.copy()
    for i, label in enumerate(pair.host.values):
        if label is not None:
            y[occ[i]] = values[label]
    adj = host.adjacency()
    worst = 0.0
    for i in range(pair.host.order):
        if i in pair.host.stubs:
            continue
        v = occ[i]
        lhs = len(adj[v]) * y[v] - sum(y[w] for w in adj[v])
        worst = max(worst, abs(lhs - mu * y[v]))
    return worst


def _boundary(
    spec: LemmaSpec, pair: GadgetPair, host: Graph, occ: Occurrence, x: np.ndarray
) -> Tuple[Dict[str, float], List[str]]:
    reasons: List[str] = []
    values: Dict[str, float] = {}
    for var in formula(spec.name).variables:
        if var in pair.boundary:
            values[var] = float(x[occ[pair.boundary[var]]])
            continue
        # the free value sits on the left neighbours of the gadget
        left = left_neighbour_values(host, pair, occ, x)
        values[var] = float(np.mean(left))
        if spec.equal_left_neighbours and float(np.ptp(left)) > FORMULA_TOL:
            reasons.append("left neighbours do not share a value")
    return values, reasons


def _instance(
    spec: LemmaSpec,
    pair: GadgetPair,
    host: Graph,
    occ: Occurrence,
    x: np.ndarray,
    mu: float,
    gap23: Optional[float],
) -> LemmaInstance:
    boundary, reasons = _boundary(spec, pair, host, occ, x)
    values = lemma_formula(spec.name, mu, boundary, strict=False)

    observed = host_label_values(pair, occ, x)
    formula_error = max(
        (abs(values[label] - v) for label, vs in observed.items() for v in vs),
        default=0.0,
    )
    residual = _formula_residual(host, pair, occ, x, values, mu)

    carried = dict(values)
    for label, vs in observed.items():
        carried[label] = float(np.mean(vs))
    g_prime = splice(host, pair, occ)
    x_prime = carry_vector(pair, occ, x, carried)
    outcome = replacement_outcome(host, x, mu, g_prime, x_prime, touched=occ)

    closed = closed_form_criterion(spec.name, mu, host.n, boundary)
    closed_error = abs(closed - outcome.criterion) if closed is not None else None

    sign, state = _orientation(spec.conditions, {**carried, **boundary})
    if state < 0:
        reasons.append("sign conditions fail in both orientations")
    if not mu < spec.mu_bound:
        reasons.append(f"mu = {mu:.6g} is not below {spec.mu_bound}")
    if host.n < spec.min_order:
        reasons.append(f"order {host.n} is below {spec.min_order}")
    if formula_error > FORMULA_TOL:
        reasons.append(f"closed form misses host components by {formula_error:.3g}")

    status: Status = "verified"
    if reasons:
        status = "hypothesis_unmet"
    elif state == 0 or (gap23 is not None and gap23 < GAP23_TOL):
        status = "indeterminate"

    return LemmaInstance(
        occurrence=list(occ),
        orientation=sign,
        boundary=boundary,
        formula_error=formula_error,
        formula_residual=residual,
        mu_before=mu,
        bound_after=outcome.bound_after,
        mu_after=outcome.mu_after,
        h=outcome.h,
        h_prime=outcome.h_prime,
        ell=outcome.ell,
        delta=outcome.delta,
        epsilon=outcome.epsilon,
        criterion=outcome.criterion,
        closed_form=closed,
        closed_form_error=closed_error,
        status=status,
        reasons=reasons,
    )


_RANK = {"verified": 0, "indeterminate": 1, "hypothesis_unmet": 2}


def run_lemma_experiment(name: str, host: Union[Assembly, Graph]) -> LemmaReport:
    """
    Splice a lemma's replacement into a host and measure the effect.

    Args:
        name: Lemma name, E1..E3 or H1..H6
        host: Assembly or bare graph containing the lemma's gadget

    Raises:
        UnknownFormulaError: If the lemma is unknown
        GadgetNotFoundError: If no occurrence of the gadget can be spliced
    """
    spec = lemma_spec(name)
    pair = gadget_pair(spec.name)
    graph = host.graph if isinstance(host, Assembly) else host
    tags = host.tags if isinstance(host, Assembly) else []
    cells = host.cell_order if isinstance(host, Assembly) else None

    report = algebraic_connectivity(graph, cells)
    x, mu = report.vector, report.mu
    occurrences = locate(graph, pair.host)
    if not occurrences:
        raise GadgetNotFoundError(f"{pair.host.name} does not occur in {tags or graph.n}")

    def preview(occ: Occurrence) -> Tuple[int, float]:
        # Automorphic matches tie on closeness, so sign conditions rank first
        boundary, _ = _boundary(spec, pair, graph, occ, x)
        values = lemma_formula(spec.name, mu, boundary, strict=False)
        observed = host_label_values(pair, occ, x)
        carried = {**values, **{k: float(np.mean(vs)) for k, vs in observed.items()}}
        _, state = _orientation(spec.conditions, {**carried, **boundary})
        error = max(
            (abs(values[label] - v) for label, vs in observed.items() for v in vs),
            default=0.0,
        )
        return -state, error

    ranked = sorted(occurrences, key=preview)[:MAX_SPLICE_ATTEMPTS]
    instances: List[LemmaInstance] = []
    for occ in ranked:
        try:
            instances.append(_instance(spec, pair, graph, occ, x, mu, report.gap23))
        except NotQuarticAfterGlueError as e:
            logger.debug(f"Skipping occurrence {occ}: {e}")
    if not instances:
        raise GadgetNotFoundError(f"No occurrence of {pair.host.name} can be spliced")

    best = min(instances, key=lambda i: (_RANK[i.status], i.formula_error))
    if best.status != "verified":
        logger.warning(f"{spec.name} on {tags}: {best.status} ({'; '.join(best.reasons)})")
    return LemmaReport(
        name=spec.name,
        host=tags,
        n=graph.n,
        mu=mu,
        gap23=report.gap23,
        occurrences=len(occurrences),
        instance=best,
    )


def run_comparisons(name: str) -> List[ComparisonRow]:
    """Direct eigenvalue comparisons backing a lemma at small orders."""
    rows = []
    for smaller, larger in lemma_spec(name).comparisons:
        a, b = build_family(smaller), build_family(larger)
        rows.append(
            ComparisonRow(
                smaller=smaller,
                larger=larger,
                n=a.n,
                mu_smaller=mu_of(a.graph),
                mu_larger=mu_of(b.graph),
            )
        )
    return rows


def run_lemma(name: str, hosts: Optional[Sequence[str]] = None) -> LemmaSuiteReport:
    """Every default host experiment of a lemma plus its direct comparisons."""
    spec = lemma_spec(name)
    experiments: List[LemmaReport] = []
    missing: List[str] = []
    for host_spec in hosts or spec.hosts:
        try:
            experiments.append(run_lemma_experiment(spec.name, build_family(host_spec)))
        except GadgetNotFoundError as e:
            logger.warning(f"{spec.name}: {e}")
            missing.append(host_spec)
    suite = LemmaSuiteReport(
        name=spec.name,
        experiments=experiments,
        comparisons=run_comparisons(spec.name),
        missing_hosts=missing,
    )
    logger.info(
        f"Lemma {spec.name}: {len(experiments)} experiments, "
        f"{len(suite.comparisons)} comparisons, passed={suite.all_passed}"
    )
    return suite
