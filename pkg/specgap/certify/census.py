"""Minimal quartic graphs at enumerable orders."""

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.blocks.assembly import Assembly, assemble, block_sequence
from specgap.blocks.catalog import MIRROR_PREFIX
from specgap.blocks.families import END_BLOCK_ORDERS, build_G_n
from specgap.certify.enumerate import (
    KNOWN_COUNTS,
    CensusEntry,
    complement_oracle,
    enumerate_quartic,
)
from specgap.config import TIE_TOL, get_threads
from specgap.domain.canonical import are_isomorphic, canonical_cert
from specgap.domain.formats import to_graph6
from specgap.spectra.eigen import algebraic_connectivity, mu_of
from specgap.structure.fiedler import (
    exceptional_cells,
    fiedler_structure,
    structural_partition,
)

GN_MIN_ORDER = 11
MIDDLE_ORDER = 5


class CensusReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    count: int
    expected_count: Optional[int] = None
    oracle_count: Optional[int] = Field(
        default=None, description="Complement-based count, n <= 8 only"
    )
    oracle_agrees: Optional[bool] = Field(
        default=None, description="Census and oracle hold the same classes, n <= 8 only"
    )
    min_mu: float
    minimizers: List[str] = Field(..., description="graph6 of every co-minimal graph")
    minimizer_mu: List[float]
    gn_match: Optional[bool] = Field(
        default=None, description="Unique minimizer isomorphic to G_n; None if n < 11"
    )
    template: Optional[List[str]] = Field(
        default=None, description="Block sequence read off the minimizer itself"
    )
    middle_blocks_m0: Optional[bool] = None
    structure_passed: Optional[bool] = None
    d3_ended: Dict[str, float] = Field(
        default_factory=dict, description="mu of D3-ended assemblies of this order"
    )

    @property
    def unique(self) -> bool:
        return len(self.minimizers) == 1

    @property
    def passed(self) -> bool:
        counts = [c for c in (self.expected_count, self.oracle_count) if c is not None]
        return (
            all(c == self.count for c in counts)
            and self.oracle_agrees is not False
            and self.unique
            and self.gn_match is not False
            and self.structure_passed is not False
            and self.middle_blocks_m0 is not False
        )


def _with_mu(entries: List[CensusEntry], threads: int) -> List[CensusEntry]:
    with ThreadPoolExecutor(max_workers=threads) as pool:
        values = list(pool.map(lambda e: mu_of(e.graph), entries))
    return [e.model_copy(update={"mu": mu}) for e, mu in zip(entries, values)]


def d3_ended_assemblies(n: int) -> Dict[str, Assembly]:
    """Assemblies D3 M0 ... M0 ~Dj of order n."""
    out: Dict[str, Assembly] = {}
    for right, order in END_BLOCK_ORDERS.items():
        rest = n - END_BLOCK_ORDERS["D3"] - order + 1
        if rest < 0 or rest % MIDDLE_ORDER:
            continue
        tags = ["D3"] + ["M0"] * (rest // MIDDLE_ORDER) + [MIRROR_PREFIX + right]
        out[",".join(tags)] = assemble(tags)
    return out


def gn_structure_passed(a: Assembly) -> bool:
    report = algebraic_connectivity(a.graph, a.cell_order)
    structure = fiedler_structure(
        a.graph,
        report.vector,
        structural_partition(a),
        exceptional=exceptional_cells(a),
    )
    return structure.passed


def find_minimal(
    n: int, threads: Optional[int] = None, tie_tol: float = TIE_TOL
) -> CensusReport:
    """
    Enumerate order n and report the graphs of least algebraic connectivity.

    Co-minimal graphs are those within tie_tol of the minimum.

    Raises:
        InvalidInputError: If n < 5
        OrderCapExceededError: If n is beyond the enumeration cap
    """
    workers = threads or get_threads()
    entries = _with_mu(enumerate_quartic(n, workers), workers)
    min_mu = min(e.mu for e in entries if e.mu is not None)
    minimal = [e for e in entries if e.mu is not None and e.mu - min_mu < tie_tol]

    oracle: Optional[int] = None
    oracle_agrees: Optional[bool] = None
    if n <= 8:
        oracle_certs = {canonical_cert(g) for g in complement_oracle(n)}
        oracle_agrees = oracle_certs == {e.cert for e in entries}
        if not oracle_agrees:
            logger.error(f"Census and complement oracle disagree at n={n}")
        oracle = len(oracle_certs)

    gn_match: Optional[bool] = None
    middle_m0: Optional[bool] = None
    structure_ok: Optional[bool] = None
    template: Optional[List[str]] = None
    if n >= GN_MIN_ORDER:
        gn = build_G_n(n)
        gn_match = len(minimal) == 1 and are_isomorphic(minimal[0].graph, gn.graph)
        if len(minimal) == 1:
            template = block_sequence(minimal[0].graph)
            middle_m0 = template is not None and all(
                t == "M0" for t in template[1:-1]
            )
            if template is None:
                logger.warning(f"n={n}: minimizer is not a catalog block path")
        if gn_match:
            structure_ok = gn_structure_passed(gn)

    d3 = {spec: mu_of(a.graph) for spec, a in d3_ended_assemblies(n).items()}
    for spec, mu in d3.items():
        logger.info(f"n={n}: {spec} has mu {mu:.12g} (minimum {min_mu:.12g})")

    report = CensusReport(
        n=n,
        count=len(entries),
        expected_count=KNOWN_COUNTS.get(n),
        oracle_count=oracle,
        oracle_agrees=oracle_agrees,
        min_mu=min_mu,
        minimizers=[to_graph6(e.graph) for e in minimal],
        minimizer_mu=[float(e.mu) for e in minimal if e.mu is not None],
        gn_match=gn_match,
        template=template,
        middle_blocks_m0=middle_m0,
        structure_passed=structure_ok,
        d3_ended=d3,
    )
    if not report.passed:
        logger.warning(f"Census at n={n} did not certify a unique G_n minimizer")
    return report
