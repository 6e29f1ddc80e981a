from fastapi import APIRouter

from api.errors import http_error
from api.models import (
    SpectrumRequest,
    SpectrumResponse,
    StructureRequest,
    StructureResponse,
)
from specgap.blocks.families import build_family
from specgap.config import CELL_SPREAD_TOL
from specgap.domain.formats import from_graph6
from specgap.domain.graph import make_graph
from specgap.spectra.eigen import algebraic_connectivity
from specgap.structure import (
    exceptional_cells,
    fiedler_structure,
    is_palindromic,
    mirror_map,
    structural_partition,
    structure_status,
)

router = APIRouter()


@router.post("/spectra/mu", response_model=SpectrumResponse)
def compute_mu(request: SpectrumRequest):
    """Algebraic connectivity, spectrum and Fiedler vector of a graph."""
    try:
        if request.graph6 is not None:
            g = from_graph6(request.graph6)
        else:
            g = make_graph(request.n or 0, request.edges or [])
        report = algebraic_connectivity(g)
    except Exception as e:
        raise http_error(e, "computing the spectrum")
    return SpectrumResponse(**report.model_dump())


@router.post("/spectra/structure", response_model=StructureResponse)
def compute_structure(request: StructureRequest):
    """Cell constancy, monotonicity and sign pattern of the Fiedler vector."""
    try:
        a = build_family(request.family)
        spectrum = algebraic_connectivity(a.graph, a.cell_order)
        report = fiedler_structure(
            a.graph,
            spectrum.vector,
            structural_partition(a),
            tol=request.tolerance or CELL_SPREAD_TOL,
            mirror=mirror_map(a) if is_palindromic(a) else None,
            exceptional=exceptional_cells(a),
        )
    except Exception as e:
        raise http_error(e, "checking the Fiedler structure")
    return StructureResponse(
        blocks=a.tags,
        mu=spectrum.mu,
        gap23=spectrum.gap23,
        status=structure_status(report, spectrum.gap23),  # type: ignore[arg-type]
        report={**report.model_dump(mode="json"), "passed": report.passed},
    )
