from fastapi import APIRouter, Query

from api.errors import http_error
from api.models import VerificationResponse
from specgap.certify import verify_table2
from specgap.polyroots import verify_root_claims
from specgap.replace import run_lemma

router = APIRouter()


@router.get("/verify/table2", response_model=VerificationResponse)
def table2(
    lo: int = Query(11, ge=11, description="First order"),
    hi: int = Query(40, le=200, description="Last order"),
):
    """mu(G_n) over a range of orders against the quoted upper bounds."""
    try:
        report = verify_table2(range(lo, hi + 1))
    except Exception as e:
        raise http_error(e, "verifying mu(G_n) bounds")
    return VerificationResponse(
        all_passed=report.all_passed, report=report.model_dump(mode="json")
    )


@router.get("/verify/roots", response_model=VerificationResponse)
def roots():
    """Exact isolation of every quoted root and sign statement."""
    try:
        report = verify_root_claims()
    except Exception as e:
        raise http_error(e, "verifying polynomial claims")
    return VerificationResponse(
        all_passed=report.all_passed, report=report.model_dump(mode="json")
    )


@router.get("/verify/lemma/{name}", response_model=VerificationResponse)
def lemma(name: str):
    """Replacement experiments and direct comparisons for one lemma."""
    try:
        suite = run_lemma(name)
    except Exception as e:
        raise http_error(e, f"running lemma {name}")
    return VerificationResponse(
        all_passed=suite.all_passed, report=suite.model_dump(mode="json")
    )
