from specgap.polyroots.claims import (
    MU_BOUND_BY_ORDER,
    POLYNOMIALS,
    ROOT_CLAIMS,
    SIGN_CLAIMS,
    RootClaim,
    RootClaimReport,
    SignClaim,
    polynomial,
    verify_root_claims,
)
from specgap.polyroots.polynomial import IntPolynomial, PolynomialChecksum, poly
from specgap.polyroots.sturm import (
    RootInterval,
    count_roots,
    sign_changes,
    sign_on,
    smallest_root,
    sturm_isolate,
    sturm_sequence,
)

__all__ = [
    # Polynomials
    "IntPolynomial",
    "PolynomialChecksum",
    "poly",
    # Sturm isolation
    "RootInterval",
    "sturm_sequence",
    "sign_changes",
    "count_roots",
    "sturm_isolate",
    "smallest_root",
    "sign_on",
    # Claims
    "MU_BOUND_BY_ORDER",
    "POLYNOMIALS",
    "ROOT_CLAIMS",
    "SIGN_CLAIMS",
    "RootClaim",
    "SignClaim",
    "RootClaimReport",
    "polynomial",
    "verify_root_claims",
]
