"""
Polynomials from the replacement sign arguments, and the checks run on them.

Every quoted approximate root is isolated exactly and compared with its
quoted three-decimal value; every sign statement a replacement argument
relies on is proved on its interval with Sturm counts.
"""

from fractions import Fraction
from typing import Dict, List, Literal, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from specgap.exceptions import ClaimMismatchError, UnknownFormulaError
from specgap.polyroots.polynomial import IntPolynomial, poly, product
from specgap.polyroots.sturm import DEFAULT_WIDTH, RootInterval, sign_on, sturm_isolate

# Upper bounds on mu(G_n) by order, rounded up to three decimals.
MU_BOUND_BY_ORDER: Dict[int, float] = {
    11: 0.355,
    13: 0.268,
    18: 0.129,
    21: 0.091,
    26: 0.059,
}

CLAIM_TOLERANCE = 0.001

_E1_CUBIC = poly(-5, 14, -8, 1)

POLYNOMIALS: Dict[str, IntPolynomial] = {
    # quadratics
    "mu2_5mu_2": poly(2, -5, 1),
    "mu2_6mu_2": poly(2, -6, 1),
    "mu2_7mu_10": poly(10, -7, 1),
    "mu2_7mu_8": poly(8, -7, 1),
    # E1
    "e1_cubic": _E1_CUBIC,
    "e1_p": 4 * product([poly(-2, 1), poly(-2, 1), poly(1, -6, 1), poly(1, -6, 1)]),
    "e1_p1": poly(8, -90, 297, -275, 104, -17, 1),
    "e1_p2": poly(0, -150, 475, -399, 132, -19, 1),
    "e1_p3": product([poly(-6, 1), poly(-5, 1), poly(0, 0, 1), _E1_CUBIC]),
    "e1_p4": poly(144, -1770, 5821, -5349, 2004, -325, 19),
    # H2, H3, H4 denominators and factors
    "h2_cubic": poly(-32, 36, -11, 1),
    "h3_cubic_14": poly(-14, 27, -10, 1),
    "h3_cubic_4": poly(-4, 27, -10, 1),
    "h4_quartic_76": poly(76, -126, 67, -14, 1),
    "h4_quartic_46": poly(46, -126, 67, -14, 1),
    # D0 M3
    "h5_sign": poly(-2016, 38800, -221000, 392628, -333056, 156427, -42928, 6848, -588, 21),
    # D2 M3
    "h6_p1": poly(
        1344, -36080, 300472, -823624, 1140452, -939272, 497026,
        -175339, 41701, -6606, 668, -39, 1,
    ),
    "h6_p2": poly(0, -20208, 137816, -264520, 242312, -126432, 40446, -8100, 992, -68, 2),
    "h6_p3": poly(1684, -11204, 20176, -16830, 7731, -2082, 328, -28, 1),
    "h6_p4": poly(
        34944, -958288, 7950088, -21678744, 29894064, -24547504, 12963122,
        -4566914, 1085218, -171824, 17370, -1014, 26,
    ),
}


def polynomial(name: str) -> IntPolynomial:
    try:
        return POLYNOMIALS[name]
    except KeyError:
        raise UnknownFormulaError(f"Unknown polynomial: {name}")


Which = Literal["smallest_positive", "smallest_real", "only_real"]


class RootClaim(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    polynomial: str
    quoted: float
    which: Which = "smallest_positive"


class SignClaim(BaseModel):
    """p has the given strict sign on the open interval (lo, hi)."""

    model_config = ConfigDict(frozen=True)

    label: str
    polynomial: str
    lo: float
    hi: float
    sign: Literal[-1, 1]


ROOT_CLAIMS: List[RootClaim] = [
    RootClaim(label="E1 cubic factor", polynomial="e1_cubic", quoted=0.481),
    RootClaim(label="E1 p1", polynomial="e1_p1", quoted=0.171),
    RootClaim(label="E1 p4", polynomial="e1_p4", quoted=0.132),
    RootClaim(label="H3 cubic", polynomial="h3_cubic_4", quoted=0.157, which="only_real"),
    RootClaim(label="H4 quartic", polynomial="h4_quartic_46", quoted=0.472),
    RootClaim(label="H6 p3", polynomial="h6_p3", quoted=0.227),
    RootClaim(label="H6 p1", polynomial="h6_p1", quoted=0.081),
    RootClaim(label="H6 p4", polynomial="h6_p4", quoted=0.070),
]

SIGN_CLAIMS: List[SignClaim] = [
    SignClaim(label="E3 quadratic", polynomial="mu2_5mu_2", lo=0, hi=0.355, sign=1),
    SignClaim(label="E2 quadratic", polynomial="mu2_6mu_2", lo=0, hi=0.268, sign=1),
    SignClaim(label="E1 p3", polynomial="e1_p3", lo=0, hi=0.129, sign=-1),
    SignClaim(label="E1 p1", polynomial="e1_p1", lo=0, hi=0.129, sign=1),
    SignClaim(label="E1 p4", polynomial="e1_p4", lo=0, hi=0.129, sign=1),
    SignClaim(label="E1 p", polynomial="e1_p", lo=0, hi=0.129, sign=1),
    SignClaim(label="H1 denominator", polynomial="mu2_7mu_10", lo=0, hi=0.355, sign=1),
    SignClaim(label="H2 omega", polynomial="mu2_7mu_8", lo=0, hi=0.355, sign=1),
    SignClaim(label="H2 denominator", polynomial="h2_cubic", lo=0, hi=0.355, sign=-1),
    SignClaim(label="H3 denominator", polynomial="h3_cubic_14", lo=0, hi=0.091, sign=-1),
    SignClaim(label="H3 cubic", polynomial="h3_cubic_4", lo=0, hi=0.091, sign=-1),
    SignClaim(label="H4 denominator", polynomial="h4_quartic_76", lo=0, hi=0.355, sign=1),
    SignClaim(label="H4 quartic", polynomial="h4_quartic_46", lo=0, hi=0.355, sign=1),
    SignClaim(label="H5 sign polynomial", polynomial="h5_sign", lo=0, hi=0.091, sign=-1),
    SignClaim(label="H6 p3", polynomial="h6_p3", lo=0, hi=0.059, sign=1),
    SignClaim(label="H6 p1", polynomial="h6_p1", lo=0, hi=0.059, sign=1),
    SignClaim(label="H6 p4", polynomial="h6_p4", lo=0, hi=0.059, sign=1),
]


class RootClaimRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    polynomial: str
    quoted: float
    interval: Optional[RootInterval] = None
    smallest_real: Optional[RootInterval] = Field(
        default=None, description="Reported when it differs from the claimed root"
    )
    real_root_count: int
    verdict: Literal["PASS", "FAIL"]


class SignClaimRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    polynomial: str
    lo: float
    hi: float
    expected: int
    observed: int
    verdict: Literal["PASS", "FAIL"]


class RootClaimReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    roots: List[RootClaimRow]
    signs: List[SignClaimRow]

    @property
    def all_passed(self) -> bool:
        return all(r.verdict == "PASS" for r in self.roots) and all(
            s.verdict == "PASS" for s in self.signs
        )

    def failures(self) -> List[str]:
        return [r.label for r in self.roots if r.verdict == "FAIL"] + [
            s.label for s in self.signs if s.verdict == "FAIL"
        ]


def check_root_claim(claim: RootClaim, width: Fraction = DEFAULT_WIDTH) -> RootClaimRow:
    p = polynomial(claim.polynomial)
    every = sturm_isolate(p, width=width)
    if claim.which == "smallest_positive":
        candidates = [r for r in every if r.lo > 0]
    else:
        candidates = every
    chosen = candidates[0] if candidates else None

    ok = chosen is not None and abs(chosen.midpoint - claim.quoted) <= CLAIM_TOLERANCE
    if claim.which == "only_real":
        ok = ok and len(every) == 1
    smallest = every[0] if every else None
    if smallest is not None and chosen is not None and smallest.lo == chosen.lo:
        smallest = None

    if not ok:
        logger.warning(f"Root claim {claim.label} ~ {claim.quoted} not confirmed")
    return RootClaimRow(
        label=claim.label,
        polynomial=claim.polynomial,
        quoted=claim.quoted,
        interval=chosen,
        smallest_real=smallest,
        real_root_count=len(every),
        verdict="PASS" if ok else "FAIL",
    )


def check_sign_claim(claim: SignClaim) -> SignClaimRow:
    p = polynomial(claim.polynomial)
    observed = sign_on(p, Fraction(claim.lo), Fraction(str(claim.hi)))
    return SignClaimRow(
        label=claim.label,
        polynomial=claim.polynomial,
        lo=claim.lo,
        hi=claim.hi,
        expected=claim.sign,
        observed=observed,
        verdict="PASS" if observed == claim.sign else "FAIL",
    )


def verify_root_claims(strict: bool = False) -> RootClaimReport:
    """
    Isolate every quoted root and prove every sign statement.

    Args:
        strict: Raise instead of reporting a failed claim

    Raises:
        ClaimMismatchError: In strict mode, when any claim fails
    """
    report = RootClaimReport(
        roots=[check_root_claim(c) for c in ROOT_CLAIMS],
        signs=[check_sign_claim(s) for s in SIGN_CLAIMS],
    )
    logger.info(
        f"Root claims: {sum(r.verdict == 'PASS' for r in report.roots)}/"
        f"{len(report.roots)} roots, "
        f"{sum(s.verdict == 'PASS' for s in report.signs)}/{len(report.signs)} signs"
    )
    if strict and not report.all_passed:
        raise ClaimMismatchError(f"Failed claims: {report.failures()}")
    return report
