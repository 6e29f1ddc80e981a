"""
Exact real root isolation with Sturm sequences.

The number of distinct real roots of p in (a, b] is V(a) - V(b), where V(t)
counts sign changes along the Sturm sequence evaluated at t. All arithmetic is
over the rationals: sympy builds the sequence, endpoints are Fractions.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import sympy
from loguru import logger
from pydantic import BaseModel, ConfigDict, field_serializer

from specgap.exceptions import InvalidInputError
from specgap.polyroots.polynomial import T, IntPolynomial

Rational = Union[int, Fraction]

DEFAULT_WIDTH = Fraction(1, 10**6)

# A sequence is stored as rational coefficient lists, descending degree.
SturmSequence = List[Tuple[Fraction, ...]]


class RootInterval(BaseModel):
    """Closed rational interval holding exactly one real root."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lo: Fraction
    hi: Fraction
    exact: bool = False
    sign_lo: int = 0
    sign_hi: int = 0

    @field_serializer("lo", "hi")
    def _fraction_text(self, value: Fraction) -> str:
        return str(value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    def contains(self, value: float) -> bool:
        return float(self.lo) <= value <= float(self.hi)

    def inside(self, lo: float, hi: float) -> bool:
        """True iff the whole interval lies in the open interval (lo, hi)."""
        return lo < float(self.lo) and float(self.hi) < hi


def _to_fraction(c: sympy.Expr) -> Fraction:
    r = sympy.Rational(c)
    return Fraction(int(r.p), int(r.q))


def _horner(coeffs: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * t + c
    return acc


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def squarefree_part(p: IntPolynomial) -> sympy.Poly:
    return sympy.sqf_part(p.to_sympy())


def sturm_sequence(p: IntPolynomial) -> SturmSequence:
    """Sturm sequence of the squarefree part of p."""
    base = squarefree_part(p)
    if base.degree() < 1:
        return [tuple(_to_fraction(c) for c in base.all_coeffs())]
    chain = sympy.sturm(base)
    return [tuple(_to_fraction(c) for c in q.all_coeffs()) for q in chain]


def sign_changes(seq: SturmSequence, t: Rational) -> int:
    """V(t): sign changes of the sequence at t, zeros skipped."""
    x = Fraction(t)
    signs = [s for s in (_sign(_horner(q, x)) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: IntPolynomial, lo: Rational, hi: Rational) -> int:
    """Distinct real roots of p in the half-open interval (lo, hi]."""
    if Fraction(lo) > Fraction(hi):
        raise InvalidInputError(f"Empty interval ({lo}, {hi}]")
    seq = sturm_sequence(p)
    return sign_changes(seq, lo) - sign_changes(seq, hi)


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root lies in [-B, B]."""
    lead = abs(p.coeffs[-1])
    return 1 + max((Fraction(abs(c), lead) for c in p.coeffs[:-1]), default=Fraction(0))


def _refine(
    p: IntPolynomial, lo: Fraction, hi: Fraction, width: Fraction
) -> RootInterval:
    """Bisect a sign-changing bracket down to the requested width."""
    f_lo, f_hi = _sign(p(lo)), _sign(p(hi))
    if f_lo == 0:
        return RootInterval(lo=lo, hi=lo, exact=True)
    if f_hi == 0:
        return RootInterval(lo=hi, hi=hi, exact=True)
    while hi - lo > width:
        mid = (lo + hi) / 2
        f_mid = _sign(p(mid))
        if f_mid == 0:
            return RootInterval(lo=mid, hi=mid, exact=True)
        if f_mid == f_lo:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo=lo, hi=hi, sign_lo=f_lo, sign_hi=-f_lo)


def sturm_isolate(
    p: IntPolynomial,
    lo: Optional[Rational] = None,
    hi: Optional[Rational] = None,
    width: Rational = DEFAULT_WIDTH,
) -> List[RootInterval]:
    """
    Isolate every distinct real root of p in (lo, hi].

    Intervals come back in increasing order, each of width at most `width`
    or degenerate at an exact rational root. Without bounds the Cauchy
    bound of p is used.

    Args:
        p: Integer polynomial
        lo: Left end, excluded
        hi: Right end, included
        width: Target interval width
    """
    bound = root_bound(p)
    a = Fraction(lo) if lo is not None else -bound
    b = Fraction(hi) if hi is not None else bound
    w = Fraction(width)
    if a > b or w <= 0:
        raise InvalidInputError(f"Bad isolation request on ({a}, {b}] width {w}")

    seq = sturm_sequence(p)
    base = squarefree_part(p)
    sqf = IntPolynomial(
        coeffs=tuple(int(c) for c in reversed(base.clear_denoms()[1].all_coeffs()))
    )

    found: List[RootInterval] = []
    # stack of (lo, hi, V(lo), V(hi)) with roots counted in (lo, hi]
    stack = [(a, b, sign_changes(seq, a), sign_changes(seq, b))]
    while stack:
        x, y, vx, vy = stack.pop()
        count = vx - vy
        if count == 0:
            continue
        if count == 1 and sqf(y) == 0:
            found.append(RootInterval(lo=y, hi=y, exact=True))
            continue
        # a root sitting on the excluded left end belongs to the neighbour
        if count == 1 and sqf(x) != 0:
            found.append(_refine(sqf, x, y, w))
            continue
        mid = (x + y) / 2
        vm = sign_changes(seq, mid)
        stack.append((mid, y, vm, vy))
        stack.append((x, mid, vx, vm))

    found.sort(key=lambda r: r.lo)
    logger.debug(f"Isolated {len(found)} roots of degree-{p.degree} polynomial")
    return found


def smallest_root(
    p: IntPolynomial,
    lo: Optional[Rational] = None,
    hi: Optional[Rational] = None,
    width: Rational = DEFAULT_WIDTH,
) -> Optional[RootInterval]:
    roots = sturm_isolate(p, lo, hi, width)
    return roots[0] if roots else None


def sign_on(p: IntPolynomial, lo: Rational, hi: Rational) -> int:
    """
    Constant sign of p on the open interval (lo, hi), or 0 if p vanishes there.
    """
    a, b = Fraction(lo), Fraction(hi)
    inside = count_roots(p, a, b) - (1 if p(b) == 0 else 0)
    if inside > 0:
        return 0
    return _sign(p((a + b) / 2))


def polynomial_from_sympy(expr: sympy.Expr) -> IntPolynomial:
    """Integer polynomial of an expression in t with rational coefficients."""
    _, cleared = sympy.Poly(expr, T).clear_denoms()
    return IntPolynomial(coeffs=tuple(int(c) for c in reversed(cleared.all_coeffs())))
