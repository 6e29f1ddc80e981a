"""
Unit tests for the specgap.polyroots package.

Integer polynomials, Sturm root isolation and the quoted root and sign claims.
"""

import math
from fractions import Fraction

import pytest

from specgap.exceptions import (
    ClaimMismatchError,
    InvalidInputError,
    UnknownFormulaError,
)
from specgap.polyroots import claims
from specgap.polyroots.claims import RootClaim, SignClaim, check_root_claim, check_sign_claim
from specgap.polyroots.polynomial import poly
from specgap.polyroots.sturm import count_roots, sign_on, smallest_root, sturm_isolate

# ============================================================================
# TEST SUITE 1: Integer polynomials
# ============================================================================


class TestIntPolynomial:
    """Test suite for coefficient handling and exact evaluation."""

    def test_leading_zeros_stripped(self):
        """Test that trailing high-degree zeros are dropped."""
        p = poly(1, 2, 0, 0)
        assert p.coeffs == (1, 2)
        assert p.degree == 1

    def test_zero_polynomial_rejected(self):
        """Test that the zero polynomial is refused."""
        with pytest.raises(InvalidInputError):
            poly(0, 0)

    def test_arithmetic(self):
        """Test (t - 1)(t + 1) = t^2 - 1 and friends."""
        a, b = poly(-1, 1), poly(1, 1)
        assert (a * b).coeffs == (-1, 0, 1)
        assert (a + b).coeffs == (0, 2)
        assert (a - b).coeffs == (-2,)
        assert (3 * a).coeffs == (-3, 3)
        assert (a**3).coeffs == (-1, 3, -3, 1)

    def test_exact_evaluation(self):
        """Test that Fraction arguments evaluate exactly."""
        p = poly(-1, 0, 2)
        assert p(Fraction(1, 2)) == Fraction(-1, 2)
        assert p(3) == 17

    def test_checksum(self):
        """Test degree, absolute coefficient sum and p(1)."""
        c = poly(2, -5, 1).checksum()
        assert (c.degree, c.coefficient_sum, c.value_at_one) == (2, 8, -2)

    def test_str(self):
        """Test the sympy rendering."""
        assert str(poly(2, -5, 1)) == "t**2 - 5*t + 2"


# ============================================================================
# TEST SUITE 2: Sturm isolation
# ============================================================================


class TestSturm:
    """Test suite for exact root counting and isolation."""

    def test_two_rational_roots(self):
        """Test that (t - 1)(t - 2) has roots at 1 and 2."""
        roots = sturm_isolate(poly(2, -3, 1))
        assert len(roots) == 2
        assert roots[0].contains(1.0)
        assert roots[1].contains(2.0)

    def test_irrational_root_width(self):
        """Test that sqrt(2) is bracketed within the requested width."""
        root = smallest_root(poly(-2, 0, 1), lo=0)
        assert root is not None
        assert root.contains(math.sqrt(2))
        assert root.width <= Fraction(1, 10**6)

    def test_fine_width(self):
        """Test a narrower target width."""
        root = smallest_root(poly(-2, 0, 1), lo=0, width=Fraction(1, 10**12))
        assert root is not None
        assert root.midpoint == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_no_real_roots(self):
        """Test that t^2 + 1 has no real roots."""
        assert sturm_isolate(poly(1, 0, 1)) == []
        assert smallest_root(poly(1, 0, 1)) is None

    def test_repeated_root_counted_once(self):
        """Test that (t - 1)^2 has one distinct root."""
        roots = sturm_isolate(poly(1, -2, 1))
        assert len(roots) == 1
        assert roots[0].contains(1.0)

    def test_count_roots(self):
        """Test half-open root counting for t^2 - 2."""
        p = poly(-2, 0, 1)
        assert count_roots(p, 0, 2) == 1
        assert count_roots(p, -2, 2) == 2
        assert count_roots(p, 2, 3) == 0

    def test_count_roots_empty_interval(self):
        """Test that a reversed interval is refused."""
        with pytest.raises(InvalidInputError):
            count_roots(poly(-2, 0, 1), 2, 0)

    def test_sign_on(self):
        """Test constant signs and a vanishing interval."""
        assert sign_on(poly(2, -5, 1), 0, Fraction(355, 1000)) == 1
        assert sign_on(poly(-2, 0, 1), 0, 1) == -1
        assert sign_on(poly(-2, 0, 1), 0, 2) == 0

    def test_sign_on_endpoint_root(self):
        """Test that a root at an endpoint does not count as inside."""
        assert sign_on(poly(-1, 1), 1, 2) == 1
        assert sign_on(poly(-1, 1), 0, 1) == -1


# ============================================================================
# TEST SUITE 3: Claims
# ============================================================================


class TestClaims:
    """Test suite for quoted roots and sign statements."""

    def test_all_claims_hold(self):
        """Test that every root and sign claim is confirmed."""
        report = claims.verify_root_claims()
        assert report.failures() == []
        assert report.all_passed

    def test_e3_root_is_beyond_the_window(self):
        """Test that mu^2 - 5mu + 2 first vanishes past 0.355."""
        root = smallest_root(claims.polynomial("mu2_5mu_2"), lo=0)
        assert root is not None
        assert root.midpoint == pytest.approx((5 - math.sqrt(17)) / 2, abs=1e-6)
        assert root.midpoint > 0.355

    def test_unknown_polynomial(self):
        """Test that an unknown polynomial name is refused."""
        with pytest.raises(UnknownFormulaError):
            claims.polynomial("nope")

    def test_smallest_real_reported(self, monkeypatch):
        """Test that a negative root below the claimed positive one is reported."""
        monkeypatch.setitem(claims.POLYNOMIALS, "two_roots", poly(-1, 1, 2))
        row = check_root_claim(RootClaim(label="x", polynomial="two_roots", quoted=0.5))
        assert row.verdict == "PASS"
        assert row.real_root_count == 2
        assert row.smallest_real is not None
        assert row.smallest_real.contains(-1.0)

    def test_only_real_rejects_extra_roots(self, monkeypatch):
        """Test that only_real fails when more than one real root exists."""
        monkeypatch.setitem(claims.POLYNOMIALS, "two_roots", poly(-1, 1, 2))
        row = check_root_claim(
            RootClaim(label="x", polynomial="two_roots", quoted=-1.0, which="only_real")
        )
        assert row.verdict == "FAIL"

    def test_sign_claim_failure(self):
        """Test that a wrong sign is reported as FAIL with the observed sign."""
        row = check_sign_claim(
            SignClaim(label="x", polynomial="mu2_5mu_2", lo=0, hi=0.3, sign=-1)
        )
        assert row.verdict == "FAIL"
        assert row.observed == 1

    def test_strict_mode(self, monkeypatch):
        """Test that strict mode raises on a wrong quoted root."""
        monkeypatch.setattr(
            claims,
            "ROOT_CLAIMS",
            [RootClaim(label="wrong", polynomial="e1_cubic", quoted=0.9)],
        )
        with pytest.raises(ClaimMismatchError):
            claims.verify_root_claims(strict=True)
        assert claims.verify_root_claims().failures() == ["wrong"]

    def test_mu_bounds_cover_gn_orders(self):
        """Test that the quoted bounds are keyed by the orders 11, 13, 18, 21, 26."""
        assert sorted(claims.MU_BOUND_BY_ORDER) == [11, 13, 18, 21, 26]
