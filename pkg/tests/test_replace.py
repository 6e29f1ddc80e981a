"""
Unit tests for the specgap.replace package.

Fits between end blocks, the energy criterion, end-block replacement, closed
forms on the lemma gadgets, splicing and the lemma experiments.
"""

import numpy as np
import pytest

from specgap.blocks.catalog import block
from specgap.blocks.families import build_family, build_G_n
from specgap.blocks.gadgets import gadget_pair
from specgap.domain.graph import is_k_regular, path_graph
from specgap.exceptions import (
    FitViolatedError,
    GadgetNotFoundError,
    InvalidInputError,
    MuOutOfRangeError,
    NotQuarticAfterGlueError,
    UnknownFormulaError,
)
from specgap.replace import (
    FORMULAS,
    LEMMA_NAMES,
    LemmaInstance,
    LemmaReport,
    LemmaSuiteReport,
    FitWitness,
    attachments_in_last_cells,
    check_fit,
    closed_form_criterion,
    criterion,
    equitable_partitions,
    find_fit_partition,
    fit_for_end,
    formula,
    lemma_formula,
    lemma_spec,
    locate,
    replace_end_block,
    replacement_outcome,
    run_comparisons,
    run_lemma,
    run_lemma_experiment,
    splice,
    split_energy,
    end_pair_witnesses,
)
from specgap.spectra.eigen import algebraic_connectivity
from specgap.structure.partition import is_equitable, make_partition

# D0 cells {r r1 r2} {r3 r4} {r5}; D1 cells {r1 r2 r4} {r3 r5 r6} {r7}
D0_PI = make_partition(6, [[0, 1, 2], [3, 4], [5]])
D1_PI = make_partition(7, [[0, 1, 3], [2, 4, 5], [6]])
CROSS = ((0, 6, 0), (6, 0, 2), (0, 2, 0))

# ============================================================================
# TEST SUITE 1: Fits
# ============================================================================


class TestFits:
    """Test suite for the fits relation."""

    def test_hand_witness(self):
        """Test that D1 fits D0 with a hand-built witness."""
        w = FitWitness(pi=D0_PI, pi_prime=D1_PI, edge_counts=CROSS)
        assert check_fit(block("D0"), block("D1"), w)
        assert attachments_in_last_cells(block("D0"), block("D1"), w)

    def test_wrong_cross_counts(self):
        """Test that the structural cells of D1 do not witness the fit."""
        structural = make_partition(7, [[0, 1, 2, 3], [4, 5], [6]])
        w = FitWitness(pi=D0_PI, pi_prime=structural, edge_counts=CROSS)
        assert not check_fit(block("D0"), block("D1"), w)

    def test_equitable_partitions_start_structural(self):
        """Test that the first equitable partition of D0 is its structural one."""
        first = next(equitable_partitions(block("D0")))
        assert first.cells == D0_PI.cells
        assert is_equitable(block("D0").graph, first)

    def test_every_candidate_is_equitable(self):
        """Test that every listed partition of D1 is equitable with the attachment last."""
        d1 = block("D1")
        for p in equitable_partitions(d1, p_max=4):
            assert is_equitable(d1.graph, p)
            assert d1.right_attach in p.cells[-1]

    def test_search_finds_d0_d1(self):
        """Test that the search finds a witness for D1 fitting D0."""
        w = find_fit_partition(block("D0"), block("D1"))
        assert w is not None
        assert check_fit(block("D0"), block("D1"), w)

    def test_smaller_block_never_fits(self):
        """Test that a smaller block cannot fit a larger one."""
        assert find_fit_partition(block("D1"), block("D0")) is None

    def test_table_of_fits(self):
        """Test that every listed pair has a witness."""
        for d, d_prime, w in end_pair_witnesses():
            assert w is not None, (d, d_prime)
            assert check_fit(block(d), block(d_prime), w)


# ============================================================================
# TEST SUITE 2: Energy criterion
# ============================================================================


class TestCriterion:
    """Test suite for h' - h - eps * mu bookkeeping."""

    def test_criterion(self):
        """Test the arithmetic of the criterion."""
        assert criterion(1.0, 0.5, 0.1, 0.2) == pytest.approx(-0.52)

    def test_split_energy(self):
        """Test the split of edge energy on P3."""
        inside, outside = split_energy(path_graph(3), np.array([0.0, 1.0, 3.0]), {0})
        assert inside == pytest.approx(1.0)
        assert outside == pytest.approx(4.0)

    def test_identity_replacement(self):
        """Test that replacing nothing leaves a zero criterion."""
        g = build_G_n(13).graph
        report = algebraic_connectivity(g)
        outcome = replacement_outcome(
            g, report.fiedler, report.mu, g, report.fiedler, touched=[0, 1, 2]
        )
        assert outcome.h_prime == pytest.approx(outcome.h)
        assert outcome.epsilon == pytest.approx(0.0, abs=1e-12)
        assert outcome.criterion == pytest.approx(0.0, abs=1e-12)
        assert outcome.bound_after == pytest.approx(report.mu)
        assert not outcome.decreased


# ============================================================================
# TEST SUITE 3: End-block replacement
# ============================================================================


class TestEndBlock:
    """Test suite for swapping an end block for a larger one that fits."""

    def test_d0_to_d1(self):
        """Test that replacing D0 by D1 on G_16 lowers the algebraic connectivity."""
        a = build_G_n(16)
        w = fit_for_end(a, block("D1"), end="left")
        assert w is not None
        outcome = replace_end_block(a, block("D1"), w, end="left")
        assert outcome.g_prime.n == 17
        assert outcome.h_prime == pytest.approx(outcome.h)
        assert outcome.epsilon > 0
        assert outcome.criterion < 0
        assert outcome.mu_after <= outcome.bound_after + 1e-12
        assert outcome.decreased

    def test_right_end(self):
        """Test that the right end is replaced by the mirrored block."""
        a = build_G_n(16)
        w = fit_for_end(a, block("D1"), end="right")
        assert w is not None
        outcome = replace_end_block(a, block("D1"), w, end="right")
        assert outcome.decreased

    def test_bad_witness(self):
        """Test that a witness that does not show a fit is refused."""
        structural = make_partition(7, [[0, 1, 2, 3], [4, 5], [6]])
        w = FitWitness(pi=D0_PI, pi_prime=structural, edge_counts=CROSS)
        with pytest.raises(FitViolatedError):
            replace_end_block(build_G_n(16), block("D1"), w)


# ============================================================================
# TEST SUITE 4: Closed forms
# ============================================================================


class TestFormulas:
    """Test suite for the closed-form gadget components."""

    def test_e3_values(self):
        """Test x2 = (1 - mu) x1 and x3 = (mu^2 - 5mu + 2) x1 / 2."""
        values = lemma_formula("E3", 0.2, {"x1": 1.0})
        assert values["x2"] == pytest.approx(0.8)
        assert values["x3"] == pytest.approx(0.52)

    def test_constant_at_zero(self):
        """Test that every label equals the boundary value when mu = 0."""
        for name, entry in FORMULAS.items():
            values = lemma_formula(name, 0.0, {v: 1.0 for v in entry.variables})
            for label, value in values.items():
                assert value == pytest.approx(1.0), (name, label)

    def test_mu_out_of_range(self):
        """Test that strict evaluation refuses mu past the lemma bound."""
        with pytest.raises(MuOutOfRangeError):
            lemma_formula("E3", 0.4, {"x1": 1.0})
        assert "x3" in lemma_formula("E3", 0.4, {"x1": 1.0}, strict=False)

    def test_missing_boundary(self):
        """Test that a missing free value is an input error."""
        with pytest.raises(InvalidInputError):
            lemma_formula("H1", 0.1, {"x_r": 1.0})

    def test_lookup(self):
        """Test case-insensitive lookup and unknown names."""
        assert formula("h4").variables == ("x_r", "x_r5")
        with pytest.raises(UnknownFormulaError):
            formula("H9")

    def test_closed_criterion(self):
        """Test that H1 with equal boundary values has a zero criterion."""
        assert closed_form_criterion("H1", 0.2, 30, {"x_r": 0.4, "x_r3": 0.4}) == 0.0
        assert closed_form_criterion("E3", 0.2, 30, {"x1": 1.0}) is None


# ============================================================================
# TEST SUITE 5: Splicing and lemma experiments
# ============================================================================


class TestLemmas:
    """Test suite for gadget splicing and the replacement experiments."""

    def test_locate_h1(self):
        """Test that the H1 gadget occurs in its default host."""
        host = build_family(lemma_spec("H1").hosts[0])
        assert locate(host.graph, gadget_pair("H1").host)

    def test_splice_keeps_quartic(self):
        """Test that splicing H1' keeps order, size and 4-regularity."""
        host = build_family(lemma_spec("H1").hosts[0]).graph
        pair = gadget_pair("H1")
        spliced = []
        for occ in locate(host, pair.host):
            try:
                spliced.append(splice(host, pair, occ))
            except NotQuarticAfterGlueError:
                continue
        assert spliced
        for g in spliced:
            assert g.n == host.n
            assert g.size == host.size
            assert is_k_regular(g, 4)

    def test_gadget_missing(self):
        """Test that a host without the gadget is reported."""
        with pytest.raises(GadgetNotFoundError):
            run_lemma_experiment("H6", build_G_n(11))

    def test_unknown_lemma(self):
        """Test that an unknown lemma is refused."""
        with pytest.raises(UnknownFormulaError):
            lemma_spec("H7")

    def test_h1_experiment(self):
        """Test that the H1 replacement lowers mu on its default host."""
        report = run_lemma_experiment("H1", build_family(lemma_spec("H1").hosts[0]))
        assert report.occurrences >= 1
        instance = report.instance
        assert instance.status == "verified", instance.reasons
        assert instance.criterion < 0
        assert instance.mu_after < report.mu
        assert instance.closed_form_error is not None
        assert instance.closed_form_error < 1e-9
        assert report.passed

    def test_h3_experiment(self):
        """Test that the H3 replacement is verified on its default host."""
        report = run_lemma_experiment("H3", build_family(lemma_spec("H3").hosts[0]))
        instance = report.instance
        assert instance.status == "verified", instance.reasons
        s = instance.orientation
        assert s * instance.boundary["x_r"] > s * instance.boundary["x_r4"]
        assert instance.criterion < 0

    def test_h1_prefers_the_oriented_occurrence(self):
        """Test that the chosen H1 occurrence has x_r above x_r3 and x_r3 non-negative."""
        report = run_lemma_experiment("H1", build_family(lemma_spec("H1").hosts[0]))
        b = report.instance.boundary
        s = report.instance.orientation
        assert s * b["x_r"] > s * b["x_r3"] >= 0

    def test_suite_without_verified_instance_fails(self):
        """Test that a suite whose instances all miss their hypotheses does not pass."""
        instance = LemmaInstance(
            occurrence=[0],
            orientation=1,
            boundary={"x_r": 0.05, "x_r3": 0.15},
            formula_error=0.0,
            formula_residual=0.0,
            mu_before=0.1,
            bound_after=0.1,
            mu_after=0.1,
            h=0.0,
            h_prime=0.0,
            ell=0.0,
            delta=0.0,
            epsilon=0.0,
            criterion=0.0007,
            status="hypothesis_unmet",
            reasons=["sign conditions fail in both orientations"],
        )
        experiment = LemmaReport(
            name="H1", host=[], n=35, mu=0.1, gap23=None, occurrences=1, instance=instance
        )
        suite = LemmaSuiteReport(name="H1", experiments=[experiment], comparisons=[])
        assert experiment.passed
        assert suite.verified == 0
        assert not suite.all_passed

    @pytest.mark.parametrize("name", LEMMA_NAMES)
    def test_every_lemma(self, name):
        """Test every lemma suite on its default hosts."""
        suite = run_lemma(name)
        assert suite.missing_hosts == []
        assert suite.experiments
        assert suite.verified > 0
        assert suite.all_passed

    def test_comparisons(self):
        """Test that the long complete blocks lose to G_14 and G_17."""
        rows = run_comparisons("E1")
        assert [r.n for r in rows] == [14, 17]
        assert all(r.mu_smaller < r.mu_larger for r in rows)
