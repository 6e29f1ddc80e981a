"""
Unit tests for the specgap.structure package.

Partitions, colour refinement and the shape of the Fiedler vector on
path-like assemblies.
"""

import numpy as np
import pytest

from specgap.blocks.families import build_G_n, build_H
from specgap.domain.graph import cycle_graph, path_graph
from specgap.exceptions import (
    DimensionMismatchError,
    NotAPartitionError,
    NotPalindromicError,
)
from specgap.spectra.eigen import algebraic_connectivity
from specgap.structure import (
    cell_edge_counts,
    coarsest_equitable,
    exceptional_cells,
    fiedler_structure,
    is_equitable,
    is_palindromic,
    make_partition,
    mirror_map,
    neighbour_counts,
    structural_partition,
    structure_status,
)

# ============================================================================
# TEST SUITE 1: Partitions
# ============================================================================


class TestPartition:
    """Test suite for partition validation and equitability."""

    def test_must_cover(self):
        """Test that a missing vertex is refused."""
        with pytest.raises(NotAPartitionError):
            make_partition(3, [[0], [1]])

    def test_no_overlap(self):
        """Test that a repeated vertex is refused."""
        with pytest.raises(NotAPartitionError):
            make_partition(3, [[0, 1], [1, 2]])

    def test_no_empty_cell(self):
        """Test that an empty cell is refused."""
        with pytest.raises(NotAPartitionError):
            make_partition(2, [[0, 1], []])

    def test_cell_index(self):
        """Test the cell number of every vertex."""
        p = make_partition(4, [[0, 3], [1, 2]])
        assert p.cell_index() == [0, 1, 1, 0]
        assert p.sizes() == [2, 2]

    def test_equitable(self):
        """Test equitability on P3 and C6."""
        p3 = path_graph(3)
        assert is_equitable(p3, make_partition(3, [[0, 2], [1]]))
        assert not is_equitable(p3, make_partition(3, [[0, 1, 2]]))
        assert is_equitable(cycle_graph(6), make_partition(6, [list(range(6))]))

    def test_counts(self):
        """Test neighbour and edge counts on P3 with ends and middle split."""
        p3 = path_graph(3)
        p = make_partition(3, [[0, 2], [1]])
        assert neighbour_counts(p3, p).tolist() == [[0, 1], [2, 0], [0, 1]]
        assert cell_edge_counts(p3, p).tolist() == [[0, 2], [2, 0]]

    def test_wrong_order(self):
        """Test that a partition of another vertex set is refused."""
        with pytest.raises(NotAPartitionError):
            is_equitable(path_graph(4), make_partition(3, [[0, 1, 2]]))

    def test_coarsest_equitable_on_path(self):
        """Test that P4 splits into ends and middles."""
        p = coarsest_equitable(path_graph(4))
        assert p.cells == ((0, 3), (1, 2))

    def test_coarsest_equitable_on_regular_graph(self):
        """Test that a vertex-transitive graph keeps one cell."""
        assert coarsest_equitable(cycle_graph(7)).size == 1

    def test_structural_partition(self):
        """Test that the structural cells of H_{0,0}(1) are a partition."""
        a = build_H(1, 0, 0)
        p = structural_partition(a)
        assert p.n == a.n
        assert p.size == len(a.cell_order)


# ============================================================================
# TEST SUITE 2: Fiedler structure
# ============================================================================


class TestFiedlerStructure:
    """Test suite for cell constancy, decrease and the sign change."""

    def test_hand_vector(self):
        """Test a decreasing skew vector on singleton cells of P4."""
        g = path_graph(4)
        p = make_partition(4, [[0], [1], [2], [3]])
        report = fiedler_structure(g, [3, 1, -1, -3], p, mirror=[3, 2, 1, 0])
        assert report.passed
        assert report.sign_changes == 1
        assert report.skew_symmetric is True

    def test_flat_step_fails(self):
        """Test that equal neighbouring cell means are not a strict decrease."""
        g = path_graph(4)
        p = make_partition(4, [[0], [1], [2], [3]])
        report = fiedler_structure(g, [1, 1, -1, -1], p)
        assert not report.decreasing
        assert not report.passed

    def test_spread(self):
        """Test that an uneven cell breaks cell constancy."""
        g = path_graph(4)
        p = make_partition(4, [[0, 1], [2, 3]])
        report = fiedler_structure(g, [2.0, 1.0, -1.0, -2.0], p)
        assert not report.cell_constant
        assert report.max_spread == pytest.approx(1.0)

    def test_zero_cell_skipped_in_sign_count(self):
        """Test that a zero middle cell does not add sign changes."""
        g = path_graph(3)
        p = make_partition(3, [[0], [1], [2]])
        report = fiedler_structure(g, [1.0, 0.0, -1.0], p)
        assert report.zero_cells == [1]
        assert report.sign_changes == 1

    def test_exempt_cells(self):
        """Test that spread in an exempt cell is reported, not counted."""
        g = path_graph(4)
        p = make_partition(4, [[0, 1], [2], [3]])
        report = fiedler_structure(g, [3.0, 2.0, -1.0, -4.0], p, exceptional=[0])
        assert report.cell_constant
        assert report.known_exceptions == [0]

    def test_dimension_mismatch(self):
        """Test that vector length must equal the order."""
        with pytest.raises(DimensionMismatchError):
            fiedler_structure(path_graph(3), [1.0, -1.0], make_partition(3, [[0, 1, 2]]))

    def test_gn_has_the_expected_shape(self):
        """Test that the Fiedler vector of G_n passes for n = 11..20."""
        for n in range(11, 21):
            a = build_G_n(n)
            report = algebraic_connectivity(a.graph, a.cell_order)
            structure = fiedler_structure(
                a.graph,
                report.vector,
                structural_partition(a),
                exceptional=exceptional_cells(a),
            )
            assert structure.passed, n
            assert structure_status(structure, report.gap23) == "pass"

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(21, 101))
    def test_gn_shape_up_to_100(self, n):
        """Test the Fiedler vector shape of G_n for n = 21..100."""
        a = build_G_n(n)
        report = algebraic_connectivity(a.graph, a.cell_order)
        structure = fiedler_structure(
            a.graph,
            report.vector,
            structural_partition(a),
            exceptional=exceptional_cells(a),
        )
        assert structure.passed
        assert structure_status(structure, report.gap23) == "pass"

    def test_reversed_cells_fail(self):
        """Test that reading the cells right to left is not decreasing."""
        a = build_G_n(16)
        report = algebraic_connectivity(a.graph, a.cell_order)
        reversed_p = make_partition(a.n, list(reversed(a.cell_order)))
        assert not fiedler_structure(a.graph, report.vector, reversed_p).decreasing

    def test_status_indeterminate(self):
        """Test that a tiny lambda3 - lambda2 makes the status indeterminate."""
        g = path_graph(4)
        p = make_partition(4, [[0], [1], [2], [3]])
        report = fiedler_structure(g, [3, 1, -1, -3], p)
        assert structure_status(report, 1e-12) == "indeterminate"
        assert structure_status(report, None) == "pass"


# ============================================================================
# TEST SUITE 3: Mirror symmetry
# ============================================================================


class TestMirror:
    """Test suite for palindromic assemblies and their involution."""

    def test_palindromic(self):
        """Test that D0 M0 ~D0 is palindromic and D0 ~D1 is not."""
        assert is_palindromic(build_G_n(16))
        assert not is_palindromic(build_G_n(12))

    def test_mirror_map_is_an_involution(self):
        """Test that the mirror of G_21 squares to the identity."""
        perm = mirror_map(build_G_n(21))
        assert sorted(perm) == list(range(21))
        assert all(perm[perm[v]] == v for v in range(21))

    def test_skew_symmetric_fiedler_vector(self):
        """Test that the Fiedler vector of G_16 is skew under the mirror."""
        a = build_G_n(16)
        report = algebraic_connectivity(a.graph, a.cell_order)
        structure = fiedler_structure(
            a.graph,
            report.vector,
            structural_partition(a),
            mirror=mirror_map(a),
            exceptional=exceptional_cells(a),
        )
        assert structure.skew_symmetric is True
        assert structure.passed

    def test_not_palindromic(self):
        """Test that an asymmetric sequence has no mirror map."""
        with pytest.raises(NotPalindromicError):
            mirror_map(build_G_n(12))

    def test_exceptional_cells_of_g11(self):
        """Test that both D0 heads of G_11 are exceptional cells."""
        a = build_G_n(11)
        assert exceptional_cells(a) == [0, len(a.cell_order) - 1]
