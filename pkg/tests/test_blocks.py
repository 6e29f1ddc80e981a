"""
Unit tests for the specgap.blocks package.

Catalog blocks, gluing, long blocks, named families and replacement gadgets.
"""

import numpy as np
import pytest

from specgap.blocks.assembly import assemble, block_sequence, identify_block
from specgap.blocks.catalog import block, catalog_tags, mirror, mirror_tag
from specgap.blocks.families import (
    build_family,
    build_G_n,
    build_H,
    g_n_sequence,
    h_order,
    parse_sequence,
)
from specgap.blocks.gadgets import PAIR_NAMES, gadget, gadget_pair
from specgap.blocks.long_blocks import build_long_block
from specgap.domain.graph import (
    complete_graph,
    degrees,
    is_connected,
    is_k_regular,
    relabel,
    to_networkx,
)
from specgap.exceptions import (
    GrammarViolationError,
    IncompatibleAttachmentError,
    InvalidInputError,
    OrderTooSmallError,
    UnknownKindError,
)

# ============================================================================
# TEST SUITE 1: Catalog
# ============================================================================


class TestCatalog:
    """Test suite for fixed catalog blocks."""

    def test_m0_shape(self):
        """Test that M0 has 6 vertices, 10 edges and two degree-2 attachments."""
        m0 = block("M0")
        assert m0.order == 6
        assert m0.graph.size == 10
        deg = degrees(m0.graph)
        assert deg[m0.left_attach] == 2
        assert deg[m0.right_attach] == 2

    def test_end_block_orders(self):
        """Test the orders of the five end blocks."""
        assert [block(f"D{i}").order for i in range(5)] == [6, 7, 8, 9, 10]

    def test_d4_attaches_on_the_right(self):
        """Test that D4 is closed on the left with one attachment on the right."""
        d4 = block("D4")
        assert d4.left_port == ()
        assert d4.right_attach is not None
        assert degrees(d4.graph)[d4.right_attach] == 2

    def test_every_other_vertex_is_quartic(self):
        """Test that only port vertices of an end block miss degree 4."""
        for i in range(5):
            b = block(f"D{i}")
            deg = degrees(b.graph)
            ports = set(b.left_port) | set(b.right_port)
            assert all(d == 4 for v, d in enumerate(deg) if v not in ports)

    def test_cells_cover_the_block(self):
        """Test that structural cells partition the vertices of each block."""
        for tag in catalog_tags():
            b = block(tag)
            covered = sorted(v for cell in b.cells for v in cell)
            assert covered == list(range(b.order))

    def test_unknown_tag(self):
        """Test that an unknown tag raises UnknownKindError."""
        with pytest.raises(UnknownKindError):
            block("D9")

    def test_mirror(self):
        """Test that mirroring swaps ports and reverses cells."""
        d1 = block("D1")
        m = mirror(d1)
        assert m.tag == "~D1"
        assert m.right_port == d1.left_port
        assert m.left_port == d1.right_port
        assert m.cells == tuple(reversed(d1.cells))
        assert mirror(m).tag == "D1"
        assert block("~D1") == m

    def test_symmetric_blocks_are_their_own_mirror(self):
        """Test that M0 is returned unchanged by mirror."""
        assert mirror(block("M0")) == block("M0")
        assert mirror_tag("M0") == "M0"

    def test_bricks_present(self):
        """Test that the bricks are catalog entries."""
        for tag in ("D'0", "D'3", "M'0", "M'1", "M'2", "M''0", "M''1"):
            assert tag in catalog_tags()
        assert block("M''0").order == 4


# ============================================================================
# TEST SUITE 2: Assembly
# ============================================================================


class TestAssembly:
    """Test suite for gluing blocks into path-like graphs."""

    def test_d0_m0_d0(self):
        """Test that D0 M0 ~D0 is a quartic graph on 16 vertices."""
        a = assemble(["D0", "M0", "~D0"])
        assert a.n == 16
        assert is_k_regular(a.graph, 4)
        assert len(a.cut_vertices) == 2

    def test_cells_cover_assembly(self):
        """Test that the merged cells cover every vertex once."""
        a = assemble(["D1", "M0", "M0", "~D2"])
        covered = sorted(v for cell in a.cell_order for v in cell)
        assert covered == list(range(a.n))

    def test_cut_vertices_share_a_cell(self):
        """Test that each cut vertex forms part of one merged cell."""
        a = assemble(["D0", "M0", "~D0"])
        for cut in a.cut_vertices:
            assert sum(cut in cell for cell in a.cell_order) == 1

    def test_open_outer_attachment(self):
        """Test that a sequence ending on an open port is refused."""
        with pytest.raises(IncompatibleAttachmentError):
            assemble(["D0", "M0"])

    def test_bad_junction(self):
        """Test that two closed sides cannot be glued."""
        with pytest.raises(IncompatibleAttachmentError):
            assemble(["D0", "D0"])

    @pytest.mark.parametrize(
        "tags",
        [
            ["D0", "M0", "~D1"],
            ["D1", "M2", "M0", "~D3"],
            ["D2", "M1", "M3", "~D4"],
        ],
    )
    def test_block_sequence_reads_back(self, tags):
        """Test that the block sequence is recovered from the glued graph alone."""
        a = assemble(tags)
        perm = [int(v) for v in np.random.default_rng(7).permutation(a.n)]
        reversed_reading = [mirror_tag(t) for t in reversed(tags)]
        assert block_sequence(a.graph) == min(tags, reversed_reading)
        assert block_sequence(relabel(a.graph, perm)) == block_sequence(a.graph)

    def test_block_sequence_of_g_n(self):
        """Test that G_16 reads back as D0 M0 ~D0."""
        assert block_sequence(build_G_n(16).graph) == ["D0", "M0", "~D0"]

    def test_block_sequence_rejects_other_graphs(self):
        """Test graphs without a catalog block path."""
        assert block_sequence(complete_graph(5)) is None
        long_middle = build_family("D0,long:middle:M'0+~M'0,~D0")
        assert block_sequence(long_middle.graph) is None

    def test_identify_block_uses_roles(self):
        """Test that an end block is told apart from its mirror by its attachment."""
        d1 = to_networkx(block("D1").graph)
        for v in d1.nodes:
            d1.nodes[v]["role"] = ""
        d1.nodes[block("D1").right_attach]["role"] = "right"
        assert identify_block(d1) == "D1"
        d1.nodes[block("D1").right_attach]["role"] = "left"
        assert identify_block(d1) == "~D1"
        d1.nodes[block("D1").right_attach]["role"] = ""
        assert identify_block(d1) is None


# ============================================================================
# TEST SUITE 3: Families
# ============================================================================


class TestFamilies:
    """Test suite for G_n, H_{i,j}(m) and family specs."""

    def test_g11(self):
        """Test that G_11 is D0 glued to its mirror."""
        assert g_n_sequence(11) == ["D0", "~D0"]
        assert build_G_n(11).n == 11

    def test_end_pairs(self):
        """Test the end pair chosen by (n - 11) mod 5."""
        assert g_n_sequence(12) == ["D0", "~D1"]
        assert g_n_sequence(13) == ["D1", "~D1"]
        assert g_n_sequence(14) == ["D1", "~D2"]
        assert g_n_sequence(15) == ["D0", "~D4"]
        assert g_n_sequence(21) == ["D0", "M0", "M0", "~D0"]

    def test_orders_and_regularity(self):
        """Test that G_n has n vertices and is connected quartic for n = 11..40."""
        for n in range(11, 41):
            g = build_G_n(n).graph
            assert g.n == n
            assert is_k_regular(g, 4)
            assert is_connected(g)

    def test_too_small(self):
        """Test that G_n is undefined below 11."""
        with pytest.raises(OrderTooSmallError):
            build_G_n(10)

    def test_h_orders(self):
        """Test the orders of H_{0,0}(m), H_{4,4}(m) and H_{2,2}(0)."""
        for m in range(4):
            assert build_H(m, 0, 0).n == 5 * m + 11
            assert build_H(m, 4, 4).n == 5 * m + 19
        assert build_H(0, 2, 2).n == 15
        assert h_order(3, 1, 2) == build_H(3, 1, 2).n

    def test_h_index_range(self):
        """Test that end indices outside 0..4 are refused."""
        with pytest.raises(InvalidInputError):
            build_H(1, 5, 0)

    def test_family_specs(self):
        """Test the gn:, h: and sequence spec forms."""
        assert build_family("gn:16").tags == build_G_n(16).tags
        assert build_family("h:2,1,3").tags == ["D1", "M0", "M0", "~D3"]
        assert build_family("seq:D0,M0,~D1").n == 17
        assert build_family("D0,M0,~D1").n == 17

    def test_malformed_spec(self):
        """Test that a malformed spec is an input error."""
        with pytest.raises(InvalidInputError):
            build_family("h:1,2")
        with pytest.raises(InvalidInputError):
            parse_sequence(" , ")


# ============================================================================
# TEST SUITE 4: Long blocks
# ============================================================================


class TestLongBlocks:
    """Test suite for brick chains."""

    def test_long_end_block(self):
        """Test that D'0 + ~M'0 is an end block with one open pair."""
        b = build_long_block(["D'0", "~M'0"], "end")
        assert b.kind == "end"
        assert b.left_port == ()
        assert len(b.right_port) == 1

    def test_long_middle_block(self):
        """Test that M'1 + M''0 + ~M'2 is a middle block with two attachments."""
        b = build_long_block(["M'1", "M''0", "~M'2"], "middle")
        assert b.left_attach is not None
        assert b.right_attach is not None

    def test_long_complete_block(self):
        """Test that D'0 + ~D'3 is a standalone quartic graph."""
        b = build_long_block(["D'0", "~D'3"], "complete")
        assert b.left_port == () and b.right_port == ()
        assert is_k_regular(b.graph, 4)

    def test_long_block_in_assembly(self):
        """Test that a long end block assembles with ordinary blocks."""
        a = build_family("long:end:D'0+~M'0,M0,~D0")
        assert is_k_regular(a.graph, 4)

    def test_grammar(self):
        """Test that heads, tails and interior bricks are enforced."""
        with pytest.raises(GrammarViolationError):
            build_long_block(["M'0", "~M'0"], "end")
        with pytest.raises(GrammarViolationError):
            build_long_block(["D'0", "M'1", "~M'0"], "end")
        with pytest.raises(GrammarViolationError):
            build_long_block(["D'0"], "end")


# ============================================================================
# TEST SUITE 5: Gadgets
# ============================================================================


class TestGadgets:
    """Test suite for replacement gadgets."""

    def test_all_pairs_present(self):
        """Test that every lemma has a gadget pair."""
        assert set(PAIR_NAMES) == {"E1", "E2", "E3", "H1", "H2", "H3", "H4", "H5", "H6"}

    def test_pair_shapes_agree(self):
        """Test that H and H' have equal vertex, edge and stub counts."""
        for name in PAIR_NAMES:
            pair = gadget_pair(name)
            assert pair.host.order == pair.replacement.order
            assert pair.host.graph.size == pair.replacement.graph.size
            assert len(pair.host.stubs) == len(pair.replacement.stubs)

    def test_h1_order(self):
        """Test that H1 has seven vertices."""
        assert gadget("H1").order == 7
        assert gadget("H'_1").name == gadget("H1'").name

    def test_d0m3(self):
        """Test that D0 glued to M3 has 12 vertices."""
        assert gadget("D0M3").order == 12
        assert gadget("D_0M_3").order == 12

    def test_comparison_blocks(self):
        """Test the two complete long blocks of the small-order comparison."""
        assert gadget("long14").order == 14
        assert gadget("long17").order == 17

    def test_unknown_gadget(self):
        """Test that an unknown name raises UnknownKindError."""
        with pytest.raises(UnknownKindError):
            gadget_pair("H9")
