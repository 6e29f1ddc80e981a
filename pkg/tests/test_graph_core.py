"""
Unit tests for the specgap.domain package.

Graph construction, Laplacians, canonical certificates and graph6/JSON
serialization.
"""

import itertools

import networkx as nx
import numpy as np
import pytest

from specgap.blocks.families import build_G_n, build_H, h_order
from specgap.domain import (
    are_isomorphic,
    canonical_cert,
    complement,
    complete_graph,
    cycle_graph,
    degrees,
    disjoint_union,
    from_graph6,
    from_networkx,
    from_json,
    is_connected,
    is_k_regular,
    laplacian,
    make_graph,
    path_graph,
    relabel,
    to_graph6,
    to_json,
    to_networkx,
)
from specgap.exceptions import (
    Graph6FormatError,
    IndexOutOfRangeError,
    InvalidInputError,
    LoopEdgeError,
)


def _isomorphic_by_search(a, b) -> bool:
    if a.n != b.n or a.size != b.size:
        return False
    target = set(b.edges)
    return any(
        all(tuple(sorted((perm[u], perm[v]))) in target for u, v in a.edges)
        for perm in itertools.permutations(range(a.n))
    )


# ============================================================================
# TEST SUITE 1: Graph construction
# ============================================================================


class TestMakeGraph:
    """Test suite for validated graph construction."""

    def test_triangle(self):
        """Test that three pairs on three vertices give K3."""
        g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.n == 3
        assert g.size == 3
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_duplicates_and_orientation_collapse(self):
        """Test that repeated and reversed pairs are stored once."""
        g = make_graph(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges == ((0, 1), (1, 2))

    def test_loop_rejected(self):
        """Test that an edge from a vertex to itself is refused."""
        with pytest.raises(LoopEdgeError):
            make_graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        """Test that endpoints must be below n."""
        with pytest.raises(IndexOutOfRangeError):
            make_graph(3, [(0, 3)])

    def test_octahedron_from_matching_complement(self):
        """Test that the complement of a perfect matching on six vertices is quartic."""
        matching = make_graph(6, [(0, 1), (2, 3), (4, 5)])
        octahedron = complement(matching)
        assert octahedron.size == 12
        assert is_k_regular(octahedron, 4)

    def test_has_edge(self):
        """Test edge lookup in both orientations."""
        g = path_graph(4)
        assert g.has_edge(1, 2)
        assert g.has_edge(2, 1)
        assert not g.has_edge(0, 3)

    def test_relabel_requires_permutation(self):
        """Test that relabel refuses a map that is not a permutation."""
        with pytest.raises(InvalidInputError):
            relabel(path_graph(3), [0, 0, 1])


# ============================================================================
# TEST SUITE 2: Laplacian and degree queries
# ============================================================================


class TestLaplacian:
    """Test suite for the Laplacian matrix and degree queries."""

    def test_single_edge(self):
        """Test the Laplacian of P2."""
        lap = laplacian(path_graph(2))
        assert lap.entries.tolist() == [[1.0, -1.0], [-1.0, 1.0]]

    def test_complete_graph(self):
        """Test that L(K5) = 5I - J."""
        lap = laplacian(complete_graph(5))
        expected = 5 * np.eye(5) - np.ones((5, 5))
        assert np.array_equal(lap.entries, expected)

    def test_rows_sum_to_zero(self):
        """Test that every row of L(G_11) sums to zero and the diagonal is 4."""
        lap = laplacian(build_G_n(11).graph)
        assert lap.order == 11
        assert not lap.entries.sum(axis=1).any()
        assert set(np.diag(lap.entries).tolist()) == {4.0}

    def test_entries_read_only(self):
        """Test that the stored matrix cannot be modified."""
        lap = laplacian(cycle_graph(4))
        with pytest.raises(ValueError):
            lap.entries[0, 0] = 7.0

    def test_regularity(self):
        """Test is_k_regular on K5 and P2."""
        assert is_k_regular(complete_graph(5), 4)
        assert not is_k_regular(path_graph(2), 4)
        assert degrees(path_graph(3)) == [1, 2, 1]

    def test_connectivity(self):
        """Test that two disjoint triangles are not connected while G_20 is."""
        triangles = disjoint_union(complete_graph(3), complete_graph(3))
        assert not is_connected(triangles)
        assert is_connected(complete_graph(5))
        assert is_connected(build_G_n(20).graph)


# ============================================================================
# TEST SUITE 3: Canonical certificates
# ============================================================================


class TestCanonicalCert:
    """Test suite for nauty certificates."""

    def test_relabel_invariance(self):
        """Test that relabelling C5 keeps its certificate."""
        c5 = cycle_graph(5)
        shuffled = relabel(c5, [3, 0, 4, 1, 2])
        assert canonical_cert(c5) == canonical_cert(shuffled)

    def test_c6_versus_two_triangles(self):
        """Test that C6 and two triangles get different certificates."""
        two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3))
        assert canonical_cert(cycle_graph(6)) != canonical_cert(two_triangles)

    def test_two_quartic_graphs_on_seven_vertices(self):
        """Test that the complements of C7 and C3+C4 are told apart."""
        a = complement(cycle_graph(7))
        b = complement(disjoint_union(cycle_graph(3), cycle_graph(4)))
        assert is_k_regular(a, 4) and is_k_regular(b, 4)
        assert not are_isomorphic(a, b)

    def test_order_is_part_of_the_certificate(self):
        """Test that edgeless graphs of different orders differ."""
        assert canonical_cert(make_graph(2, [])) != canonical_cert(make_graph(3, []))

    def test_agrees_with_networkx(self):
        """Test certificate equality against networkx isomorphism on random graphs."""
        graphs = [
            from_networkx(nx.gnm_random_graph(7, 10, seed=seed)) for seed in range(30)
        ]
        for a, b in zip(graphs, graphs[1:]):
            expected = nx.is_isomorphic(to_networkx(a), to_networkx(b))
            assert are_isomorphic(a, b) == expected
            assert are_isomorphic(a, relabel(a, [6, 5, 4, 3, 2, 1, 0]))

    @pytest.mark.slow
    def test_agrees_with_exhaustive_search(self):
        """Test certificate equality against a search over all vertex maps, 1000 pairs."""
        rng = np.random.default_rng(11)
        outcomes = set()
        for i in range(1000):
            n = int(rng.integers(4, 9))
            m = int(rng.integers(0, n * (n - 1) // 2 + 1))
            a = from_networkx(nx.gnm_random_graph(n, m, seed=2 * i))
            if i % 2:
                b = relabel(a, [int(v) for v in rng.permutation(n)])
            else:
                b = from_networkx(nx.gnm_random_graph(n, m, seed=2 * i + 1))
            expected = _isomorphic_by_search(a, b)
            assert are_isomorphic(a, b) == expected, (to_graph6(a), to_graph6(b))
            outcomes.add(expected)
        assert outcomes == {True, False}


# ============================================================================
# TEST SUITE 4: Serialization
# ============================================================================


class TestFormats:
    """Test suite for graph6 and JSON encodings."""

    def test_k3_graph6(self):
        """Test the standard graph6 string of K3."""
        assert to_graph6(complete_graph(3)) == "Bw"

    def test_graph6_round_trip(self):
        """Test that G_11 survives graph6 encoding."""
        g = build_G_n(11).graph
        assert from_graph6(to_graph6(g)) == g

    @pytest.mark.slow
    def test_graph6_round_trip_for_families(self):
        """Test graph6 round trips for every G_n and H_{i,j}(m) up to 200 vertices."""
        for n in range(11, 201):
            g = build_G_n(n).graph
            assert from_graph6(to_graph6(g)) == g, n
        for i, j in itertools.product(range(5), repeat=2):
            m = 0
            while h_order(m, i, j) <= 200:
                g = build_H(m, i, j).graph
                assert from_graph6(to_graph6(g)) == g, (m, i, j)
                m += 1

    def test_graph6_header_accepted(self):
        """Test that the optional >>graph6<< header is skipped."""
        assert from_graph6(">>graph6<<Bw") == complete_graph(3)

    def test_graph6_malformed(self):
        """Test that a body of the wrong length is refused."""
        with pytest.raises(Graph6FormatError):
            from_graph6("Dw")

    def test_sparse6_rejected(self):
        """Test that sparse6 input is refused."""
        with pytest.raises(Graph6FormatError):
            from_graph6(":Fa@x^")

    def test_json_round_trip(self):
        """Test the {n, edges} schema."""
        g = cycle_graph(5)
        assert to_json(g) == {"n": 5, "edges": [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]]}
        assert from_json(to_json(g)) == g

    def test_json_errors(self):
        """Test that malformed JSON text is an input error."""
        with pytest.raises(InvalidInputError):
            from_json("{not json")
        with pytest.raises(InvalidInputError):
            from_json({"edges": []})
