"""
Tests for the read-only HTTP API.

Every route is exercised through FastAPI's TestClient against the real
library. Only the launcher test stubs out uvicorn.
"""

import inspect

import pytest
from fastapi.testclient import TestClient

from specgap.blocks.catalog import catalog_tags
from specgap.blocks.families import build_G_n
from specgap.domain.formats import to_graph6


@pytest.fixture
def client():
    """Create the test client with the worker count set by conftest."""
    from api.main import app

    return TestClient(app)


# ============================================================================
# TEST SUITE 1: Service routes
# ============================================================================


class TestService:
    """Test suite for the root and health routes."""

    def test_root(self, client):
        """Test that the root route answers."""
        response = client.get("/")
        assert response.status_code == 200
        assert "running" in response.json()["message"]

    def test_health(self, client):
        """Test the health check."""
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "healthy"}

    def test_compute_routes_run_in_the_threadpool(self):
        """Test that the CPU-bound route handlers are plain functions."""
        from api.routers import families, spectra, verify

        for module in (families, spectra, verify):
            for route in module.router.routes:
                assert not inspect.iscoroutinefunction(route.endpoint), route.path

    def test_launcher_reads_the_environment(self, monkeypatch):
        """Test that the launcher passes host, port and reload to uvicorn."""
        import run_api

        calls = []
        monkeypatch.setenv("API_HOST", "0.0.0.0")
        monkeypatch.setenv("API_PORT", "6066")
        monkeypatch.setenv("API_RELOAD", "false")
        monkeypatch.setattr(
            run_api.uvicorn, "run", lambda app, **kwargs: calls.append((app, kwargs))
        )
        run_api.main()
        assert calls == [
            (
                "api.main:app",
                {"host": "0.0.0.0", "port": 6066, "reload": False, "reload_dirs": None},
            )
        ]


# ============================================================================
# TEST SUITE 2: Families
# ============================================================================


class TestFamilies:
    """Test suite for the graph family routes."""

    def test_gn_json(self, client):
        """Test that G_11 comes back with its blocks and edges."""
        response = client.get("/api/families/gn/11")
        assert response.status_code == 200
        data = response.json()
        assert data["n"] == 11
        assert len(data["edges"]) == 22
        assert data["graph6"] == to_graph6(build_G_n(11).graph)
        assert data["blocks"] == build_G_n(11).tags

    def test_gn_graph6(self, client):
        """Test the plain-text graph6 form."""
        response = client.get("/api/families/gn/12", params={"format": "graph6"})
        assert response.status_code == 200
        assert response.text == to_graph6(build_G_n(12).graph) + "\n"

    def test_gn_too_small(self, client):
        """Test that an order below the family range is a client error."""
        response = client.get("/api/families/gn/5")
        assert response.status_code == 400

    def test_h(self, client):
        """Test H_{0,0}(1)."""
        response = client.get("/api/families/h", params={"m": 1, "i": 0, "j": 0})
        assert response.status_code == 200
        data = response.json()
        assert data["n"] == 16
        assert data["blocks"] == ["D0", "M0", "~D0"]

    def test_h_missing_query(self, client):
        """Test that m, i and j are required."""
        response = client.get("/api/families/h", params={"m": 1})
        assert response.status_code == 422

    def test_block_tags(self, client):
        """Test that the catalog listing matches the library."""
        response = client.get("/api/families/blocks")
        assert response.status_code == 200
        assert response.json() == catalog_tags()

    def test_block_m0(self, client):
        """Test the M0 block with its ports and cells."""
        response = client.get("/api/families/blocks/M0")
        assert response.status_code == 200
        data = response.json()
        assert data["tag"] == "M0"
        assert data["kind"] == "middle"
        assert data["symmetric"] is True
        assert data["left_port"]
        assert data["right_port"]
        assert sorted(v for cell in data["cells"] for v in cell) == list(range(data["n"]))

    def test_unknown_block(self, client):
        """Test that an unknown tag returns 404."""
        response = client.get("/api/families/blocks/Q7")
        assert response.status_code == 404


# ============================================================================
# TEST SUITE 3: Spectra
# ============================================================================


class TestSpectra:
    """Test suite for the spectral routes."""

    def test_mu_from_graph6(self, client):
        """Test that mu of K3 is 3."""
        response = client.post("/api/spectra/mu", json={"graph6": "Bw"})
        assert response.status_code == 200
        data = response.json()
        assert data["n"] == 3
        assert data["mu"] == pytest.approx(3.0)
        assert data["eigenvalues"][0] == pytest.approx(0.0, abs=1e-12)

    def test_mu_from_edges(self, client):
        """Test that mu of the 4-cycle is 2."""
        response = client.post(
            "/api/spectra/mu",
            json={"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]},
        )
        assert response.status_code == 200
        assert response.json()["mu"] == pytest.approx(2.0)

    def test_mu_needs_one_source(self, client):
        """Test that a payload with no graph is refused."""
        response = client.post("/api/spectra/mu", json={})
        assert response.status_code == 422

    def test_mu_bad_edge(self, client):
        """Test that an edge outside the vertex range is a client error."""
        response = client.post("/api/spectra/mu", json={"n": 3, "edges": [[0, 5]]})
        assert response.status_code == 400

    def test_structure_gn16(self, client):
        """Test that G_16 passes the Fiedler structure checks."""
        response = client.post("/api/spectra/structure", json={"family": "gn:16"})
        assert response.status_code == 200
        data = response.json()
        assert data["status"] == "pass"
        assert data["report"]["passed"] is True
        assert data["blocks"] == build_G_n(16).tags

    def test_structure_bad_sequence(self, client):
        """Test that a sequence that cannot be glued is a client error."""
        response = client.post("/api/spectra/structure", json={"family": "D0,D0"})
        assert response.status_code == 400


# ============================================================================
# TEST SUITE 4: Verifications
# ============================================================================


class TestVerify:
    """Test suite for the verification routes."""

    def test_roots(self, client):
        """Test that the root claims pass and intervals serialize as fractions."""
        response = client.get("/api/verify/roots")
        assert response.status_code == 200
        data = response.json()
        assert data["all_passed"] is True
        interval = data["report"]["roots"][0]["interval"]
        assert isinstance(interval["lo"], str)
        assert isinstance(interval["hi"], str)

    def test_gn_bounds(self, client):
        """Test mu(G_n) for n = 11..15."""
        response = client.get("/api/verify/table2", params={"lo": 11, "hi": 15})
        assert response.status_code == 200
        data = response.json()
        assert data["all_passed"] is True
        assert [r["n"] for r in data["report"]["rows"]] == [11, 12, 13, 14, 15]

    def test_gn_bounds_empty_range(self, client):
        """Test that hi below lo is a client error."""
        response = client.get("/api/verify/table2", params={"lo": 15, "hi": 11})
        assert response.status_code == 400

    def test_unknown_lemma(self, client):
        """Test that an unknown lemma name returns 404."""
        response = client.get("/api/verify/lemma/H9")
        assert response.status_code == 404
