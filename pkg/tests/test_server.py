"""
HTTP API over the presets, suites and structure dumps.
"""
import pytest
from fastapi.testclient import TestClient

from qhopf.serialize import structure_to_json
from server import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestCatalogue:

    def test_health(self, client):
        body = client.get("/api/health").json()
        assert body["ok"] is True
        assert body["seed"] == 20240517

    def test_presets(self, client):
        body = client.get("/api/presets").json()
        names = {p["name"] for p in body["presets"]}
        assert {"trivial-z2", "z2", "z2cubed", "octonion-bosonisation"} <= names
        assert "perturbation" in body["suites"]
        z2 = next(p for p in body["presets"] if p["name"] == "z2")
        assert z2["kphi"] is True
        assert "sigma" in z2["suites"]

    def test_structure_dump(self, client):
        res = client.get("/api/structure/z2/dqd")
        assert res.status_code == 200
        data = res.json()
        assert data["kind"] == "quasitriangular"
        assert data["group"]["table"] == [[0, 1], [1, 0]]

    def test_unknown_names(self, client):
        assert client.get("/api/structure/z7/dqd").status_code == 404
        assert client.get("/api/structure/z2/spreadsheet").status_code == 404

    def test_object_needs_r(self, client):
        res = client.get("/api/structure/s3/kphi")
        assert res.status_code == 400
        assert "r-function" in res.json()["detail"]


class TestVerification:

    def test_suite(self, client):
        res = client.post("/api/suite", json={"preset": "trivial-z2", "suites": ["axioms"]})
        assert res.status_code == 200
        body = res.json()
        assert body["report"]["passed"] is True
        for table in body["agreement"]:
            assert all("agreement_pct" in row for row in table["rows"])

    def test_suite_is_cached(self, client):
        first = client.post("/api/suite", json={"preset": "z2", "suites": ["chi"], "seed": 9}).json()
        second = client.post("/api/suite", json={"preset": "z2", "suites": ["chi"], "seed": 9}).json()
        assert first == second

    def test_suite_errors(self, client):
        assert client.post("/api/suite", json={}).status_code == 400
        assert client.post("/api/suite", json={"preset": "z2", "suites": ["nope"]}).status_code == 400

    def test_verify_posted_structure(self, client, dz2):
        res = client.post("/api/verify", json=structure_to_json(dz2))
        assert res.status_code == 200
        assert res.json()["passed"] is True

    def test_verify_rejects_unknown_kind(self, client):
        assert client.post("/api/verify", json={"kind": "spreadsheet"}).status_code == 400
