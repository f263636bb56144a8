"""HTTP API surface: schemas, status codes, content types."""

import pytest
from fastapi.testclient import TestClient

from eisen.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_solve(client):
    response = client.post("/solve", json={"p": 7, "n": 6, "method": "power"})
    assert response.status_code == 200
    data = response.json()
    assert (data["a"], data["b"], data["A"], data["B"]) == ("-323", "360", "37", "323")
    assert data["form_value"] == str(7**6)
    assert data["p_divides_a"] is False


def test_solve_defaults_to_power(client):
    data = client.post("/solve", json={"p": 13, "n": 2}).json()
    assert data["method"] == "power"
    assert data["form_value"] == "169"


def test_solve_nonrepresentable_maps_to_422(client):
    response = client.post("/solve", json={"p": 5, "n": 1})
    assert response.status_code == 422
    assert "detail" in response.json()


def test_solve_recurrence_wrong_base_maps_to_400(client):
    response = client.post("/solve", json={"p": 13, "n": 2, "method": "recurrence"})
    assert response.status_code == 400


def test_solve_validation_error(client):
    response = client.post("/solve", json={"p": 7, "n": -1})
    assert response.status_code == 422


def test_table(client):
    data = client.get("/table", params={"n_max": 6}).json()
    assert data["n_max"] == 6
    rows = [(r["n"], r["a"], r["b"], r["A"], r["B"]) for r in data["rows"]]
    assert rows[4] == (4, "-16", "55", "39", "16")
    assert rows[6] == (6, "-323", "360", "37", "323")


def test_corollary(client):
    data = client.get("/corollary", params={"n": 2}).json()
    assert data["exponent"] == 4
    assert [(p["A"], p["B"], p["coprime"]) for p in data["pairs"]] == [
        ("21", "35", False),
        ("16", "39", True),
    ]


def test_triples_with_coverage(client):
    data = client.get("/triples", params={"z_max": 14, "verify": True}).json()
    assert data["count"] == 2
    assert data["coverage"]["missing"] == [{"x": 6, "y": 10, "z": 14, "primitive": False}]
    assert data["coverage"]["unsound"] == []


def test_triples_without_coverage(client):
    data = client.get("/triples", params={"z_max": 7}).json()
    assert data["coverage"] is None
    assert [(t["x"], t["y"], t["z"]) for t in data["triples"]] == [(3, 5, 7)]


def test_embed_with_checks(client):
    data = client.get("/embed/k222", params={"check": True}).json()
    assert data["radius_sq"] == "49/3"
    assert data["labels"] == ["A1", "A2", "A3", "B1", "B2", "B3"]
    assert len(data["distances"]) == 15
    checks = data["checks"]
    assert checks["on_circle"] and checks["expected_distances"] and checks["ptolemy"]
    assert checks["ptolemy_quadruples"] == 15
    assert data["points"]["A1"]["y"] == {"r": "0", "s": "7/3"}


def test_embed_unknown_figure(client):
    response = client.get("/embed/k444")
    assert response.status_code == 422


def test_embed_svg_content_type(client):
    response = client.get("/embed/k333/svg")
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("image/svg+xml")
    assert response.text.count("<line") == 36
