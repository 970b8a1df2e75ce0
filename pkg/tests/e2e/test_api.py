"""Tests de bout en bout de l'API HTTP."""

import pytest
from fastapi.testclient import TestClient

from app.main import app

API = "/api/v1"


@pytest.fixture
def client():
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def t1_document(t1_c1):
    return t1_c1.to_document()


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "healthy"
    assert body["default_backend"] == "cbc"


def test_validate(client, t1_document):
    response = client.post(f"{API}/validate", json={"instance": t1_document, "x": [1, 0], "objective": 1.0})
    assert response.status_code == 200
    body = response.json()
    assert body["valid"] is True
    assert body["objective"] == pytest.approx(1.0)

    response = client.post(f"{API}/validate", json={"instance": t1_document, "x": [1, 1]})
    assert response.json()["feasible"] is False


def test_greedy_through_solve(client, t1_document):
    response = client.post(f"{API}/solve", json={"instance": t1_document, "config": {"method": "greedy"}})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "heuristic"
    assert body["x"] == [0, 1]


def test_invalid_instance(client):
    document = {"n": 1, "m": 1, "rho": [1.0], "v0": [0.0], "v": [[1.0]], "r": [[1.0]]}
    response = client.post(f"{API}/solve", json={"instance": document, "config": {"method": "greedy"}})
    assert response.status_code == 422


def test_families(client):
    response = client.get(f"{API}/families/")
    assert response.status_code == 200
    assert len(response.json()) == 16


def test_generate(client):
    response = client.post(f"{API}/families/Sen_200_20/generate", json={"seed": 2, "m": 10, "n": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["instance_id"] == "Sen_200_20_v0-5_a-10_00"
    assert body["instance"]["m"] == 10


def test_unknown_family(client):
    response = client.post(f"{API}/families/Nope/generate", json={})
    assert response.status_code == 422
    assert response.json()["error"] == "Entrée invalide"


@pytest.mark.solver
def test_exact_solve(client, t1_document):
    pytest.importorskip("mip")
    response = client.post(f"{API}/solve", json={"instance": t1_document, "config": {"method": "bc"}})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "optimal"
    assert body["objective"] == pytest.approx(1.0, abs=1e-6)
