import inspect

import pytest
from fastapi.routing import APIRoute
from fastapi.testclient import TestClient

from src.builders.builders_service import BuildersService
from src.kernel import serialization as ser
from src.main import app


@pytest.fixture
def client():
    return TestClient(app)


@pytest.fixture
def do_document():
    return ser.to_cxc(BuildersService.build_dodecahedron())


def test_build(client):
    response = client.post("/api/build/layered-barrel", json={"params": {"i": 6, "layers": 1}})
    assert response.status_code == 200
    body = response.json()
    assert body["fvector"] == [36, 54, 20]
    assert body["p6"] == 8
    assert body["format"] == "cxc"
    assert body["note"] is None


def test_build_without_body(client):
    response = client.post("/api/build/cube")
    assert response.status_code == 200
    assert response.json()["fvector"] == [8, 12, 6]


def test_build_flag_only(client):
    response = client.post("/api/build/polyhex-flags", json={"params": {"a1": 1, "a2": 0, "b1": 0, "b2": 1}})
    assert response.status_code == 200
    assert response.json()["format"] == "cxf"
    assert response.json()["note"]


def test_build_unknown(client):
    response = client.post("/api/build/icosahedron")
    assert response.status_code == 400
    assert "unknown builder" in response.json()["detail"]


def test_construct_fold(client, do_document):
    response = client.post("/api/construct/fold", json={"document": do_document})
    assert response.status_code == 200
    assert response.json()["fvector"] == [10, 15, 6]


def test_construct_corona(client):
    document = ser.to_cxc(BuildersService.build_cube())
    response = client.post("/api/construct/B", json={"document": document})
    assert response.status_code == 200
    body = response.json()
    assert body["fvector"] == [240, 480, 294, 54]
    assert ser.load(body["document"]).count(3) == 54


def test_construct_errors(client, do_document):
    assert client.post("/api/construct/Z", json={"document": do_document}).status_code == 400
    assert client.post("/api/construct/B", json={}).status_code == 400
    assert client.post("/api/construct/B", json={"document": "garbage"}).status_code == 400


def test_twist_table(client):
    response = client.get("/api/twist-table")
    assert response.status_code == 200
    rows = response.json()
    assert [r["tenths"] for r in rows] == [1, 3, 5, 7, 9]
    assert all(r["manifold"] for r in rows)


def test_census(client):
    from src.constructions.constructions_service import ConstructionsService

    X = ConstructionsService.corona_B(BuildersService.build_tetrahedron())
    response = client.post("/api/census", json={"document": ser.to_cxc(X)})
    assert response.status_code == 200
    assert response.json()["total"] == 32


def test_census_rejects_surface(client, do_document):
    assert client.post("/api/census", json={"document": do_document}).status_code == 400


def test_malformed_document_is_400(client):
    document = "cxc 1 2\nrank 2 1\nrank 1 1\nc 2 0 : 0\nrank 0 1\n"
    response = client.post("/api/classify", json={"document": document})
    assert response.status_code == 400
    assert "rank lines" in response.json()["detail"]


def test_compare(client, do_document):
    other = ser.to_cxc(BuildersService.build_barrel(6))
    response = client.post("/api/compare", json={"document_a": do_document, "document_b": do_document})
    assert response.json()["isomorphic"] is True
    response = client.post("/api/compare", json={"document_a": do_document, "document_b": other})
    assert response.json()["isomorphic"] is False


def test_classify(client, do_document):
    response = client.post("/api/classify", json={"document": do_document})
    assert response.status_code == 200
    assert response.json()["surface"] == "sphere"
    response = client.post("/api/classify", json={"document": ser.to_cxc(BuildersService.build_cube())})
    assert response.json()["surface"] is None
    assert response.json()["rejection"]


def test_central_symmetry(client, do_document):
    response = client.post("/api/central-symmetry", json={"document": do_document})
    assert response.status_code == 200
    body = response.json()
    assert body["symmetric"] is True
    assert len(body["sigma"]) == 20
    response = client.post("/api/central-symmetry", json={"document": do_document, "sigma": list(range(20))})
    assert response.json()["symmetric"] is False


def test_verify_table(client):
    response = client.post("/api/verify-table", json={"rows": ["B(cube)"]})
    assert response.status_code == 200
    assert response.json()["passed"] is True
    assert client.post("/api/verify-table", json={"rows": ["nope"]}).status_code == 400


def test_export(client, do_document):
    response = client.post("/api/export", json={"document": do_document, "format": "edge-list"})
    assert response.status_code == 200
    assert len(response.json()["document"].splitlines()) == 30
    response = client.post("/api/export", json={"document": do_document, "format": "edge-list", "strict": True})
    assert response.status_code == 400


def test_api_routes_are_plain_functions():
    routes = [r for r in app.routes if isinstance(r, APIRoute)]
    assert len(routes) == 9
    assert not any(inspect.iscoroutinefunction(r.endpoint) for r in routes)
