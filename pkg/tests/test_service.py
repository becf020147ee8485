"""HTTP service endpoints and their parity with the library calls."""

import json

import pytest
from fastapi.testclient import TestClient

from chronomem.config import AppConfig
from chronomem.service import create_app


@pytest.fixture()
def client(tmp_path):
    cfg = AppConfig(
        graph_path=str(tmp_path / "graph.json"),
        vector_path=str(tmp_path / "vectors.json"),
    )
    app = create_app(cfg)
    with TestClient(app) as client:
        yield client


class TestStats:
    def test_fresh_store(self, client):
        response = client.get("/stats")
        assert response.status_code == 200
        assert response.json() == {"counter": 0, "nodes": 0, "edges": 0, "chunks": 0}

    def test_counter_after_ingest(self, client):
        response = client.post("/ingest", json={"text": "Brandon loves coffee."})
        assert response.status_code == 200
        report = response.json()
        assert report["t_after"] == 1
        assert client.get("/stats").json()["counter"] == 1


class TestIngest:
    def test_malformed_json_is_400(self, client):
        response = client.post(
            "/ingest",
            content=b"{not json",
            headers={"Content-Type": "application/json"},
        )
        assert response.status_code == 400
        assert "error" in response.json()

    def test_missing_field_is_400(self, client):
        response = client.post("/ingest", json={"wrong": "shape"})
        assert response.status_code == 400

    def test_empty_text_is_400(self, client):
        response = client.post("/ingest", json={"text": "   "})
        assert response.status_code == 400


class TestAsk:
    def test_retrieval_only_makes_no_provider_call(self, client, monkeypatch):
        calls = []

        class Spy:
            def complete(self, request):
                calls.append(request)
                return "hi"

        monkeypatch.setattr(AppConfig, "provider", lambda self: Spy())
        client.post("/ingest", json={"text": "Brandon works for Cisco."})
        response = client.post(
            "/ask", json={"question": "Where does Brandon work?",
                          "mode": "retrieval-only"},
        )
        assert response.status_code == 200
        assert calls == []
        assert response.json()["answer"] is None

    def test_unknown_mode_is_400(self, client):
        response = client.post("/ask", json={"question": "q?", "mode": "psychic"})
        assert response.status_code == 400

    def test_trace_matches_library(self, client):
        import dataclasses

        from chronomem.graph import GraphStore
        from chronomem.recall import answer
        from chronomem.update import knowledge_update

        statements = ["Brandon works for Cisco.", "Brandon loves coffee."]
        for s in statements:
            client.post("/ingest", json={"text": s})
        service_trace = client.post(
            "/ask", json={"question": "Where does Brandon work?",
                          "mode": "retrieval-only"},
        ).json()

        store = GraphStore()
        for s in statements:
            knowledge_update(store, s)
        library_trace = dataclasses.asdict(
            answer(store, "Where does Brandon work?")
        )
        # identical state + identical operation = identical trace, except
        # dataclass tuples arrive as JSON arrays
        assert json.loads(json.dumps(library_trace)) == service_trace


class TestGraphExport:
    def test_snapshot_document(self, client):
        client.post("/ingest", json={"text": "Brandon works for Cisco."})
        response = client.get("/graph/export")
        assert response.status_code == 200
        doc = response.json()
        assert doc["version"] == 1
        assert "brandon" in doc["nodes"]


def test_cli_and_service_produce_identical_traces(tmp_path, monkeypatch, capsys):
    """No logic may live in only one surface layer."""
    from chronomem.cli import cli

    statements = ["Brandon works for Cisco.", "Brandon loves coffee."]
    question = "Where does Brandon work?"

    monkeypatch.chdir(tmp_path)
    source = tmp_path / "facts.txt"
    source.write_text("\n".join(statements), encoding="utf-8")
    assert cli(["ingest", str(source)]) == 0
    capsys.readouterr()
    assert cli(["ask", question, "--mode", "retrieval-only"]) == 0
    cli_trace = json.loads(capsys.readouterr().out)

    cfg = AppConfig(
        graph_path=str(tmp_path / "srv_graph.json"),
        vector_path=str(tmp_path / "srv_vectors.json"),
    )
    with TestClient(create_app(cfg)) as client:
        for s in statements:
            client.post("/ingest", json={"text": s})
        service_trace = client.post(
            "/ask", json={"question": question, "mode": "retrieval-only"}
        ).json()

    assert cli_trace == service_trace


class TestShutdownFlush:
    def test_snapshots_written_on_shutdown(self, tmp_path):
        cfg = AppConfig(
            graph_path=str(tmp_path / "graph.json"),
            vector_path=str(tmp_path / "vectors.json"),
        )
        with TestClient(create_app(cfg)) as client:
            client.post("/ingest", json={"text": "Brandon works for Cisco."})
        assert (tmp_path / "graph.json").exists()
        assert (tmp_path / "vectors.json").exists()
        doc = json.loads((tmp_path / "graph.json").read_text(encoding="utf-8"))
        assert doc["counter"] == 1
