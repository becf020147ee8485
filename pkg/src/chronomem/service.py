"""HTTP service exposing the memory engine.

Endpoints mirror the CLI one-to-one and call the same library operations.
Knowledge updates are serialized behind a writer lock (single-writer
contract); questions and exports only read. Snapshots flush to disk on
shutdown when store paths are configured.
"""

from __future__ import annotations

import dataclasses
import threading
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .config import AppConfig
from .graph import GraphStore, load as load_graph, snapshot as graph_snapshot
from .hybrid import hybrid_answer
from .recall import answer
from .update import knowledge_update
from .vecstore import VectorStore, answer_vec

__all__ = ["create_app"]


class IngestBody(BaseModel):
    text: str


class AskBody(BaseModel):
    question: str
    mode: str = "retrieval-only"


def create_app(config: AppConfig | None = None) -> FastAPI:
    cfg = config or AppConfig()

    graph_path = Path(cfg.graph_path)
    vector_path = Path(cfg.vector_path)
    state = {
        "graph": load_graph(graph_path.read_bytes()) if graph_path.exists()
        else GraphStore(),
        "vectors": VectorStore.load(vector_path.read_bytes()) if vector_path.exists()
        else VectorStore(),
    }
    write_lock = threading.Lock()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        # graceful shutdown flushes both snapshots
        with write_lock:
            graph_path.write_bytes(graph_snapshot(state["graph"]))
            vector_path.write_bytes(state["vectors"].snapshot())

    app = FastAPI(title="chronomem", lifespan=lifespan)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "malformed request", "detail": str(exc.errors())},
        )

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.post("/ingest")
    def ingest(body: IngestBody):
        if not body.text.strip():
            return JSONResponse(
                status_code=400,
                content={"error": "empty text", "detail": "nothing to ingest"},
            )
        with write_lock:
            report = knowledge_update(state["graph"], body.text, cfg.revision)
            state["vectors"].add(body.text)
        return dataclasses.asdict(report)

    @app.post("/ask")
    def ask(body: AskBody):
        provider = cfg.provider()
        if body.mode == "retrieval-only":
            trace = answer(state["graph"], body.question, None, cfg.retrieval)
        elif body.mode == "graph":
            trace = answer(state["graph"], body.question, provider, cfg.retrieval)
        elif body.mode == "vector":
            trace = answer_vec(state["vectors"], body.question, provider)
        elif body.mode == "hybrid":
            trace = hybrid_answer(
                state["graph"], state["vectors"], body.question, provider,
                cfg.retrieval, discriminator=provider,
            )
        else:
            return JSONResponse(
                status_code=400,
                content={"error": "unknown mode", "detail": body.mode},
            )
        return dataclasses.asdict(trace)

    @app.get("/stats")
    def stats():
        return {
            "counter": state["graph"].global_counter,
            "nodes": len(state["graph"].nodes),
            "edges": len(state["graph"].edges),
            "chunks": len(state["vectors"].chunks),
        }

    @app.get("/graph/export")
    def export():
        return Response(
            content=graph_snapshot(state["graph"]), media_type="application/json"
        )

    return app
