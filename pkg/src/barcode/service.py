"""HTTP service over a sealed index bundle.

Endpoints (JSON over HTTP/1.1, no auth — front with a reverse proxy):

    GET  /health                     liveness + manifest hash
    POST /query                      {"query", "k", "filtered"} -> ranked results
    GET  /sentence/{sentence_id}     full provenance for one sentence
    POST /feedback                   interest rating 0-2, known flag, note
    GET  /config                     resolved config snapshot

The bundle is immutable; the only mutable state is the append-only
feedback log (writes serialized through one lock). Errors use
{"error": {"code", "message"}} with conventional status codes.
"""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import FileResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .bundle import BundleError, IndexBundle

MAX_K = 100


class QueryRequest(BaseModel):
    query: str
    k: int = 15
    filtered: bool = False


class FeedbackRequest(BaseModel):
    query: str
    sentence_id: str
    rating: int = Field(ge=0, le=2, description="0 = not interesting .. 2 = very interesting")
    known: bool = False
    note: str = ""


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


class FeedbackLog:
    """Append-only JSONL log; single-writer via lock."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def append(self, entry: dict) -> None:
        entry = dict(entry, ts=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()))
        with self._lock:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")


def create_app(
    bundle: IndexBundle,
    feedback_path: Path | None = None,
    static_dir: Path | None = None,
) -> FastAPI:
    """Build the service app for a loaded (hence verified) bundle."""
    app = FastAPI(title="barcode", version=bundle.manifest["versions"]["package"])
    feedback = FeedbackLog(feedback_path or bundle.index_dir / "feedback.jsonl")

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return _error(400, "validation_error", str(exc.errors()[:3]))

    @app.exception_handler(BundleError)
    async def bundle_handler(request: Request, exc: BundleError):
        return _error(500, "bundle_error", str(exc))

    @app.get("/health")
    def health():
        return {"status": "ok", "manifest_hash": bundle.manifest["manifest_hash"]}

    @app.post("/query")
    def query(request: QueryRequest):
        text = request.query.strip()
        if not text:
            return _error(400, "empty_query", "query text must be non-empty")
        k = max(1, min(MAX_K, request.k))
        started = time.perf_counter()
        response = bundle.query(text, k=k, filtered=request.filtered)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        return {
            "results": [r.to_dict() for r in response.results],
            "status": response.status,
            "timing_ms": round(elapsed_ms, 3),
        }

    @app.get("/sentence/{sentence_id}")
    def sentence(sentence_id: str):
        record = bundle.sentences.get(sentence_id)
        if record is None:
            return _error(404, "not_found", f"no sentence {sentence_id!r}")
        article = bundle.articles.get(record.article_id)
        return {
            "sentence_id": record.sentence_id,
            "text": record.text,
            "organism": record.organism,
            "char_offset": record.char_offset,
            "article": {
                "article_id": record.article_id,
                "title": article.title if article else "",
                "source_url": article.source_url if article else "",
            },
            "bio_score": bundle.bio_scores.get(sentence_id, 0.0),
        }

    @app.post("/feedback")
    def post_feedback(request: FeedbackRequest):
        feedback.append(
            {
                "query": request.query,
                "sentence_id": request.sentence_id,
                "rating": request.rating,
                "known": request.known,
                "note": request.note,
            }
        )
        return {"status": "recorded"}

    @app.get("/config")
    def get_config():
        return json.loads((bundle.index_dir / "config.json").read_text())

    if static_dir is not None and Path(static_dir).exists():
        static_dir = Path(static_dir)

        @app.get("/")
        def index_page():
            return FileResponse(static_dir / "index.html")

        app.mount("/ui", StaticFiles(directory=static_dir), name="ui")

    return app


def serve(
    bundle_dir: Path,
    host: str = "127.0.0.1",
    port: int = 8321,
    feedback_path: Optional[Path] = None,
    static_dir: Optional[Path] = None,
) -> None:
    """Load + verify the bundle, then run uvicorn (blocking)."""
    import uvicorn

    bundle = IndexBundle.load(Path(bundle_dir))  # refuses unsealed bundles
    app = create_app(bundle, feedback_path=feedback_path, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
