"""FastAPI service the annotator UI talks to."""

from __future__ import annotations

from pathlib import Path

from fastapi import Depends, FastAPI, Header, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from ..errors import (
    AlreadyFinal,
    NoRatings,
    NotAssigned,
    ScaleViolation,
    UnknownAnnotator,
)
from . import schemas
from .store import RatingStore


def _http_error(status: int, exc: Exception) -> HTTPException:
    return HTTPException(
        status_code=status,
        detail={"error": type(exc).__name__, "detail": str(exc)},
    )


def create_app(store: RatingStore, serve_static: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="emobench annotation service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    def current_annotator(authorization: str = Header(default="")) -> str:
        token = authorization.removeprefix("Bearer ").strip()
        try:
            return store.annotator_for_session(token)
        except UnknownAnnotator as exc:
            raise _http_error(401, exc)

    @app.post("/api/session", response_model=schemas.SessionResponse)
    def open_session(req: schemas.SessionRequest):
        try:
            return {"session": store.open_session(req.annotator_id, req.token)}
        except UnknownAnnotator as exc:
            raise _http_error(404, exc)

    @app.get("/api/assignments", response_model=schemas.AssignmentsResponse)
    def assignments(annotator: str = Depends(current_annotator)):
        sets = []
        for set_id in store.assigned_sets(annotator):
            done, total = store.progress(annotator, set_id)
            sets.append({"set_id": set_id, "done": done, "total": total})
        return {"sets": sets}

    @app.get("/api/sets/{set_id}/next", response_model=schemas.NextTextResponse)
    def next_text(set_id: str, annotator: str = Depends(current_annotator)):
        if set_id not in store.assigned_sets(annotator):
            raise _http_error(403, NotAssigned(set_id))
        position, text_id = store.next_position(annotator, set_id)
        _, total = store.progress(annotator, set_id)
        return {
            "text_id": text_id,
            "clean_text": store.text(text_id) if text_id else None,
            "position": position,
            "total": total,
            "draft": store.draft_labels(annotator, text_id) if text_id else None,
        }

    @app.post("/api/ratings", response_model=schemas.RatingAck)
    def submit(req: schemas.RatingRequest, annotator: str = Depends(current_annotator)):
        try:
            return store.submit_rating(
                annotator, req.text_id, req.set_id, req.labels, req.final
            )
        except ScaleViolation as exc:
            raise _http_error(400, exc)
        except NotAssigned as exc:
            raise _http_error(403, exc)
        except AlreadyFinal as exc:
            raise _http_error(409, exc)

    @app.post("/api/postpone")
    def postpone(req: schemas.PostponeRequest, annotator: str = Depends(current_annotator)):
        store.postpone(annotator, req.set_id)
        return {"ok": True}

    @app.get("/api/resume", response_model=schemas.ResumeResponse)
    def resume(annotator: str = Depends(current_annotator)):
        return store.resume_state(annotator)

    @app.get("/api/texts/{text_id}/aggregate", response_model=schemas.AggregateResponse)
    def aggregate(text_id: str, annotator: str = Depends(current_annotator)):
        try:
            return store.aggregate(text_id)
        except NoRatings as exc:
            raise _http_error(404, exc)

    if serve_static:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(serve_static), html=True), name="ui")

    return app
