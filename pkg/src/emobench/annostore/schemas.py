"""Pydantic request/response models for the annotation HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class SessionRequest(BaseModel):
    annotator_id: str
    token: str = ""


class SessionResponse(BaseModel):
    session: str


class SetProgress(BaseModel):
    set_id: str
    done: int
    total: int


class AssignmentsResponse(BaseModel):
    sets: list[SetProgress]


class NextTextResponse(BaseModel):
    text_id: str | None
    clean_text: str | None
    position: int
    total: int
    draft: dict[str, int] | None = None


class RatingRequest(BaseModel):
    text_id: str
    set_id: str
    labels: dict[str, int]
    final: bool = False


class RatingAck(BaseModel):
    stored: bool
    final: bool
    set_done: int
    set_total: int


class PostponeRequest(BaseModel):
    set_id: str


class ResumeResponse(BaseModel):
    pending: list[SetProgress]
    set_id: str | None
    position: int | None
    draft: dict[str, int] | None


class AggregateResponse(BaseModel):
    text_id: str
    count: int
    mean: dict[str, float]
    sd: dict[str, float]


class ErrorBody(BaseModel):
    error: str
    detail: str = ""
