"""SQLite-backed rating store: assignment state, draft/final rating writes,
resume bookkeeping, aggregation and the delimited export."""

from __future__ import annotations

import csv
import secrets
import sqlite3
import threading
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .. import ALL_METRICS, raw_scale, to_canonical
from ..errors import (
    AlreadyFinal,
    NoRatings,
    NotAssigned,
    ScaleViolation,
    UnknownAnnotator,
)
from .plan import AssignmentPlan

_SCHEMA = """
CREATE TABLE IF NOT EXISTS annotators (
    id TEXT PRIMARY KEY,
    token TEXT NOT NULL DEFAULT ''
);
CREATE TABLE IF NOT EXISTS texts (
    id TEXT PRIMARY KEY,
    clean_text TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS set_items (
    set_id TEXT NOT NULL,
    ord INTEGER NOT NULL,
    text_id TEXT NOT NULL REFERENCES texts(id),
    PRIMARY KEY (set_id, ord)
);
CREATE TABLE IF NOT EXISTS assignments (
    annotator_id TEXT NOT NULL REFERENCES annotators(id),
    set_id TEXT NOT NULL,
    ord INTEGER NOT NULL,
    PRIMARY KEY (annotator_id, set_id)
);
CREATE TABLE IF NOT EXISTS ratings (
    annotator_id TEXT NOT NULL,
    text_id TEXT NOT NULL,
    set_id TEXT NOT NULL,
    happiness INTEGER, sadness INTEGER, anger INTEGER, disgust INTEGER,
    fear INTEGER, pride INTEGER, valence INTEGER, arousal INTEGER,
    submitted_at TEXT NOT NULL,
    status TEXT NOT NULL CHECK (status IN ('draft', 'final')),
    PRIMARY KEY (annotator_id, text_id)
);
CREATE TABLE IF NOT EXISTS sessions (
    session TEXT PRIMARY KEY,
    annotator_id TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS active_set (
    annotator_id TEXT PRIMARY KEY,
    set_id TEXT NOT NULL
);
"""


def validate_labels(labels: dict[str, int]) -> dict[str, int]:
    missing = [m for m in ALL_METRICS if m not in labels]
    if missing:
        raise ScaleViolation(f"missing metrics: {missing}")
    out = {}
    for metric in ALL_METRICS:
        value = labels[metric]
        lo, hi = raw_scale(metric)
        if not isinstance(value, int) or isinstance(value, bool) or not lo <= value <= hi:
            raise ScaleViolation(f"{metric}={value!r} outside {lo}..{hi}")
        out[metric] = value
    return out


class RatingStore:
    """Single-file store; writes are serialized by a process-wide lock, which
    matches the one-service deployment model."""

    def __init__(self, path: str | Path):
        self._conn = sqlite3.connect(str(path), check_same_thread=False)
        self._conn.row_factory = sqlite3.Row
        self._lock = threading.RLock()
        with self._lock:
            self._conn.executescript(_SCHEMA)
            self._conn.commit()

    def close(self) -> None:
        self._conn.close()

    # -- setup -------------------------------------------------------------

    def load_texts(self, texts: dict[str, str]) -> None:
        with self._lock:
            self._conn.executemany(
                "INSERT OR REPLACE INTO texts (id, clean_text) VALUES (?, ?)",
                list(texts.items()),
            )
            self._conn.commit()

    def load_plan(self, plan: AssignmentPlan, tokens: dict[str, str] | None = None) -> None:
        tokens = tokens or {}
        with self._lock:
            for set_id, ids in plan.sets:
                self._conn.executemany(
                    "INSERT OR REPLACE INTO set_items (set_id, ord, text_id) VALUES (?, ?, ?)",
                    [(set_id, i, tid) for i, tid in enumerate(ids)],
                )
            for annotator, set_ids in plan.assignments.items():
                self._conn.execute(
                    "INSERT OR REPLACE INTO annotators (id, token) VALUES (?, ?)",
                    (annotator, tokens.get(annotator, "")),
                )
                self._conn.executemany(
                    "INSERT OR REPLACE INTO assignments (annotator_id, set_id, ord) VALUES (?, ?, ?)",
                    [(annotator, sid, i) for i, sid in enumerate(set_ids)],
                )
            self._conn.commit()

    # -- sessions ----------------------------------------------------------

    def open_session(self, annotator_id: str, token: str) -> str:
        with self._lock:
            row = self._conn.execute(
                "SELECT token FROM annotators WHERE id = ?", (annotator_id,)
            ).fetchone()
            if row is None or (row["token"] and row["token"] != token):
                raise UnknownAnnotator(annotator_id)
            session = secrets.token_hex(16)
            self._conn.execute(
                "INSERT INTO sessions (session, annotator_id) VALUES (?, ?)",
                (session, annotator_id),
            )
            self._conn.commit()
            return session

    def annotator_for_session(self, session: str) -> str:
        row = self._conn.execute(
            "SELECT annotator_id FROM sessions WHERE session = ?", (session,)
        ).fetchone()
        if row is None:
            raise UnknownAnnotator("invalid session")
        return row["annotator_id"]

    # -- reads -------------------------------------------------------------

    def _require_annotator(self, annotator_id: str) -> None:
        row = self._conn.execute(
            "SELECT 1 FROM annotators WHERE id = ?", (annotator_id,)
        ).fetchone()
        if row is None:
            raise UnknownAnnotator(annotator_id)

    def set_text_ids(self, set_id: str) -> list[str]:
        rows = self._conn.execute(
            "SELECT text_id FROM set_items WHERE set_id = ? ORDER BY ord", (set_id,)
        ).fetchall()
        return [r["text_id"] for r in rows]

    def assigned_sets(self, annotator_id: str) -> list[str]:
        self._require_annotator(annotator_id)
        rows = self._conn.execute(
            "SELECT set_id FROM assignments WHERE annotator_id = ? ORDER BY ord",
            (annotator_id,),
        ).fetchall()
        return [r["set_id"] for r in rows]

    def progress(self, annotator_id: str, set_id: str) -> tuple[int, int]:
        total = len(self.set_text_ids(set_id))
        done = self._conn.execute(
            "SELECT COUNT(*) AS c FROM ratings WHERE annotator_id = ? AND set_id = ?"
            " AND status = 'final'",
            (annotator_id, set_id),
        ).fetchone()["c"]
        return done, total

    def next_position(self, annotator_id: str, set_id: str) -> tuple[int, str | None]:
        """(position, text_id) of the first text without a final rating."""
        ids = self.set_text_ids(set_id)
        finals = {
            r["text_id"]
            for r in self._conn.execute(
                "SELECT text_id FROM ratings WHERE annotator_id = ? AND set_id = ?"
                " AND status = 'final'",
                (annotator_id, set_id),
            )
        }
        for pos, tid in enumerate(ids):
            if tid not in finals:
                return pos, tid
        return len(ids), None

    def text(self, text_id: str) -> str:
        row = self._conn.execute(
            "SELECT clean_text FROM texts WHERE id = ?", (text_id,)
        ).fetchone()
        return "" if row is None else row["clean_text"]

    def draft_labels(self, annotator_id: str, text_id: str) -> dict[str, int] | None:
        row = self._conn.execute(
            "SELECT * FROM ratings WHERE annotator_id = ? AND text_id = ?"
            " AND status = 'draft'",
            (annotator_id, text_id),
        ).fetchone()
        if row is None:
            return None
        return {m: row[m] for m in ALL_METRICS}

    # -- writes ------------------------------------------------------------

    def submit_rating(
        self,
        annotator_id: str,
        text_id: str,
        set_id: str,
        labels: dict[str, int],
        final: bool,
    ) -> dict:
        labels = validate_labels(labels)
        with self._lock:
            self._require_annotator(annotator_id)
            assigned = self._conn.execute(
                "SELECT 1 FROM assignments WHERE annotator_id = ? AND set_id = ?",
                (annotator_id, set_id),
            ).fetchone()
            in_set = self._conn.execute(
                "SELECT 1 FROM set_items WHERE set_id = ? AND text_id = ?",
                (set_id, text_id),
            ).fetchone()
            if assigned is None or in_set is None:
                raise NotAssigned(f"{annotator_id} is not assigned {text_id} in {set_id}")
            existing = self._conn.execute(
                "SELECT status FROM ratings WHERE annotator_id = ? AND text_id = ?",
                (annotator_id, text_id),
            ).fetchone()
            if existing is not None and existing["status"] == "final":
                raise AlreadyFinal(f"{annotator_id}/{text_id} is already final")
            now = datetime.now(timezone.utc).isoformat()
            self._conn.execute(
                "INSERT OR REPLACE INTO ratings"
                " (annotator_id, text_id, set_id,"
                "  happiness, sadness, anger, disgust, fear, pride, valence, arousal,"
                "  submitted_at, status)"
                " VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
                (
                    annotator_id, text_id, set_id,
                    *[labels[m] for m in ALL_METRICS],
                    now, "final" if final else "draft",
                ),
            )
            self._conn.commit()
        done, total = self.progress(annotator_id, set_id)
        return {"stored": True, "final": final, "set_done": done, "set_total": total}

    def postpone(self, annotator_id: str, set_id: str) -> None:
        with self._lock:
            self._require_annotator(annotator_id)
            self._conn.execute(
                "INSERT OR REPLACE INTO active_set (annotator_id, set_id) VALUES (?, ?)",
                (annotator_id, set_id),
            )
            self._conn.commit()

    # -- resume / aggregation ----------------------------------------------

    def resume_state(self, annotator_id: str) -> dict:
        """Pending sets plus the current set's first unrated position and any
        draft for that text; idempotent."""
        self._require_annotator(annotator_id)
        pending = []
        for set_id in self.assigned_sets(annotator_id):
            done, total = self.progress(annotator_id, set_id)
            if done < total:
                pending.append({"set_id": set_id, "done": done, "total": total})
        if not pending:
            return {"pending": [], "set_id": None, "position": None, "draft": None}
        row = self._conn.execute(
            "SELECT set_id FROM active_set WHERE annotator_id = ?", (annotator_id,)
        ).fetchone()
        current = row["set_id"] if row and any(
            p["set_id"] == row["set_id"] for p in pending
        ) else pending[0]["set_id"]
        position, text_id = self.next_position(annotator_id, current)
        draft = self.draft_labels(annotator_id, text_id) if text_id else None
        return {
            "pending": pending,
            "set_id": current,
            "position": position,
            "draft": draft,
        }

    def final_ratings(self, text_id: str) -> list[dict[str, int]]:
        rows = self._conn.execute(
            "SELECT * FROM ratings WHERE text_id = ? AND status = 'final'"
            " ORDER BY annotator_id",
            (text_id,),
        ).fetchall()
        return [{m: r[m] for m in ALL_METRICS} for r in rows]

    def aggregate(self, text_id: str) -> dict:
        """Per-metric mean and population SD of the canonicalized final
        ratings for one text."""
        ratings = self.final_ratings(text_id)
        if not ratings:
            raise NoRatings(text_id)
        out = {"text_id": text_id, "count": len(ratings), "mean": {}, "sd": {}}
        for metric in ALL_METRICS:
            values = np.array([to_canonical(metric, r[metric]) for r in ratings])
            out["mean"][metric] = float(values.mean())
            out["sd"][metric] = float(values.std())
        return out

    def rated_text_ids(self) -> list[str]:
        rows = self._conn.execute(
            "SELECT DISTINCT text_id FROM ratings WHERE status = 'final' ORDER BY text_id"
        ).fetchall()
        return [r["text_id"] for r in rows]

    def export_ratings(self, path: str | Path) -> int:
        """`text_id,annotator_id,happiness,...,arousal,submitted_at` with raw
        scale labels, final records only."""
        rows = self._conn.execute(
            "SELECT * FROM ratings WHERE status = 'final'"
            " ORDER BY text_id, annotator_id"
        ).fetchall()
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["text_id", "annotator_id", *ALL_METRICS, "submitted_at"])
            for r in rows:
                writer.writerow(
                    [r["text_id"], r["annotator_id"],
                     *[r[m] for m in ALL_METRICS], r["submitted_at"]]
                )
        return len(rows)


def read_ratings_export(path: str | Path) -> dict[str, dict[str, list[float]]]:
    """metric -> text_id -> raw labels, from an export_ratings file."""
    out: dict[str, dict[str, list[float]]] = {m: {} for m in ALL_METRICS}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            for metric in ALL_METRICS:
                out[metric].setdefault(row["text_id"], []).append(float(row[metric]))
    return out
