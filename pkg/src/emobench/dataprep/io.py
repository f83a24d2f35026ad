"""File formats: line-delimited JSON corpora and delimited split tables."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Iterator

from .cleaning import TextRecord
from .splits import SplitAssignment


def read_corpus(path: str | Path) -> Iterator[dict]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)


def write_records(records: Iterable[TextRecord], path: str | Path) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            row = {
                "id": r.id,
                "platform": r.platform,
                "text": r.raw_text,
                "clean_text": r.clean_text,
                "char_len": r.char_len,
            }
            if r.weight is not None:
                row["weight"] = r.weight
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
            n += 1
    return n


def read_records(path: str | Path) -> list[TextRecord]:
    out = []
    for row in read_corpus(path):
        out.append(
            TextRecord(
                id=str(row["id"]),
                platform=row.get("platform", "other"),
                raw_text=row.get("text", ""),
                clean_text=row.get("clean_text", ""),
                char_len=row.get("char_len", len(row.get("clean_text", ""))),
                weight=row.get("weight"),
            )
        )
    return out


def write_splits(assignments: Iterable[SplitAssignment], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["text_id", "partition", "fold"])
        for a in assignments:
            writer.writerow([a.text_id, a.partition, "" if a.fold is None else a.fold])


def read_splits(path: str | Path) -> list[SplitAssignment]:
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            fold = row.get("fold", "")
            out.append(
                SplitAssignment(
                    text_id=row["text_id"],
                    partition=row["partition"],
                    fold=int(fold) if fold not in ("", None) else None,
                )
            )
    return out
