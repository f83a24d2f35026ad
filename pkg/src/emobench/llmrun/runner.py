"""Resumable LLM annotation runs: one outcome per (metric, text) pair,
incremental JSONL persistence and a run manifest."""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Mapping, Sequence

from .. import BASIC_EMOTIONS, DIMENSIONS
from ..errors import ConfigError
from ..fewshot.prompts import render_prompt
from ..fewshot.selection import ShotPlan
from .client import ChatClient, ChatConfig
from .cost import PriceTable, estimate_cost
from .parse import Rejected, parse_score


@dataclass(frozen=True)
class LlmOutcome:
    run_id: str
    metric: str
    text_id: str
    raw_reply: str
    parsed: int | None
    status: str  # ok | rejected | transport_error
    reject_reason: str | None
    tokens_in: int
    tokens_out: int
    model_name: str


def _outcomes_path(run_dir: Path) -> Path:
    return run_dir / "outcomes.jsonl"


def load_outcomes(run_dir: str | Path) -> list[LlmOutcome]:
    path = _outcomes_path(Path(run_dir))
    if not path.exists():
        return []
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(LlmOutcome(**json.loads(line)))
    return out


def run_annotation(
    texts: Sequence[tuple[str, str]],
    plans: Mapping[str, ShotPlan],
    client: ChatClient,
    run_id: str,
    run_dir: str | Path,
    price_table: PriceTable | None = None,
) -> tuple[list[LlmOutcome], dict]:
    """Query every (metric, text) pair, skipping pairs already persisted
    under this run_id. Transport failures become transport_error outcomes
    after the client's retries; they never abort the run."""
    run_dir = Path(run_dir)
    run_dir.mkdir(parents=True, exist_ok=True)
    if not plans:
        raise ConfigError("no shot plans supplied")

    existing = {
        (o.metric, o.text_id) for o in load_outcomes(run_dir) if o.run_id == run_id
    }
    started = time.time()
    outcomes = [o for o in load_outcomes(run_dir) if o.run_id == run_id]

    with open(_outcomes_path(run_dir), "a", encoding="utf-8") as sink:
        for metric, plan in plans.items():
            for text_id, clean_text in texts:
                if (metric, text_id) in existing:
                    continue
                prompt = render_prompt(metric, plan, clean_text)
                try:
                    reply = client.complete(prompt)
                    score = parse_score(reply.content)
                    if isinstance(score, Rejected):
                        outcome = LlmOutcome(
                            run_id, metric, text_id, reply.content, None,
                            "rejected", score.reason,
                            reply.tokens_in, reply.tokens_out,
                            client.config.model,
                        )
                    else:
                        outcome = LlmOutcome(
                            run_id, metric, text_id, reply.content, score,
                            "ok", None, reply.tokens_in, reply.tokens_out,
                            client.config.model,
                        )
                except Exception as exc:
                    outcome = LlmOutcome(
                        run_id, metric, text_id, f"<transport: {exc}>", None,
                        "transport_error", None, 0, 0, client.config.model,
                    )
                sink.write(json.dumps(asdict(outcome), ensure_ascii=False) + "\n")
                sink.flush()
                outcomes.append(outcome)
                existing.add((metric, text_id))

    manifest = build_manifest(outcomes, plans, client.config, run_id, price_table)
    manifest["duration_s"] = round(time.time() - started, 3)
    with open(run_dir / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, ensure_ascii=False)
    return outcomes, manifest


def build_manifest(
    outcomes: Sequence[LlmOutcome],
    plans: Mapping[str, ShotPlan],
    config: ChatConfig,
    run_id: str,
    price_table: PriceTable | None = None,
) -> dict:
    rejections = {}
    transport = {}
    for o in outcomes:
        if o.status == "rejected":
            rejections[o.metric] = rejections.get(o.metric, 0) + 1
        elif o.status == "transport_error":
            transport[o.metric] = transport.get(o.metric, 0) + 1
    shots = {
        "basic": {m: plans[m].k for m in plans if m in BASIC_EMOTIONS},
        "dimensional": {m: plans[m].k for m in plans if m in DIMENSIONS},
    }
    manifest = {
        "run_id": run_id,
        "model": config.model,
        "temperature": config.temperature,
        "shots": shots,
        "n_outcomes": len(outcomes),
        "rejections": rejections,
        "rejections_total": sum(rejections.values()),
        "transport_errors": transport,
    }
    if price_table is not None and all(o.model_name in price_table for o in outcomes):
        total, per_model = estimate_cost(outcomes, price_table)
        manifest["cost_total"] = total
        manifest["cost_per_model"] = per_model
    return manifest


def export_outcomes(outcomes: Sequence[LlmOutcome], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["run_id", "metric", "text_id", "status", "parsed", "tokens_in", "tokens_out"]
        )
        for o in outcomes:
            writer.writerow(
                [o.run_id, o.metric, o.text_id, o.status,
                 "" if o.parsed is None else o.parsed, o.tokens_in, o.tokens_out]
            )
