"""Pipeline configuration file handling and stage manifests."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .errors import ConfigError, MissingUpstream

DEFAULTS = {
    "sampling": {"n_weighted": 8000, "n_uniform": 2000},
    "plan": {"set_size": 100, "raters_per_set": 5, "weekly_quota": 5},
    "shots": {"basic": 3, "dimensional": 2},
    "split": {"test_frac": 0.10, "kfold": 10, "train_to_val": [889, 111]},
}


@dataclass
class PipelineConfig:
    paths: dict
    seeds: dict
    sampling: dict
    plan: dict
    shots: dict
    split: dict
    providers: dict = field(default_factory=dict)
    prices: dict = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | Path) -> "PipelineConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                raw = yaml.safe_load(fh) or {}
        except (OSError, yaml.YAMLError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if "paths" not in raw or "workdir" not in raw.get("paths", {}):
            raise ConfigError("config must define paths.workdir")
        merged = {k: {**v, **raw.get(k, {})} for k, v in DEFAULTS.items()}
        return cls(
            paths=raw["paths"],
            seeds=raw.get("seeds", {}),
            providers=raw.get("providers", {}),
            prices=raw.get("prices", {}),
            **merged,
        )

    def seed(self, stage: str) -> int:
        if stage not in self.seeds:
            raise ConfigError(f"no seed configured for stage '{stage}'")
        return int(self.seeds[stage])

    def workdir(self) -> Path:
        p = Path(self.paths["workdir"])
        p.mkdir(parents=True, exist_ok=True)
        return p

    def path(self, key: str, required: bool = True) -> Path | None:
        if key not in self.paths:
            if required:
                raise ConfigError(f"config paths.{key} missing")
            return None
        return Path(self.paths[key])


def file_hash(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def require_upstream(*paths: Path) -> None:
    missing = [str(p) for p in paths if not p.exists()]
    if missing:
        raise MissingUpstream(f"missing upstream outputs: {missing}")


def write_manifest(
    workdir: Path,
    stage: str,
    inputs: list[Path],
    outputs: list[Path],
    seed: int | None,
    started: float,
) -> Path:
    manifest = {
        "stage": stage,
        "seed": seed,
        "inputs": {str(p): file_hash(p) for p in inputs if p.exists()},
        "outputs": {str(p): file_hash(p) for p in outputs if p.exists()},
        "duration_s": round(time.time() - started, 3),
        "finished_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    path = workdir / f"manifest_{stage}.json"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
    return path
