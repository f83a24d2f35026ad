"""Command-line entry point wiring the pipeline stages together."""

from __future__ import annotations

import csv
import json
import sys
import time
from pathlib import Path

import click
import numpy as np

from . import ALL_METRICS, BASIC_EMOTIONS, DIMENSIONS, from_canonical, raw_scale
from .annostore import RatingStore, build_plan, read_ratings_export
from .config import PipelineConfig, require_upstream, write_manifest
from .dataprep import io as dio
from .dataprep.cleaning import length_filter, make_record, split_sentences
from .dataprep.lexicon import lexicon_score, load_lexicon
from .dataprep.sampling import weighted_sample
from .dataprep.splits import kfold_split, zscore_test_split
from .errors import EmobenchError
from .evaluation import (
    comparison_table,
    fold_aggregate,
    icc_table_row,
    label_histogram,
    pearson,
    shot_sweep_report,
)
from .fewshot import embed_batch, local_embedder, render_prefix, select_exemplars
from .fewshot.selection import Exemplar, ShotPlan
from .llmrun import ChatClient, ChatConfig, load_outcomes, run_annotation, export_outcomes
from .reliability import complete_matrix, icc1, icc1k


def _fail(exc: Exception) -> None:
    click.echo(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), err=True)
    sys.exit(1)


@click.group()
def main():
    """Emotion-intensity corpus, annotation and LLM benchmarking pipeline."""


# -- dataprep ----------------------------------------------------------------


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--output", "output_path", required=True, type=click.Path())
def ingest(input_path, output_path):
    """Normalize a raw {id, platform, text} JSONL dump."""
    records = [
        make_record(str(row["id"]), row.get("platform", "other"), row.get("text", ""))
        for row in dio.read_corpus(input_path)
    ]
    n = dio.write_records(records, output_path)
    click.echo(f"ingested {n} records")


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--output", "output_path", required=True, type=click.Path())
@click.option("--split-platforms", default="facebook", show_default=True)
@click.option("--max-chars", default=280, show_default=True)
def clean(input_path, output_path, split_platforms, max_chars):
    """Mask links/mentions, split long-form posts, apply the length filter."""
    platforms = tuple(p for p in split_platforms.split(",") if p)
    cleaned = []
    for row in dio.read_corpus(input_path):
        rec = make_record(str(row["id"]), row.get("platform", "other"), row.get("text", ""))
        if not rec.clean_text:
            continue
        cleaned.extend(split_sentences(rec, platforms=platforms))
    kept = length_filter([r for r in cleaned if r.clean_text], max_chars=max_chars)
    n = dio.write_records(kept, output_path)
    click.echo(f"cleaned {n} records ({len(cleaned) - n} dropped)")


@main.command("score-lexicon")
@click.option("--records", "records_path", required=True, type=click.Path(exists=True))
@click.option("--lexicon", "lexicon_path", required=True, type=click.Path(exists=True))
@click.option("--output", "output_path", required=True, type=click.Path())
def score_lexicon(records_path, lexicon_path, output_path):
    """Attach lexicon-based emotional weights."""
    try:
        lexicon = load_lexicon(lexicon_path)
        records = dio.read_records(records_path)
        for rec in records:
            rec.weight = lexicon_score(rec, lexicon)
        dio.write_records(records, output_path)
    except EmobenchError as exc:
        _fail(exc)
    click.echo(f"scored {len(records)} records")


@main.command()
@click.option("--records", "records_path", required=True, type=click.Path(exists=True))
@click.option("--n-weighted", default=8000, show_default=True)
@click.option("--n-uniform", default=2000, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--output", "output_path", required=True, type=click.Path())
def sample(records_path, n_weighted, n_uniform, seed, output_path):
    """Weighted + uniform without-replacement corpus sample."""
    records = dio.read_records(records_path)
    by_id = {r.id: r for r in records}
    try:
        chosen = weighted_sample(
            [r.id for r in records],
            [r.weight or 0.0 for r in records],
            n_weighted,
            n_uniform,
            seed,
        )
    except EmobenchError as exc:
        _fail(exc)
    dio.write_records([by_id[tid] for tid in chosen], output_path)
    click.echo(f"sampled {len(chosen)} records")


def _read_aggregates(path) -> dict[str, dict[str, float]]:
    out = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            out[row["text_id"]] = {m: float(row[m]) for m in ALL_METRICS}
    return out


def _write_aggregates(aggregates: dict[str, dict[str, float]], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["text_id", *ALL_METRICS])
        for tid in sorted(aggregates):
            writer.writerow([tid, *[aggregates[tid][m] for m in ALL_METRICS]])


@main.command()
@click.option("--labels", "labels_path", required=True, type=click.Path(exists=True),
              help="aggregates file: text_id,happiness,...,arousal")
@click.option("--test-frac", default=0.10, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--output", "output_path", required=True, type=click.Path())
def split(labels_path, test_frac, seed, output_path):
    """z-score-weighted test sampling with an 8:1:1 overall split."""
    aggregates = _read_aggregates(labels_path)
    try:
        assignments = zscore_test_split(
            sorted(aggregates.items()), test_frac=test_frac, seed=seed
        )
    except EmobenchError as exc:
        _fail(exc)
    dio.write_splits(assignments, output_path)
    click.echo(f"split {len(assignments)} texts")


@main.command()
@click.option("--ids", "ids_path", required=True, type=click.Path(exists=True),
              help="file with one text_id per line")
@click.option("--k", default=10, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--output", "output_path", required=True, type=click.Path())
def kfold(ids_path, k, seed, output_path):
    """Deterministic k-fold split (fold column = iteration)."""
    ids = [line.strip() for line in open(ids_path, encoding="utf-8") if line.strip()]
    try:
        iterations = kfold_split(ids, k=k, seed=seed)
    except EmobenchError as exc:
        _fail(exc)
    dio.write_splits([a for it in iterations for a in it], output_path)
    click.echo(f"{k}-fold split over {len(ids)} ids")


# -- annostore ----------------------------------------------------------------


@main.command()
@click.option("--texts", "texts_path", required=True, type=click.Path(exists=True))
@click.option("--annotators", required=True, help="comma-separated annotator ids")
@click.option("--seed", default=0, show_default=True)
@click.option("--set-size", default=100, show_default=True)
@click.option("--raters-per-set", default=5, show_default=True)
@click.option("--db", "db_path", required=True, type=click.Path())
def plan(texts_path, annotators, seed, set_size, raters_per_set, db_path):
    """Build the set/annotator assignment plan into a rating store."""
    records = dio.read_records(texts_path)
    annotator_ids = [a for a in annotators.split(",") if a]
    try:
        p = build_plan(
            [r.id for r in records], annotator_ids, seed,
            set_size=set_size, raters_per_set=raters_per_set,
        )
    except EmobenchError as exc:
        _fail(exc)
    store = RatingStore(db_path)
    store.load_texts({r.id: r.clean_text for r in records})
    store.load_plan(p)
    store.close()
    click.echo(f"planned {len(p.sets)} sets for {len(annotator_ids)} annotators")


@main.command()
@click.option("--db", "db_path", required=True, type=click.Path(exists=True))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--static", "static_dir", type=click.Path(exists=True))
def serve(db_path, host, port, static_dir):
    """Run the annotation HTTP service."""
    import uvicorn

    from .annostore.service import create_app

    app = create_app(RatingStore(db_path), serve_static=static_dir)
    uvicorn.run(app, host=host, port=port)


@main.command("simulate-ratings")
@click.option("--db", "db_path", required=True, type=click.Path(exists=True))
@click.option("--seed", default=0, show_default=True)
def simulate_ratings(db_path, seed):
    """Fill every assignment with synthetic final ratings (testing aid)."""
    store = RatingStore(db_path)
    rng = np.random.default_rng(seed)
    count = 0
    annotators = [
        r["id"] for r in store._conn.execute("SELECT id FROM annotators ORDER BY id")
    ]
    for annotator in annotators:
        for set_id in store.assigned_sets(annotator):
            for text_id in store.set_text_ids(set_id):
                labels = {}
                for metric in ALL_METRICS:
                    lo, hi = raw_scale(metric)
                    labels[metric] = int(rng.integers(lo, hi + 1))
                store.submit_rating(annotator, text_id, set_id, labels, final=True)
                count += 1
    store.close()
    click.echo(f"submitted {count} simulated ratings")


@main.command()
@click.option("--db", "db_path", required=True, type=click.Path(exists=True))
@click.option("--ratings", "ratings_path", required=True, type=click.Path())
@click.option("--aggregates", "aggregates_path", type=click.Path())
def export(db_path, ratings_path, aggregates_path):
    """Export final ratings and (optionally) per-text aggregates."""
    store = RatingStore(db_path)
    n = store.export_ratings(ratings_path)
    if aggregates_path:
        aggregates = {
            tid: store.aggregate(tid)["mean"] for tid in store.rated_text_ids()
        }
        _write_aggregates(aggregates, aggregates_path)
    store.close()
    click.echo(f"exported {n} ratings")


# -- reliability ---------------------------------------------------------------


@main.command()
@click.option("--ratings", "ratings_path", required=True, type=click.Path(exists=True))
@click.option("--k", default=5, show_default=True, help="raters per text")
@click.option("--output", "output_path", type=click.Path())
def agree(ratings_path, k, output_path):
    """Per-metric ICC(1) and ICC(1,k) agreement table."""
    by_metric = read_ratings_export(ratings_path)
    report = {"k": k, "metrics": {}, "rows": []}
    for metric in ALL_METRICS:
        try:
            matrix, excluded = complete_matrix(by_metric[metric], k)
            for kind, fn in (("ICC1", icc1), ("ICC1k", icc1k)):
                res = fn(matrix)
                report["metrics"].setdefault(metric, {})[kind] = {
                    "estimate": res.estimate,
                    "ci95": list(res.ci95),
                    "f_value": res.f_value,
                    "df": [res.df1, res.df2],
                    "band": res.band,
                }
                report["rows"].append(icc_table_row(metric, res))
            report["metrics"][metric]["excluded_texts"] = excluded
        except (EmobenchError, ValueError) as exc:
            _fail(exc)
    for row in report["rows"]:
        click.echo(row)
    if output_path:
        Path(output_path).write_text(
            json.dumps(report, indent=2, ensure_ascii=False), encoding="utf-8"
        )


# -- fewshot -------------------------------------------------------------------


@main.command()
@click.option("--texts", "texts_path", required=True, type=click.Path(exists=True))
@click.option("--gold", "gold_path", required=True, type=click.Path(exists=True),
              help="aggregates file over the training partition")
@click.option("--k-basic", default=3, show_default=True)
@click.option("--k-dim", default=2, show_default=True)
@click.option("--output", "output_path", required=True, type=click.Path())
def shots(texts_path, gold_path, k_basic, k_dim, output_path):
    """Select k-shot exemplars per metric and render prompt prefixes."""
    records = {r.id: r.clean_text for r in dio.read_records(texts_path)}
    gold = _read_aggregates(gold_path)
    pool = {tid: text for tid, text in records.items() if tid in gold}
    try:
        embedded = embed_batch(sorted(pool.items()), provider=local_embedder())
        plans = {}
        for metric in ALL_METRICS:
            k = k_basic if metric in BASIC_EMOTIONS else k_dim
            p = select_exemplars(
                embedded, pool, {tid: gold[tid][metric] for tid in pool}, metric, k
            )
            plans[metric] = ShotPlan(
                metric=metric, k=k, exemplars=p.exemplars,
                prompt_prefix=render_prefix(metric, p),
            )
    except EmobenchError as exc:
        _fail(exc)
    payload = {
        m: {
            "k": p.k,
            "exemplars": [
                {"text_id": e.text_id, "clean_text": e.clean_text, "gold_score": e.gold_score}
                for e in p.exemplars
            ],
            "prompt_prefix": p.prompt_prefix,
        }
        for m, p in plans.items()
    }
    Path(output_path).write_text(
        json.dumps(payload, indent=2, ensure_ascii=False), encoding="utf-8"
    )
    click.echo(f"shot plans for {len(plans)} metrics")


def load_shot_plans(path) -> dict[str, ShotPlan]:
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    return {
        metric: ShotPlan(
            metric=metric,
            k=entry["k"],
            exemplars=tuple(
                Exemplar(e["text_id"], e["clean_text"], e["gold_score"])
                for e in entry["exemplars"]
            ),
            prompt_prefix=entry["prompt_prefix"],
        )
        for metric, entry in raw.items()
    }


# -- llmrun --------------------------------------------------------------------


@main.command("annotate-llm")
@click.option("--texts", "texts_path", required=True, type=click.Path(exists=True))
@click.option("--plans", "plans_path", required=True, type=click.Path(exists=True))
@click.option("--endpoint", required=True)
@click.option("--model", required=True)
@click.option("--token", default="", envvar="EMOBENCH_API_TOKEN")
@click.option("--run-id", required=True)
@click.option("--run-dir", required=True, type=click.Path())
@click.option("--temperature", default=0.0, show_default=True)
@click.option("--rpm", default=0.0, show_default=True, help="requests per minute cap")
def annotate_llm(texts_path, plans_path, endpoint, model, token, run_id, run_dir,
                 temperature, rpm):
    """Query the chat endpoint for every (metric, text) pair; resumable."""
    records = [(r.id, r.clean_text) for r in dio.read_records(texts_path)]
    plans = load_shot_plans(plans_path)
    client = ChatClient(ChatConfig(
        endpoint=endpoint, model=model, token=token,
        temperature=temperature, requests_per_minute=rpm,
    ))
    try:
        outcomes, manifest = run_annotation(records, plans, client, run_id, run_dir)
    except EmobenchError as exc:
        _fail(exc)
    finally:
        client.close()
    export_outcomes(outcomes, Path(run_dir) / "outcomes.csv")
    click.echo(json.dumps({
        "n_outcomes": manifest["n_outcomes"],
        "rejections_total": manifest["rejections_total"],
    }))


# -- evaluation ----------------------------------------------------------------


@main.command("eval")
@click.option("--reference", "reference_path", required=True, type=click.Path(exists=True),
              help="ratings export from the annotation store")
@click.option("--predictions", "prediction_paths", multiple=True, type=click.Path(exists=True),
              help="external predictions file: text_id,happiness,...,arousal")
@click.option("--run", "run_dirs", multiple=True, type=click.Path(exists=True),
              help="LLM run directory")
@click.option("--output", "output_path", required=True, type=click.Path())
def eval_cmd(reference_path, prediction_paths, run_dirs, output_path):
    """Correlation/SD comparison report plus label histograms."""
    from . import to_canonical

    raw_by_metric = read_ratings_export(reference_path)
    canon_raw = {
        m: {tid: [to_canonical(m, v) for v in vals] for tid, vals in per.items()}
        for m, per in raw_by_metric.items()
    }
    reference = {}
    for metric, per_text in canon_raw.items():
        for tid, vals in per_text.items():
            reference.setdefault(tid, {})[metric] = float(np.mean(vals))

    predictions: dict[str, dict[str, dict[str, float]]] = {}
    for path in prediction_paths:
        predictions[f"supervised:{Path(path).stem}"] = _read_aggregates(path)
    rejected_by_metric: dict[str, int] = {}
    for run_dir in run_dirs:
        outcomes = load_outcomes(run_dir)
        per_text: dict[str, dict[str, float]] = {}
        for o in outcomes:
            if o.status == "ok":
                per_text.setdefault(o.text_id, {})[o.metric] = (o.parsed - 1) / 4
            else:
                rejected_by_metric[o.metric] = rejected_by_metric.get(o.metric, 0) + 1
        complete = {tid: v for tid, v in per_text.items() if len(v) == len(ALL_METRICS)}
        predictions[f"llm:{Path(run_dir).name}"] = complete

    try:
        table = comparison_table(predictions, reference, canon_raw)
    except EmobenchError as exc:
        _fail(exc)
    histograms = {
        metric: label_histogram(
            [v for vals in canon_raw[metric].values() for v in vals]
        )
        for metric in ALL_METRICS
    }
    report = {
        "comparison": table,
        "histograms": histograms,
        "n_rejected": rejected_by_metric,
    }
    Path(output_path).write_text(
        json.dumps(report, indent=2, ensure_ascii=False), encoding="utf-8"
    )
    click.echo(f"report written to {output_path}")


@main.command("sweep-report")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True),
              help="JSON: k -> metric -> {r, sd, n_rejected}")
@click.option("--output", "output_path", type=click.Path())
def sweep_report(input_path, output_path):
    """Shot-sweep summary (type, r, SD, n rejected) with the selected k."""
    raw = json.loads(Path(input_path).read_text(encoding="utf-8"))
    per_k = {int(k): v for k, v in raw.items()}
    try:
        rows = shot_sweep_report(per_k, ks=sorted(per_k))
    except EmobenchError as exc:
        _fail(exc)
    payload = [
        {"type": f"{'Zero One Two Three Four Five'.split()[r.k]} Shot",
         "k": r.k, "r": round(r.mean_r, 4), "sd": round(r.mean_sd, 4),
         "n_rejected": r.n_rejected, "selected": r.selected}
        for r in rows
    ]
    for row in payload:
        click.echo(json.dumps(row))
    if output_path:
        Path(output_path).write_text(json.dumps(payload, indent=2), encoding="utf-8")


@main.command("fold-report")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True),
              help="JSON: metric -> list of per-fold r values")
@click.option("--k", default=10, show_default=True)
@click.option("--output", "output_path", type=click.Path())
def fold_report(input_path, k, output_path):
    """Per-metric mean cross-fold correlation with a 95% CI."""
    raw = json.loads(Path(input_path).read_text(encoding="utf-8"))
    payload = {}
    for metric, values in raw.items():
        try:
            mean, ci = fold_aggregate(values, k=k)
        except EmobenchError as exc:
            _fail(exc)
        payload[metric] = {"mean": round(mean, 4), "ci95": [round(c, 4) for c in ci]}
        click.echo(f"{metric}: {mean:.2f} [{ci[0]:.2f}, {ci[1]:.2f}]")
    if output_path:
        Path(output_path).write_text(json.dumps(payload, indent=2), encoding="utf-8")


# -- pipeline ------------------------------------------------------------------


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
def validate(config_path):
    """Check a pipeline config without side effects."""
    try:
        cfg = PipelineConfig.load(config_path)
        for stage in cfg.seeds:
            cfg.seed(stage)
    except EmobenchError as exc:
        _fail(exc)
    click.echo("config ok")


STAGES = ("clean", "score", "sample", "split", "kfold", "agree", "eval")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--stage", required=True, type=click.Choice(STAGES))
@click.pass_context
def run(ctx, config_path, stage):
    """Run one pipeline stage from the config, recording a manifest."""
    try:
        cfg = PipelineConfig.load(config_path)
        workdir = cfg.workdir()
        started = time.time()
        if stage == "clean":
            src = cfg.path("corpus")
            require_upstream(src)
            out = workdir / "cleaned.jsonl"
            ctx.invoke(clean, input_path=str(src), output_path=str(out))
            write_manifest(workdir, stage, [src], [out], None, started)
        elif stage == "score":
            src, lex = workdir / "cleaned.jsonl", cfg.path("lexicon")
            require_upstream(src, lex)
            out = workdir / "scored.jsonl"
            ctx.invoke(score_lexicon, records_path=str(src),
                       lexicon_path=str(lex), output_path=str(out))
            write_manifest(workdir, stage, [src, lex], [out], None, started)
        elif stage == "sample":
            src = workdir / "scored.jsonl"
            require_upstream(src)
            out = workdir / "sampled.jsonl"
            seed = cfg.seed("sample")
            ctx.invoke(sample, records_path=str(src),
                       n_weighted=cfg.sampling["n_weighted"],
                       n_uniform=cfg.sampling["n_uniform"],
                       seed=seed, output_path=str(out))
            write_manifest(workdir, stage, [src], [out], seed, started)
        elif stage == "split":
            src = workdir / "aggregates.csv"
            require_upstream(src)
            out = workdir / "splits.csv"
            seed = cfg.seed("split")
            ctx.invoke(split, labels_path=str(src),
                       test_frac=cfg.split["test_frac"], seed=seed,
                       output_path=str(out))
            write_manifest(workdir, stage, [src], [out], seed, started)
        elif stage == "kfold":
            src = workdir / "ids.txt"
            require_upstream(src)
            out = workdir / "kfold.csv"
            seed = cfg.seed("kfold")
            ctx.invoke(kfold, ids_path=str(src), k=cfg.split["kfold"],
                       seed=seed, output_path=str(out))
            write_manifest(workdir, stage, [src], [out], seed, started)
        elif stage == "agree":
            src = workdir / "ratings.csv"
            require_upstream(src)
            out = workdir / "agreement.json"
            ctx.invoke(agree, ratings_path=str(src),
                       k=cfg.plan["raters_per_set"], output_path=str(out))
            write_manifest(workdir, stage, [src], [out], None, started)
        elif stage == "eval":
            ref = workdir / "ratings.csv"
            require_upstream(ref)
            out = workdir / "report.json"
            runs = tuple(str(p) for p in [workdir / "llm_run"] if p.exists())
            preds = tuple(
                str(p) for p in [cfg.path("predictions", required=False)]
                if p and p.exists()
            )
            if not runs and not preds:
                raise EmobenchError("eval needs an LLM run or a predictions file")
            ctx.invoke(eval_cmd, reference_path=str(ref),
                       prediction_paths=preds, run_dirs=runs,
                       output_path=str(out))
            write_manifest(workdir, stage, [ref], [out], None, started)
    except EmobenchError as exc:
        _fail(exc)


if __name__ == "__main__":
    main()
