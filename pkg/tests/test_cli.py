import csv
import json

import pytest
from click.testing import CliRunner

from emobench import ALL_METRICS
from emobench.cli import main

LEXICON = "stem,valence,arousal,dominance\nzłość,4,5,3\nradość,5,2,4\n"


@pytest.fixture
def runner():
    return CliRunner()


def write_corpus(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")


def test_clean_score_sample_chain(runner, tmp_path):
    corpus = tmp_path / "raw.jsonl"
    write_corpus(corpus, [
        {"id": f"t{i}", "platform": "twitter",
         "text": f"https://t.co/x @kto złość radość tekst numer {i}"}
        for i in range(20)
    ])
    cleaned = tmp_path / "cleaned.jsonl"
    result = runner.invoke(main, ["clean", "--input", str(corpus), "--output", str(cleaned)])
    assert result.exit_code == 0, result.output
    first = json.loads(cleaned.read_text(encoding="utf-8").splitlines()[0])
    assert first["clean_text"].startswith("_link_ _user_")

    lex = tmp_path / "lex.csv"
    lex.write_text(LEXICON, encoding="utf-8")
    scored = tmp_path / "scored.jsonl"
    result = runner.invoke(main, [
        "score-lexicon", "--records", str(cleaned),
        "--lexicon", str(lex), "--output", str(scored),
    ])
    assert result.exit_code == 0, result.output
    assert json.loads(scored.read_text().splitlines()[0])["weight"] > 0

    sampled = tmp_path / "sampled.jsonl"
    result = runner.invoke(main, [
        "sample", "--records", str(scored), "--n-weighted", "10",
        "--n-uniform", "5", "--seed", "1", "--output", str(sampled),
    ])
    assert result.exit_code == 0, result.output
    assert len(sampled.read_text().splitlines()) == 15


def test_sample_failure_is_machine_readable(runner, tmp_path):
    records = tmp_path / "r.jsonl"
    write_corpus(records, [{"id": "a", "platform": "other", "text": "x",
                            "clean_text": "x", "char_len": 1, "weight": 0.0}])
    result = runner.invoke(main, [
        "sample", "--records", str(records), "--n-weighted", "1",
        "--n-uniform", "0", "--seed", "0", "--output", str(tmp_path / "o"),
    ])
    assert result.exit_code == 1
    error = json.loads(result.output.strip().splitlines()[-1])
    assert error["error"] == "AllZeroWeights"


def test_kfold_command(runner, tmp_path):
    ids_file = tmp_path / "ids.txt"
    ids_file.write_text("\n".join(f"t{i}" for i in range(30)), encoding="utf-8")
    out = tmp_path / "folds.csv"
    result = runner.invoke(main, [
        "kfold", "--ids", str(ids_file), "--k", "3", "--seed", "0",
        "--output", str(out),
    ])
    assert result.exit_code == 0, result.output
    rows = list(csv.DictReader(open(out, encoding="utf-8")))
    assert len(rows) == 90  # 3 iterations x 30 ids
    held = [r["text_id"] for r in rows if r["partition"] == "test"]
    assert sorted(held) == sorted(f"t{i}" for i in range(30))


def test_plan_export_agree_chain(runner, tmp_path):
    corpus = tmp_path / "texts.jsonl"
    write_corpus(corpus, [
        {"id": f"t{i}", "platform": "twitter", "text": f"tekst {i}",
         "clean_text": f"tekst {i}", "char_len": 7}
        for i in range(20)
    ])
    db = tmp_path / "anno.db"
    result = runner.invoke(main, [
        "plan", "--texts", str(corpus), "--annotators", "a1,a2,a3,a4,a5",
        "--seed", "0", "--set-size", "10", "--db", str(db),
    ])
    assert result.exit_code == 0, result.output

    result = runner.invoke(main, ["simulate-ratings", "--db", str(db), "--seed", "7"])
    assert result.exit_code == 0, result.output

    ratings = tmp_path / "ratings.csv"
    aggregates = tmp_path / "agg.csv"
    result = runner.invoke(main, [
        "export", "--db", str(db), "--ratings", str(ratings),
        "--aggregates", str(aggregates),
    ])
    assert result.exit_code == 0, result.output
    assert len(list(csv.DictReader(open(aggregates)))) == 20

    agreement = tmp_path / "agreement.json"
    result = runner.invoke(main, [
        "agree", "--ratings", str(ratings), "--k", "5", "--output", str(agreement),
    ])
    assert result.exit_code == 0, result.output
    report = json.loads(agreement.read_text(encoding="utf-8"))
    assert set(report["metrics"]) == set(ALL_METRICS)
    assert len(report["rows"]) == 16  # ICC(1) + ICC(1,k) per metric


def test_validate_config(runner, tmp_path):
    config = tmp_path / "pipeline.yaml"
    config.write_text(
        "paths:\n  workdir: {wd}\n  corpus: {wd}/raw.jsonl\n"
        "seeds:\n  sample: 1\n  split: 2\n  kfold: 3\n".format(wd=tmp_path),
        encoding="utf-8",
    )
    result = runner.invoke(main, ["validate", "--config", str(config)])
    assert result.exit_code == 0 and "config ok" in result.output

    bad = tmp_path / "bad.yaml"
    bad.write_text("seeds: {}\n", encoding="utf-8")
    result = runner.invoke(main, ["validate", "--config", str(bad)])
    assert result.exit_code == 1
    assert json.loads(result.output.strip())["error"] == "ConfigError"


def test_run_stage_requires_upstream(runner, tmp_path):
    config = tmp_path / "pipeline.yaml"
    config.write_text(
        f"paths:\n  workdir: {tmp_path}/wd\nseeds:\n  sample: 1\n",
        encoding="utf-8",
    )
    result = runner.invoke(main, ["run", "--config", str(config), "--stage", "eval"])
    assert result.exit_code == 1
    assert json.loads(result.output.strip())["error"] == "MissingUpstream"


def test_sweep_and_fold_reports(runner, tmp_path):
    sweep_in = tmp_path / "sweep.json"
    sweep_in.write_text(json.dumps({
        str(k): {"happiness": {"r": 0.6 + 0.02 * k, "sd": 1.1, "n_rejected": k}}
        for k in range(6)
    }), encoding="utf-8")
    out = tmp_path / "sweep_out.json"
    result = runner.invoke(main, [
        "sweep-report", "--input", str(sweep_in), "--output", str(out),
    ])
    assert result.exit_code == 0, result.output
    rows = json.loads(out.read_text())
    assert [set(r) for r in rows] == [
        {"type", "k", "r", "sd", "n_rejected", "selected"}
    ] * 6
    assert [r for r in rows if r["selected"]][0]["k"] == 5

    fold_in = tmp_path / "folds.json"
    fold_in.write_text(json.dumps({"anger": [0.8] * 10}), encoding="utf-8")
    result = runner.invoke(main, ["fold-report", "--input", str(fold_in)])
    assert result.exit_code == 0
    assert "anger: 0.80 [0.80, 0.80]" in result.output
