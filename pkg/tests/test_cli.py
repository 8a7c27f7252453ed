import json

import pytest
from click.testing import CliRunner

from barcode.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, args, **kw):
    return runner.invoke(main, args, catch_exceptions=False, **kw)


class TestIngest:
    def test_ingest_and_json_mode(self, runner, fixtures_dir, tmp_path):
        result = invoke(runner, ["--json", "ingest", str(fixtures_dir / "articles.jsonl"),
                                 "--index", str(tmp_path / "idx")])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["n_articles"] == 68
        assert payload["n_sentences"] > payload["n_articles"]

    def test_missing_file_is_usage_error(self, runner, tmp_path):
        result = runner.invoke(main, ["ingest", str(tmp_path / "nope.jsonl"),
                                      "--index", str(tmp_path / "idx")])
        assert result.exit_code == 2


class TestMinePatents:
    def test_mine_patents(self, runner, fixtures_dir, tmp_path):
        out = tmp_path / "problems.tsv"
        result = invoke(runner, ["--json", "mine-patents",
                                 str(fixtures_dir / "patents" / "claims.txt"),
                                 "--out", str(out), "--top-n", "10"])
        assert result.exit_code == 0
        assert json.loads(result.output)["entries"] == 10
        assert len(out.read_text().splitlines()) == 10


class TestQuery:
    def test_query_table_output(self, runner, built_bundle_dir):
        result = invoke(runner, ["query", "prevent sinking",
                                 "--index", str(built_bundle_dir), "--k", "5"])
        assert result.exit_code == 0
        assert "Ctenophora" in result.output

    def test_query_json_deterministic(self, runner, built_bundle_dir):
        args = ["--json", "query", "collect water from humid air",
                "--index", str(built_bundle_dir), "--k", "15"]
        first = invoke(runner, args)
        second = invoke(runner, args)
        assert first.exit_code == 0
        assert first.output == second.output
        payload = json.loads(first.output)
        assert payload["status"] == "ok"
        assert len(payload["results"]) <= 15

    def test_missing_query_text_is_usage_error(self, runner, built_bundle_dir):
        result = runner.invoke(main, ["query", "--index", str(built_bundle_dir)])
        assert result.exit_code == 2
        assert "Usage" in result.output

    def test_unknown_flag_is_usage_error(self, runner, built_bundle_dir):
        result = runner.invoke(main, ["query", "x", "--index", str(built_bundle_dir),
                                      "--bogus"])
        assert result.exit_code == 2

    def test_unsealed_index_is_domain_error(self, runner, bundle_copy):
        (bundle_copy / "manifest.json").unlink()
        result = runner.invoke(main, ["query", "x", "--index", str(bundle_copy)])
        assert result.exit_code == 1

    def test_filtered_flag(self, runner, built_bundle_dir):
        result = invoke(runner, ["--json", "query", "sense light",
                                 "--index", str(built_bundle_dir), "--filtered"])
        assert result.exit_code == 0
        assert json.loads(result.output)["filtered"] is True

    def test_bm25_baseline_hook(self, runner, built_bundle_dir):
        result = invoke(runner, ["--json", "query", "fog droplets hardened wings",
                                 "--index", str(built_bundle_dir), "--baseline", "--k", "3"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["method"] == "bm25"
        assert payload["results"][0]["sentence_id"] == "stenocara#0"


class TestEvaluate:
    def test_table3_shape(self, runner, fixtures_dir):
        result = invoke(runner, ["evaluate",
                                 "--run", str(fixtures_dir / "table3" / "run.tsv"),
                                 "--qrels", str(fixtures_dir / "table3" / "qrels.tsv"),
                                 "--k", "7", "--k", "15"])
        assert result.exit_code == 0
        assert "0.718" in result.output
        assert "0.694" in result.output

    def test_evaluate_json(self, runner, fixtures_dir):
        result = invoke(runner, ["--json", "evaluate",
                                 "--run", str(fixtures_dir / "table3" / "run.tsv"),
                                 "--qrels", str(fixtures_dir / "table3" / "qrels.tsv")])
        payload = json.loads(result.output)
        assert payload["n_queries"] == 42


class TestRobustness:
    def test_rbo_between_runs(self, runner, fixtures_dir, tmp_path):
        run = fixtures_dir / "table3" / "run.tsv"
        result = invoke(runner, ["--json", "robustness", str(run), str(run)])
        payload = json.loads(result.output)
        assert payload["mean_rbo"] == pytest.approx(1.0)
        assert payload["mean_shared"] == pytest.approx(15.0)


class TestBuildVerify:
    def test_build_then_verify(self, runner, fixtures_dir, tmp_path, repo_root):
        index = tmp_path / "idx"
        result = invoke(runner, ["--config", str(repo_root / "barcode.toml"), "--json",
                                 "build-index", str(fixtures_dir / "articles.jsonl"),
                                 "--index", str(index)])
        assert result.exit_code == 0, result.output
        check = invoke(runner, ["--json", "verify-bundle", "--index", str(index)])
        assert json.loads(check.output)["ok"] is True

    def test_stage_command_unseals(self, runner, bundle_copy, repo_root):
        result = invoke(runner, ["--config", str(repo_root / "barcode.toml"), "score-bio",
                                 "--index", str(bundle_copy)])
        assert result.exit_code == 0
        check = runner.invoke(main, ["verify-bundle", "--index", str(bundle_copy)])
        assert check.exit_code == 1  # unsealed until build-index reseals


class TestJsonMode:
    def test_every_subcommand_emits_parseable_json(self, runner, fixtures_dir,
                                                   built_bundle_dir, tmp_path, repo_root):
        run = fixtures_dir / "table3" / "run.tsv"
        qrels = fixtures_dir / "table3" / "qrels.tsv"
        work = tmp_path / "a"
        config = ["--config", str(repo_root / "barcode.toml")]
        commands = [
            ["ingest", str(fixtures_dir / "articles.jsonl"), "--index", str(work)],
            config + ["extract-phrases", "--index", str(work)],
            config + ["score-bio", "--index", str(work)],
            ["mine-patents", str(fixtures_dir / "patents" / "claims.txt"),
             "--out", str(tmp_path / "p.tsv")],
            ["query", "reduce drag", "--index", str(built_bundle_dir)],
            ["evaluate", "--run", str(run), "--qrels", str(qrels)],
            ["robustness", str(run), str(run)],
            ["verify-bundle", "--index", str(built_bundle_dir)],
        ]
        for command in commands:
            result = invoke(runner, ["--json"] + command)
            assert result.exit_code == 0, (command, result.output)
            json.loads(result.output)
