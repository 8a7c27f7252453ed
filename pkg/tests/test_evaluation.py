import json

import pytest

from barcode.evaluation import (
    EvaluationError,
    Qrels,
    RunFile,
    evaluate_run,
    format_report,
    load_asknature_queries,
    load_paraphrase_pairs,
    load_qrels,
    load_run,
    report_to_json,
    robustness_report,
    save_run,
)


def small_run():
    run = RunFile()
    for sid in ["s1", "s2", "s3"]:
        run.add("q1", sid)
    return run


def small_qrels():
    qrels = Qrels()
    qrels.add("q1", "s1", challenge=True, strategy=True)
    qrels.add("q1", "s2", challenge=False, strategy=True)
    qrels.add("q1", "s3", challenge=False, strategy=False)
    return qrels


def test_single_query_means_equal_values():
    report = evaluate_run(small_run(), small_qrels(), [2])
    assert report["aspects"]["strategy"]["2"]["precision"] == pytest.approx(1.0)
    assert report["aspects"]["challenge"]["2"]["precision"] == pytest.approx(0.5)
    assert report["n_queries"] == 1


def test_empty_run():
    report = evaluate_run(RunFile(), small_qrels(), [5])
    assert report["n_queries"] == 0
    assert report["aspects"]["strategy"]["5"]["precision"] == 0.0


def test_unjudged_query_flagged_and_excluded():
    run = small_run()
    run.add("mystery", "s9")
    report = evaluate_run(run, small_qrels(), [2])
    assert report["unjudged_queries"] == ["mystery"]
    assert report["n_queries"] == 1


def test_duplicate_sentence_in_ranking_rejected():
    run = RunFile()
    run.add("q1", "s1")
    with pytest.raises(EvaluationError):
        run.add("q1", "s1")


def test_ndcg_uses_judged_relevant_count():
    # Two strategy-relevant judged; the run surfaces only one.
    run = RunFile()
    run.add("q1", "s1")
    qrels = Qrels()
    qrels.add("q1", "s1", challenge=False, strategy=True)
    qrels.add("q1", "hidden", challenge=False, strategy=True)
    report = evaluate_run(run, qrels, [2])
    assert report["aspects"]["strategy"]["2"]["ndcg"] < 1.0


def test_tsv_roundtrip(tmp_path):
    run = small_run()
    save_run(run, tmp_path / "run.tsv")
    assert load_run(tmp_path / "run.tsv").rankings == run.rankings

    (tmp_path / "qrels.tsv").write_text("q1\ts1\t1\t0\nq1\ts2\t0\t1\n")
    qrels = load_qrels(tmp_path / "qrels.tsv")
    assert qrels.is_relevant("q1", "s1", "challenge")
    assert not qrels.is_relevant("q1", "s1", "strategy")
    assert qrels.is_relevant("q1", "s2", "strategy")


def test_report_json_and_table():
    report = evaluate_run(small_run(), small_qrels(), [2, 3])
    parsed = json.loads(report_to_json(report))
    assert parsed["ks"] == [2, 3]
    table = format_report(report)
    assert "strategy" in table and "@2" in table and "@3" in table


def test_table3_fixture_reproduces_reference_rows(fixtures_dir):
    run = load_run(fixtures_dir / "table3" / "run.tsv")
    qrels = load_qrels(fixtures_dir / "table3" / "qrels.tsv")
    report = evaluate_run(run, qrels, [7, 15])
    strategy = report["aspects"]["strategy"]
    challenge = report["aspects"]["challenge"]
    assert strategy["7"]["precision"] == pytest.approx(0.718, abs=0.001)
    assert strategy["15"]["precision"] == pytest.approx(0.694, abs=0.001)
    assert challenge["7"]["precision"] == pytest.approx(0.565, abs=0.001)
    assert challenge["15"]["precision"] == pytest.approx(0.541, abs=0.001)


def test_robustness_report():
    run_a, run_b = RunFile(), RunFile()
    for sid in ["a", "b", "c"]:
        run_a.add("q1", sid)
    for sid in ["b", "a", "c"]:
        run_b.add("q1", sid)
    for sid in ["x", "y"]:
        run_a.add("q2", sid)
        run_b.add("q2", sid)
    report = robustness_report(run_a, run_b, p=0.9, depth=15)
    assert report["n_queries"] == 2
    assert report["per_query"]["q2"]["rbo"] == pytest.approx(1.0)
    assert report["per_query"]["q1"]["shared"] == 3
    assert 0 < report["mean_rbo"] <= 1


def test_query_fixtures_shipped():
    queries = load_asknature_queries()
    pairs = load_paraphrase_pairs()
    assert len(queries) == 24
    assert len(pairs) == 18
    assert "blend into environment" in queries
    assert ("repel water", "prevent water absorption") in pairs
    # every paraphrase pairs an original from the query list
    originals = {original for original, _ in pairs}
    assert originals <= set(queries)
