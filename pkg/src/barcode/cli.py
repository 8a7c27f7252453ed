"""Command-line entry point for every pipeline stage.

Exit codes: 0 success, 1 domain error (bad data, unsealed bundle, ...),
2 usage error. With --json every subcommand writes machine-readable
JSON to stdout; logs go to stderr either way.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from . import BarcodeError, __version__
from .bundle import IndexBundle, build_bundle, seal_bundle, verify_bundle
from .config import load_config
from .corpus import CorpusStore, ingest, read_articles_jsonl
from .evaluation import (
    evaluate_run,
    format_report,
    load_qrels,
    load_run,
    report_to_json,
    robustness_report,
)
from .patents import build_lexicon, extract_problem_pairs, save_lexicon

logger = logging.getLogger("barcode")


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _config_from_ctx(ctx: click.Context, **overrides):
    params = ctx.obj or {}
    config = load_config(path=params.get("config_path"), overrides=overrides)
    logger.info("effective config: %s", json.dumps(json.loads(config.to_json()), sort_keys=True))
    return config


@click.group(context_settings={"auto_envvar_prefix": "BARCODE"})
@click.option("--config", "config_path", type=click.Path(exists=True, path_type=Path),
              default=None, help="Path to barcode.toml.")
@click.option("--json", "json_mode", is_flag=True, default=False,
              help="Machine-readable JSON on stdout.")
@click.option("--seed", type=int, default=None, help="Override the pipeline seed.")
@click.option("-v", "--verbose", is_flag=True, default=False)
@click.version_option(version=__version__, prog_name="barcode")
@click.pass_context
def main(ctx: click.Context, config_path: Path | None, json_mode: bool, seed: int | None,
         verbose: bool):
    """Mine bio-inspirations: build indexes, query them, evaluate runs."""
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = {"config_path": config_path, "json": json_mode, "seed": seed}


def _handle_domain_errors(fn):
    """Map domain failures to exit code 1 (usage errors stay exit 2)."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BarcodeError as exc:
            raise click.ClickException(str(exc)) from exc

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _unseal(index_dir: Path, stage: str) -> None:
    """Stage commands change bundle contents, so any existing seal and the
    markers of this + later stages are dropped; build-index reseals."""
    manifest = Path(index_dir) / "manifest.json"
    if manifest.exists():
        manifest.unlink()
    from .bundle import STAGES

    for later in STAGES[STAGES.index(stage):]:
        marker = Path(index_dir) / ".stages" / f"{later}.done"
        if marker.exists():
            marker.unlink()


@main.command("ingest")
@click.argument("articles", type=click.Path(exists=True, path_type=Path))
@click.option("--index", "index_dir", type=click.Path(path_type=Path), required=True,
              help="Index directory to create the corpus store in.")
@click.pass_context
@_handle_domain_errors
def ingest_cmd(ctx: click.Context, articles: Path, index_dir: Path):
    """Ingest a JSONL article stream into the corpus store."""
    _unseal(index_dir, "corpus")
    store, report = ingest(read_articles_jsonl(articles), index_dir)
    payload = {
        "n_articles": report.stats.n_articles,
        "n_sentences": report.stats.n_sentences,
        "skipped_empty": report.skipped_empty,
    }
    if ctx.obj["json"]:
        click.echo(_dump(payload))
    else:
        click.echo(
            f"ingested {payload['n_articles']} articles / {payload['n_sentences']} sentences"
            + (f" ({payload['skipped_empty']} empty skipped)" if payload["skipped_empty"] else "")
        )


@main.command("extract-phrases")
@click.option("--index", "index_dir", type=click.Path(exists=True, path_type=Path), required=True)
@click.pass_context
@_handle_domain_errors
def extract_phrases(ctx: click.Context, index_dir: Path):
    """Extract candidate phrases for every corpus sentence."""
    from .patterns import load_patterns
    from .phrases import extract_all
    from .providers import make_parse_provider, make_srl_provider

    config = _config_from_ctx(ctx)
    _unseal(index_dir, "phrases")
    store = CorpusStore(index_dir / "corpus")
    report = extract_all(
        store,
        make_parse_provider(config.parse_provider),
        make_srl_provider(config.srl_provider),
        load_patterns(Path(config.patterns_file)),
        index_dir / "phrases.jsonl",
    )
    payload = {
        "n_sentences": report.n_sentences,
        "n_phrases": report.n_phrases,
        "n_skipped": report.n_skipped,
        "n_qa_dropped": report.n_qa_dropped,
    }
    click.echo(_dump(payload) if ctx.obj["json"] else
               f"{payload['n_phrases']} phrases from {payload['n_sentences']} sentences "
               f"({payload['n_skipped']} skipped)")


@main.command("mine-patents")
@click.argument("claims", type=click.Path(exists=True, path_type=Path))
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True,
              help="Where to write the problems TSV.")
@click.option("--top-n", type=int, default=2000, show_default=True)
@click.pass_context
@_handle_domain_errors
def mine_patents(ctx: click.Context, claims: Path, out_path: Path, top_n: int):
    """Mine "for [verb]-ing [noun]" problems from claim sentences."""
    def pair_stream():
        with Path(claims).open(encoding="utf-8") as fh:
            for line in fh:
                yield from extract_problem_pairs(line.strip())

    lexicon = build_lexicon(pair_stream(), top_n=top_n)
    save_lexicon(lexicon, out_path)
    payload = {"entries": lexicon.size, "out": str(out_path), "source_hash": lexicon.source_hash}
    click.echo(_dump(payload) if ctx.obj["json"] else
               f"wrote {lexicon.size} problem pairs to {out_path}")


@main.command("score-bio")
@click.option("--index", "index_dir", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--tau", type=float, default=None, help="Report retention at this threshold.")
@click.pass_context
@_handle_domain_errors
def score_bio(ctx: click.Context, index_dir: Path, tau: float | None):
    """Run clausal extraction + labeling functions + label model."""
    from .bundle import _run_bio_stage
    from .labelmodel import load_scores
    from .providers import make_parse_provider

    overrides = {"tau": tau} if tau is not None else {}
    if ctx.obj.get("seed") is not None:
        overrides["seed"] = ctx.obj["seed"]
    config = _config_from_ctx(ctx, **overrides)
    _unseal(index_dir, "bio")
    store = CorpusStore(index_dir / "corpus")
    _run_bio_stage(store, make_parse_provider(config.parse_provider), index_dir, config)
    scores = load_scores(index_dir / "bio_scores.jsonl")
    retained = sum(1 for s in scores if s.score >= config.tau)
    payload = {
        "n_sentences": len(scores),
        "tau": config.tau,
        "retained": retained,
        "retained_fraction": retained / len(scores) if scores else 0.0,
    }
    click.echo(_dump(payload) if ctx.obj["json"] else
               f"scored {payload['n_sentences']} sentences; "
               f"{retained} pass tau={config.tau} "
               f"({100 * payload['retained_fraction']:.1f}%)")


@main.command("build-index")
@click.argument("articles", type=click.Path(exists=True, path_type=Path))
@click.option("--index", "index_dir", type=click.Path(path_type=Path), required=True)
@click.pass_context
@_handle_domain_errors
def build_index_cmd(ctx: click.Context, articles: Path, index_dir: Path):
    """Run the full pipeline and seal the bundle."""
    overrides = {}
    if ctx.obj.get("seed") is not None:
        overrides["seed"] = ctx.obj["seed"]
    config = _config_from_ctx(ctx, **overrides)
    manifest = build_bundle(articles, index_dir, config)
    payload = {"index": str(index_dir), "manifest_hash": manifest["manifest_hash"]}
    click.echo(_dump(payload) if ctx.obj["json"] else
               f"sealed bundle at {index_dir} ({manifest['manifest_hash'][:12]})")


@main.command()
@click.argument("query_text", metavar="QUERY")
@click.option("--index", "index_dir", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--k", type=int, default=None, help="Number of results (default from config).")
@click.option("--filtered", is_flag=True, default=False,
              help="Search only sentences passing the bio-inspiration threshold.")
@click.option("--tau", type=float, default=None, help="Override the filter threshold.")
@click.option("--baseline", is_flag=True, default=False,
              help="Rank with the lexical BM25 baseline instead of the full pipeline.")
@click.pass_context
@_handle_domain_errors
def query(ctx: click.Context, query_text: str, index_dir: Path, k: int | None,
          filtered: bool, tau: float | None, baseline: bool):
    """Rank corpus sentences against an engineering challenge."""
    bundle = IndexBundle.load(index_dir)
    if tau is not None:
        bundle.config.tau = tau
    if baseline:
        _run_baseline(ctx, bundle, query_text, k, filtered)
        return
    response = bundle.query(query_text, k=k, filtered=filtered)
    payload = {
        "query": query_text,
        "filtered": filtered,
        "status": response.status,
        "results": [r.to_dict() for r in response.results],
    }
    if ctx.obj["json"]:
        click.echo(json.dumps(payload, sort_keys=True))
        return
    if not response.results:
        click.echo(f"no results ({response.status})")
        return
    width = max(len(r.organism) for r in response.results)
    for r in response.results:
        click.echo(
            f"{r.rank:>3}. {r.organism:<{width}}  {r.matched_phrase.text}"
            f"  [combined={r.combined_score:+.3f} cos={r.features[0]:.3f}"
            f" ent={r.features[1]:.3f}]"
        )
        click.echo(f"     {r.sentence_text}")


def _run_baseline(ctx: click.Context, bundle: IndexBundle, query_text: str,
                  k: int | None, filtered: bool) -> None:
    from .ranking import Bm25Baseline

    scorer = Bm25Baseline(list(bundle.sentences.values()))
    allowed = bundle.filtered_sentence_ids() if filtered else None
    ranked = scorer.rank(query_text, k=k or bundle.config.default_k, allowed_ids=allowed)
    payload = {
        "query": query_text,
        "filtered": filtered,
        "method": "bm25",
        "results": [
            {"rank": i + 1, "sentence_id": sid, "score": score,
             "organism": bundle.sentences[sid].organism,
             "sentence_text": bundle.sentences[sid].text}
            for i, (sid, score) in enumerate(ranked)
        ],
    }
    if ctx.obj["json"]:
        click.echo(json.dumps(payload, sort_keys=True))
        return
    for row in payload["results"]:
        click.echo(f"{row['rank']:>3}. {row['organism']}  [bm25={row['score']:.3f}]")
        click.echo(f"     {row['sentence_text']}")


@main.command()
@click.option("--index", "index_dir", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8321, show_default=True)
@click.option("--static", "static_dir", type=click.Path(path_type=Path), default=None,
              help="Directory with the web UI build to serve.")
@click.option("--feedback", "feedback_path", type=click.Path(path_type=Path), default=None)
@_handle_domain_errors
def serve(index_dir: Path, host: str, port: int, static_dir: Path | None,
          feedback_path: Path | None):
    """Serve the query engine over HTTP."""
    from .service import serve as run_service

    run_service(index_dir, host=host, port=port, feedback_path=feedback_path,
                static_dir=static_dir)


@main.command()
@click.option("--run", "run_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--qrels", "qrels_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--k", "ks", type=int, multiple=True, default=(7, 15), show_default=True)
@click.pass_context
@_handle_domain_errors
def evaluate(ctx: click.Context, run_path: Path, qrels_path: Path, ks: tuple[int, ...]):
    """Score a run file against relevance judgments (P@k, NDCG@k)."""
    report = evaluate_run(load_run(run_path), load_qrels(qrels_path), list(ks))
    click.echo(report_to_json(report) if ctx.obj["json"] else format_report(report))


@main.command()
@click.argument("run_a", type=click.Path(exists=True, path_type=Path))
@click.argument("run_b", type=click.Path(exists=True, path_type=Path))
@click.option("--p", "persistence", type=float, default=0.9, show_default=True)
@click.option("--depth", type=int, default=15, show_default=True)
@click.pass_context
@_handle_domain_errors
def robustness(ctx: click.Context, run_a: Path, run_b: Path, persistence: float, depth: int):
    """Rank-biased overlap + shared items between two run files."""
    report = robustness_report(load_run(run_a), load_run(run_b), p=persistence, depth=depth)
    if ctx.obj["json"]:
        click.echo(_dump(report))
    else:
        click.echo(
            f"RBO(p={persistence}, depth={depth}) over {report['n_queries']} queries: "
            f"mean {report['mean_rbo']:.3f}, mean shared items {report['mean_shared']:.2f}"
        )


@main.command("verify-bundle")
@click.option("--index", "index_dir", type=click.Path(exists=True, path_type=Path), required=True)
@click.pass_context
@_handle_domain_errors
def verify_bundle_cmd(ctx: click.Context, index_dir: Path):
    """Check the bundle seal and component hashes."""
    manifest = verify_bundle(index_dir)
    payload = {"index": str(index_dir), "manifest_hash": manifest["manifest_hash"], "ok": True}
    click.echo(_dump(payload) if ctx.obj["json"] else
               f"bundle ok ({manifest['manifest_hash'][:12]})")


if __name__ == "__main__":
    main()
