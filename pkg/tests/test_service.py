import json

import pytest
from fastapi.testclient import TestClient

from barcode.service import create_app


@pytest.fixture(scope="module")
def client(bundle, tmp_path_factory):
    feedback = tmp_path_factory.mktemp("svc") / "feedback.jsonl"
    app = create_app(bundle, feedback_path=feedback)
    with TestClient(app) as test_client:
        test_client.feedback_path = feedback
        yield test_client


def test_health(client, bundle):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["manifest_hash"] == bundle.manifest["manifest_hash"]


def test_query_returns_ranked_results(client):
    response = client.post("/query", json={"query": "prevent sinking", "k": 15})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert 0 < len(body["results"]) <= 15
    ranks = [r["rank"] for r in body["results"]]
    assert ranks == list(range(1, len(ranks) + 1))
    assert "timing_ms" in body
    first = body["results"][0]
    assert {"sentence_id", "organism", "sentence_text", "matched_phrase",
            "features", "combined_score"} <= set(first)


def test_identical_queries_identical_payload(client):
    a = client.post("/query", json={"query": "reduce drag", "k": 10}).json()
    b = client.post("/query", json={"query": "reduce drag", "k": 10}).json()
    a.pop("timing_ms")
    b.pop("timing_ms")
    assert a == b


def test_k_clamped_to_bounds(client):
    big = client.post("/query", json={"query": "store liquid", "k": 5000})
    assert big.status_code == 200
    assert len(big.json()["results"]) <= 100
    small = client.post("/query", json={"query": "store liquid", "k": -3})
    assert small.status_code == 200


def test_empty_query_is_400(client):
    response = client.post("/query", json={"query": "   "})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "empty_query"


def test_filtered_mode(client, bundle):
    response = client.post("/query", json={"query": "sense light", "k": 10,
                                           "filtered": True})
    assert response.status_code == 200
    for result in response.json()["results"]:
        assert bundle.bio_scores[result["sentence_id"]] >= bundle.config.tau


def test_sentence_provenance(client):
    # ids contain '#', which URLs treat as a fragment: encode it
    response = client.get("/sentence/stenocara%230")
    assert response.status_code == 200
    body = response.json()
    assert body["organism"] == "Stenocara gracilipes"
    assert body["article"]["article_id"] == "stenocara"
    assert body["article"]["source_url"].startswith("https://")
    assert "bio_score" in body


def test_sentence_not_found(client):
    response = client.get("/sentence/nope#9")
    assert response.status_code == 404
    assert response.json()["error"]["code"] == "not_found"


def test_feedback_roundtrip(client):
    response = client.post("/feedback", json={
        "query": "prevent sinking", "sentence_id": "ctenophora#0",
        "rating": 2, "known": True, "note": "used in a prior project",
    })
    assert response.status_code == 200
    lines = client.feedback_path.read_text().splitlines()
    last = json.loads(lines[-1])
    assert last["rating"] == 2
    assert last["known"] is True
    assert "ts" in last


def test_feedback_rating_out_of_range_is_400(client):
    response = client.post("/feedback", json={
        "query": "q", "sentence_id": "s", "rating": 3,
    })
    assert response.status_code == 400
    assert "error" in response.json()


def test_config_endpoint(client, bundle):
    response = client.get("/config")
    assert response.status_code == 200
    assert response.json()["tau"] == bundle.config.tau


def test_no_endpoint_mutates_bundle(client, bundle):
    before = bundle.manifest["manifest_hash"]
    client.post("/query", json={"query": "reduce drag"})
    client.post("/feedback", json={"query": "q", "sentence_id": "s", "rating": 1})
    from barcode.bundle import verify_bundle

    assert verify_bundle(bundle.index_dir)["manifest_hash"] == before
