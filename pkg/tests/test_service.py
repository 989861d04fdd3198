import json

import jsonschema
import pytest
from fastapi.testclient import TestClient

from driftscan import api_schemas, drift, profile
from driftscan.ingest import write_dataset
from driftscan.serialize import write_json
from driftscan.service import ServeState, build_state, create_app, export_bundle
from driftscan.synth import DriftScenario, DriftSpec, generate


@pytest.fixture(scope="module")
def artifacts(tmp_path_factory):
    root = tmp_path_factory.mktemp("pipeline")
    scenario = DriftScenario(
        numeric_features=6,
        categorical_features=2,
        days=8,
        rows_per_day=150,
        seed=21,
        drifts=(DriftSpec("num_03", 4, "sudden_shift", 4.0),),
    )
    reference, evaluation, schema = generate(scenario)
    write_dataset(evaluation, root / "evaluation.csv")
    prof = profile.learn_reference(reference, schema, window_count=40)
    profile.save_profile(prof, root / "profile.json")
    matrix = drift.evaluate(evaluation, prof)
    write_json(root / "result.json", matrix.to_dict())
    return root


@pytest.fixture(scope="module")
def state(artifacts) -> ServeState:
    return build_state(
        artifacts / "profile.json", artifacts / "result.json", artifacts / "evaluation.csv"
    )


@pytest.fixture(scope="module")
def client(state):
    return TestClient(create_app(state))


def test_meta_contract(client, state):
    resp = client.get("/api/meta")
    assert resp.status_code == 200
    assert resp.headers["content-type"] == "application/json"
    doc = resp.json()
    jsonschema.validate(doc, api_schemas.META_SCHEMA)
    assert [f["name"] for f in doc["features"]] == list(state.matrix.features)
    assert len(doc["dates"]) == len(state.matrix.dates)
    assert doc["thresholds"]["alpha"] == 0.01
    assert doc["granularity"] == "P1D"


def test_matrix_contract(client, artifacts):
    resp = client.get("/api/matrix")
    assert resp.status_code == 200
    doc = resp.json()
    jsonschema.validate(doc, api_schemas.MATRIX_SCHEMA)
    on_disk = json.loads((artifacts / "result.json").read_text())
    assert doc == on_disk


def test_histogram_contract(client, state):
    date = state.date_labels[4]
    resp = client.get(f"/api/histogram/num_03?date={date}")
    assert resp.status_code == 200
    doc = resp.json()
    jsonschema.validate(doc, api_schemas.HISTOGRAM_SCHEMA)
    assert doc["special_label"] == "NaN"
    assert abs(sum(doc["target"]["mass"]) + doc["target"]["special_mass"] - 1) <= 1e-9

    cat = client.get(f"/api/histogram/cat_00?date={date}").json()
    assert cat["special_label"] == "missing+new"


def test_histogram_unknown_feature_404(client, state):
    assert client.get(f"/api/histogram/unknown?date={state.date_labels[0]}").status_code == 404


def test_histogram_unknown_date_404(client):
    assert client.get("/api/histogram/num_00?date=1999-01-01").status_code == 404


def test_lineage_contract(client):
    resp = client.get("/api/lineage/eng_00")
    assert resp.status_code == 200
    doc = resp.json()
    jsonschema.validate(doc, api_schemas.LINEAGE_SCHEMA)
    assert doc == {"ancestors": ["num_00", "num_01"], "descendants": []}
    assert client.get("/api/lineage/ghost").status_code == 404


def test_related_contract(client):
    resp = client.get("/api/related?features=eng_00,eng_01&common=true")
    assert resp.status_code == 200
    doc = resp.json()
    jsonschema.validate(doc, api_schemas.RELATED_SCHEMA)
    assert doc == {"ancestors": [], "descendants": []}

    union = client.get("/api/related?features=eng_00,eng_01&common=false").json()
    assert union["ancestors"] == ["num_00", "num_01", "num_02", "num_03"]
    assert client.get("/api/related?features=ghost").status_code == 404


def test_requests_leave_state_unchanged(client, state):
    before = state.matrix.norm_p.copy()
    for _ in range(3):
        client.get("/api/meta")
        client.get("/api/matrix")
        client.get(f"/api/histogram/num_00?date={state.date_labels[0]}")
    assert (state.matrix.norm_p == before).all()


def test_export_matches_live_responses(client, state, tmp_path):
    export_bundle(state, tmp_path)
    api = tmp_path / "api"
    assert (api / "meta.json").read_bytes() == client.get("/api/meta").content
    assert (api / "matrix.json").read_bytes() == client.get("/api/matrix").content
    for feature in state.matrix.features:
        live = client.get(f"/api/lineage/{feature}").content
        assert (api / "lineage" / f"{feature}.json").read_bytes() == live
        for date in state.date_labels:
            live = client.get(f"/api/histogram/{feature}?date={date}").content
            assert (api / "histogram" / feature / f"{date}.json").read_bytes() == live


def test_stale_profile_hash_warns(artifacts, caplog):
    import hashlib

    doc = json.loads((artifacts / "result.json").read_text())
    doc["profile_hash"] = hashlib.sha256(b"other").hexdigest()
    stale = artifacts / "stale_result.json"
    write_json(stale, doc)
    with caplog.at_level("WARNING"):
        build_state(artifacts / "profile.json", stale, artifacts / "evaluation.csv")
    assert "different profile" in caplog.text
