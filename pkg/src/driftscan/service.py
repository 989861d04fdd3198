"""Read-only HTTP service and static bundle export.

Both the live endpoints and the exported bundle go through the same payload
builders and JSON encoder, so a bundle file is byte-identical to the
corresponding live response body.
"""

import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from .drift import DriftMatrix
from .histogram import build_histogram
from .ingest import Dataset, load_dataset
from .lineage import LineageGraph, related
from .profile import ReferenceProfile, load_profile
from .serialize import format_date, format_duration, read_json, to_json_bytes

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class ServeState:
    profile: ReferenceProfile
    matrix: DriftMatrix
    result_doc: dict
    lineage: LineageGraph
    dataset: Dataset

    @property
    def date_labels(self):
        return [format_date(d) for d in self.matrix.dates]


def build_state(profile_path, result_path, data_path) -> ServeState:
    profile = load_profile(profile_path)
    result_doc = read_json(result_path)
    matrix = DriftMatrix.from_dict(result_doc)
    stored_hash = result_doc.get("profile_hash")
    if stored_hash is not None and stored_hash != file_hash(profile_path):
        logger.warning(
            "result %s was computed from a different profile than %s",
            result_path,
            profile_path,
        )
    dataset = load_dataset(data_path, profile.schema)
    return ServeState(
        profile=profile,
        matrix=matrix,
        result_doc=result_doc,
        lineage=LineageGraph.from_schema(profile.schema),
        dataset=dataset,
    )


def file_hash(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class NotFound(Exception):
    pass


def meta_payload(state: ServeState) -> dict:
    return {
        "features": [
            {"name": f.name, "origin": f.attributes["origin"], "kind": f.kind}
            for f in state.matrix.schema.features
        ],
        "dates": state.date_labels,
        "thresholds": {
            "alpha": state.matrix.thresholds.alpha,
            "analysis_threshold": state.matrix.thresholds.analysis_threshold,
        },
        "granularity": format_duration(state.matrix.granularity),
    }


def matrix_payload(state: ServeState) -> dict:
    return state.result_doc


def histogram_payload(state: ServeState, feature: str, date: str) -> dict:
    if feature not in state.profile.features:
        raise NotFound(f"unknown feature {feature!r}")
    try:
        target_date = pd.Timestamp(date)
    except ValueError:
        raise NotFound(f"unparseable date {date!r}") from None
    starts = list(state.matrix.dates)
    if target_date not in starts:
        raise NotFound(f"date {date!r} not in the evaluated range")
    fp = state.profile.features[feature]
    kind = state.profile.schema.feature(feature).kind

    ts = state.dataset.timestamps.to_numpy()
    lo = np.searchsorted(ts, target_date.to_numpy(), side="left")
    hi = np.searchsorted(ts, (target_date + state.matrix.granularity).to_numpy(), side="left")
    target = build_histogram(state.dataset.df[feature].to_numpy()[lo:hi], fp.binning)

    return {
        "reference": fp.reference_histogram.to_dict(),
        "target": target.to_dict(),
        "special_label": "NaN" if kind == "numeric" else "missing+new",
        "binning": fp.binning.to_dict(),
        "labels": fp.binning.slot_labels(),
    }


def lineage_payload(state: ServeState, feature: str) -> dict:
    if feature not in state.lineage.nodes:
        raise NotFound(f"unknown feature {feature!r}")
    from .lineage import ancestors, descendants

    return {
        "ancestors": sorted(ancestors(state.lineage, feature)),
        "descendants": sorted(descendants(state.lineage, feature)),
    }


def related_payload(state: ServeState, features, common: bool) -> dict:
    for f in features:
        if f not in state.lineage.nodes:
            raise NotFound(f"unknown feature {f!r}")
    rel = related(state.lineage, features, common_only=common)
    return {
        "ancestors": sorted(rel["ancestors"]),
        "descendants": sorted(rel["descendants"]),
    }


def create_app(state: ServeState):
    from fastapi import FastAPI, HTTPException, Response
    from fastapi.middleware.cors import CORSMiddleware

    app = FastAPI(title="driftscan", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def json_response(payload) -> Response:
        return Response(content=to_json_bytes(payload), media_type="application/json")

    @app.get("/api/meta")
    def get_meta():
        return json_response(meta_payload(state))

    @app.get("/api/matrix")
    def get_matrix():
        return json_response(matrix_payload(state))

    @app.get("/api/histogram/{feature}")
    def get_histogram(feature: str, date: str):
        try:
            return json_response(histogram_payload(state, feature, date))
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    @app.get("/api/lineage/{feature}")
    def get_lineage(feature: str):
        try:
            return json_response(lineage_payload(state, feature))
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    @app.get("/api/related")
    def get_related(features: str, common: bool = False):
        names = [f for f in features.split(",") if f]
        if not names:
            raise HTTPException(status_code=404, detail="no features given")
        try:
            return json_response(related_payload(state, names, common))
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    return app


def export_bundle(state: ServeState, out_dir) -> None:
    """Write a static bundle mirroring the live API: meta, matrix, lineage
    per feature, and one histogram file per (feature, date)."""
    root = Path(out_dir) / "api"
    root.mkdir(parents=True, exist_ok=True)
    (root / "meta.json").write_bytes(to_json_bytes(meta_payload(state)))
    (root / "matrix.json").write_bytes(to_json_bytes(matrix_payload(state)))

    lineage_dir = root / "lineage"
    lineage_dir.mkdir(exist_ok=True)
    hist_dir = root / "histogram"
    hist_dir.mkdir(exist_ok=True)
    for feature in state.matrix.features:
        (lineage_dir / f"{feature}.json").write_bytes(
            to_json_bytes(lineage_payload(state, feature))
        )
        feature_dir = hist_dir / feature
        feature_dir.mkdir(exist_ok=True)
        for date in state.date_labels:
            (feature_dir / f"{date}.json").write_bytes(
                to_json_bytes(histogram_payload(state, feature, date))
            )
