#!/usr/bin/env python3
"""Regenerate the frontend contract-test fixtures.

Runs the sudden-drift scenario (20 features, 60 days, +4 sigma on num_05 from
day 30), exports the API bundle, and copies the subset the frontend tests
consume into frontend/tests/fixtures/. Also writes color_cases.json, the
shared fixture asserting that the UI color mapping agrees with the engine.
"""

import shutil
import tempfile
from pathlib import Path

import numpy as np

from driftscan import drift, profile
from driftscan.drift import Thresholds, cell_color
from driftscan.serialize import write_json
from driftscan.service import build_state, export_bundle, file_hash
from driftscan.synth import DriftScenario, DriftSpec, generate
from driftscan.ingest import write_dataset

DEST = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


def main():
    scenario = DriftScenario(
        seed=202, drifts=(DriftSpec("num_05", 30, "sudden_shift", 4.0),)
    )
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        reference, evaluation, schema = generate(scenario)
        write_dataset(evaluation, tmp / "evaluation.csv")
        prof = profile.learn_reference(reference, schema, window_count=3000)
        profile.save_profile(prof, tmp / "profile.json")
        matrix = drift.evaluate(evaluation, prof)
        doc = matrix.to_dict()
        doc["profile_hash"] = file_hash(tmp / "profile.json")
        write_json(tmp / "result.json", doc)
        state = build_state(tmp / "profile.json", tmp / "result.json", tmp / "evaluation.csv")
        export_bundle(state, tmp / "bundle")

        api = tmp / "bundle" / "api"
        out = DEST / "api"
        if out.exists():
            shutil.rmtree(out)
        out.mkdir(parents=True)
        shutil.copy(api / "meta.json", out / "meta.json")
        shutil.copy(api / "matrix.json", out / "matrix.json")
        shutil.copytree(api / "lineage", out / "lineage")
        (out / "histogram").mkdir()
        shutil.copytree(api / "histogram" / "num_05", out / "histogram" / "num_05")
        shutil.copytree(api / "histogram" / "eng_00", out / "histogram" / "eng_00")

    thresholds = Thresholds()
    cases = []
    for p in np.concatenate(
        [
            np.logspace(-6, 0, 40),
            [thresholds.alpha, thresholds.analysis_threshold, 0.05, 1.0, 5.0],
        ]
    ):
        c = cell_color(float(p), thresholds)
        cases.append({"norm_p": float(p), "kind": c.kind, "gradient": c.gradient})
    write_json(
        DEST / "color_cases.json",
        {
            "thresholds": {
                "alpha": thresholds.alpha,
                "analysis_threshold": thresholds.analysis_threshold,
            },
            "cases": cases,
        },
    )
    print(f"fixtures written to {DEST}")


if __name__ == "__main__":
    main()
