#!/usr/bin/env python3
"""End-to-end demo: generate a drifting scenario, run the pipeline, and write
all artifacts (CSVs, profile.json, result.json, static bundle) to a directory.

Afterwards you can inspect them with the service:

    driftscan serve --profile demo/profile.json --result demo/result.json \
        --input demo/evaluation.csv
"""

import argparse
from pathlib import Path

from driftscan import drift, profile
from driftscan.ingest import write_dataset
from driftscan.serialize import write_json
from driftscan.service import build_state, export_bundle, file_hash
from driftscan.synth import DriftScenario, DriftSpec, generate


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("demo"))
    parser.add_argument("--windows", type=int, default=3000)
    parser.add_argument("--seed", type=int, default=202)
    args = parser.parse_args()

    scenario = DriftScenario(
        seed=args.seed,
        drifts=(
            DriftSpec("num_05", 30, "sudden_shift", 4.0),
            DriftSpec("num_06", 30, "gradual_shift", 3.0),
            DriftSpec("num_07", 40, "nan_spike", 0.3),
            DriftSpec("cat_00", 40, "new_category", 0.3),
        ),
    )
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)

    reference, evaluation, schema = generate(scenario)
    write_dataset(reference, out / "reference.csv")
    write_dataset(evaluation, out / "evaluation.csv")
    write_json(out / "schema.json", schema.to_dict())

    prof = profile.learn_reference(reference, schema, window_count=args.windows)
    profile.save_profile(prof, out / "profile.json")

    matrix = drift.evaluate(evaluation, prof)
    doc = matrix.to_dict()
    doc["profile_hash"] = file_hash(out / "profile.json")
    write_json(out / "result.json", doc)

    state = build_state(out / "profile.json", out / "result.json", out / "evaluation.csv")
    export_bundle(state, out / "bundle")

    alarms = matrix.alarm.sum(axis=1)
    print("alarm days per feature:")
    for name, count in zip(matrix.features, alarms):
        print(f"  {name:10s} {int(count):3d}")
    print(f"artifacts written to {out}/")


if __name__ == "__main__":
    main()
