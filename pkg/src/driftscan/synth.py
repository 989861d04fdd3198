"""Synthetic drift scenarios for tests and demos.

Numeric features are i.i.d. standard normal, categoricals multinomial over a
small vocabulary. The reference period is drift-free; the evaluation period
applies the configured drifts from their onset day. Scenarios with enough
numeric features dedicate the last one or two as engineered sums of raw
pairs, with matching lineage edges.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from .ingest import Dataset
from .schema import Feature, FeatureSchema

DRIFT_KINDS = ("sudden_shift", "gradual_shift", "nan_spike", "new_category")

VOCABULARY = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")
VOCAB_PROBS = (0.35, 0.25, 0.15, 0.12, 0.08, 0.05)
NEW_CATEGORY = "post_reference_value"

TIMESTAMP_COLUMN = "event_time"
REFERENCE_START = pd.Timestamp("2024-01-01")


@dataclass(frozen=True)
class DriftSpec:
    feature: str
    onset_day: int
    kind: str
    magnitude: float


@dataclass(frozen=True)
class DriftScenario:
    numeric_features: int = 12
    categorical_features: int = 8
    days: int = 60
    rows_per_day: int = 1000
    drifts: tuple = ()
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "numeric_features": self.numeric_features,
            "categorical_features": self.categorical_features,
            "days": self.days,
            "rows_per_day": self.rows_per_day,
            "drifts": [
                {
                    "feature": d.feature,
                    "onset_day": d.onset_day,
                    "kind": d.kind,
                    "magnitude": d.magnitude,
                }
                for d in self.drifts
            ],
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DriftScenario":
        drifts = tuple(
            DriftSpec(d["feature"], d["onset_day"], d["kind"], d["magnitude"])
            for d in data.get("drifts", [])
        )
        return cls(
            numeric_features=data.get("numeric_features", 12),
            categorical_features=data.get("categorical_features", 8),
            days=data.get("days", 60),
            rows_per_day=data.get("rows_per_day", 1000),
            drifts=drifts,
            seed=data.get("seed", 0),
        )


def build_schema(scenario: DriftScenario) -> FeatureSchema:
    # each engineered feature sums a distinct pair of raw numerics
    n_eng = min(2, scenario.numeric_features // 3)
    n_raw = scenario.numeric_features - n_eng
    features = [
        Feature(f"num_{i:02d}", "numeric", {"origin": "raw"}) for i in range(n_raw)
    ]
    lineage = []
    for j in range(n_eng):
        name = f"eng_{j:02d}"
        parents = (f"num_{2 * j:02d}", f"num_{2 * j + 1:02d}")
        features.append(Feature(name, "numeric", {"origin": "engineered"}))
        lineage += [(p, name) for p in parents]
    features += [
        Feature(f"cat_{i:02d}", "categorical", {"origin": "raw"})
        for i in range(scenario.categorical_features)
    ]
    return FeatureSchema(TIMESTAMP_COLUMN, tuple(features), tuple(lineage))


def _validate(scenario: DriftScenario, schema: FeatureSchema) -> None:
    if scenario.numeric_features < 0 or scenario.categorical_features < 0:
        raise ValueError("feature counts must be non-negative")
    if scenario.numeric_features + scenario.categorical_features < 1:
        raise ValueError("scenario needs at least one feature")
    if scenario.days < 1 or scenario.rows_per_day < 1:
        raise ValueError("days and rows_per_day must be positive")
    for d in scenario.drifts:
        if d.kind not in DRIFT_KINDS:
            raise ValueError(f"unknown drift kind {d.kind!r}")
        if not (0 <= d.onset_day < scenario.days):
            raise ValueError(f"onset_day {d.onset_day} outside [0, {scenario.days})")
        if d.magnitude <= 0:
            raise ValueError("drift magnitude must be > 0")
        feature = schema.feature(d.feature)
        if feature.attributes["origin"] == "engineered":
            raise ValueError(f"cannot drift engineered feature {d.feature!r}")
        if d.kind in ("sudden_shift", "gradual_shift") and feature.kind != "numeric":
            raise ValueError(f"{d.kind} requires a numeric feature, got {d.feature!r}")
        if d.kind == "new_category" and feature.kind != "categorical":
            raise ValueError(f"new_category requires a categorical feature, got {d.feature!r}")


def _make_frame(scenario, schema, rng, start: pd.Timestamp, drifts) -> pd.DataFrame:
    n = scenario.days * scenario.rows_per_day
    day_index = np.repeat(np.arange(scenario.days), scenario.rows_per_day)
    second = np.tile(
        (np.arange(scenario.rows_per_day) * 86400) // scenario.rows_per_day,
        scenario.days,
    )
    timestamps = start + pd.to_timedelta(day_index * 86400 + second, unit="s")

    columns = {TIMESTAMP_COLUMN: timestamps}
    by_feature = {d.feature: d for d in drifts}
    last_day = scenario.days - 1

    for feature in schema.features:
        if feature.attributes["origin"] == "engineered":
            continue
        drift = by_feature.get(feature.name)
        if feature.kind == "numeric":
            values = rng.standard_normal(n)
            if drift is not None and drift.kind == "sudden_shift":
                values[day_index >= drift.onset_day] += drift.magnitude
            elif drift is not None and drift.kind == "gradual_shift":
                ramp_span = max(last_day - drift.onset_day, 1)
                ramp = drift.magnitude * (day_index - drift.onset_day) / ramp_span
                values += np.where(day_index >= drift.onset_day, ramp, 0.0)
            if drift is not None and drift.kind == "nan_spike":
                hit = (day_index >= drift.onset_day) & (
                    rng.random(n) < min(drift.magnitude, 1.0)
                )
                values[hit] = np.nan
            columns[feature.name] = values
        else:
            values = rng.choice(np.array(VOCABULARY, dtype=object), size=n, p=VOCAB_PROBS)
            if drift is not None and drift.kind == "new_category":
                hit = (day_index >= drift.onset_day) & (
                    rng.random(n) < min(drift.magnitude, 1.0)
                )
                values[hit] = NEW_CATEGORY
            elif drift is not None and drift.kind == "nan_spike":
                hit = (day_index >= drift.onset_day) & (
                    rng.random(n) < min(drift.magnitude, 1.0)
                )
                values[hit] = ""
            columns[feature.name] = values

    parents = {}
    for parent, child in schema.lineage:
        parents.setdefault(child, []).append(parent)
    for feature in schema.features:
        if feature.attributes["origin"] == "engineered":
            columns[feature.name] = sum(columns[p] for p in parents[feature.name])

    return pd.DataFrame({f: columns[f] for f in (TIMESTAMP_COLUMN, *schema.names)})


def generate(scenario: DriftScenario):
    """Generate (reference dataset, evaluation dataset, schema).

    Fully deterministic for a fixed scenario; the evaluation period starts
    right after the reference period ends.
    """
    schema = build_schema(scenario)
    _validate(scenario, schema)
    ref_rng = np.random.default_rng([scenario.seed, 0])
    eval_rng = np.random.default_rng([scenario.seed, 1])
    eval_start = REFERENCE_START + pd.Timedelta(days=scenario.days)
    reference = _make_frame(scenario, schema, ref_rng, REFERENCE_START, ())
    evaluation = _make_frame(scenario, schema, eval_rng, eval_start, scenario.drifts)
    return (
        Dataset(reference, TIMESTAMP_COLUMN),
        Dataset(evaluation, TIMESTAMP_COLUMN),
        schema,
    )
