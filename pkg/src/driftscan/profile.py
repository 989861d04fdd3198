"""Stage-1 reference learning: binnings, reference histograms, and the
empirical null distribution of windowed divergences."""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from .histogram import (
    BinningSpec,
    Histogram,
    bin_codes,
    build_binning,
    count_codes,
    histogram_from_counts,
)
from .ingest import Dataset
from .schema import FeatureSchema
from .serialize import format_duration, parse_duration, read_json, write_json

# Dataset timestamps carry second precision; the covered span is treated as
# half-open [first, last + 1s) so a window can contain its final row.
_TICK = pd.Timedelta(seconds=1)


@dataclass(eq=False)
class FeatureProfile:
    binning: BinningSpec
    reference_histogram: Histogram
    null_sample: np.ndarray


@dataclass(eq=False)
class ReferenceProfile:
    schema: FeatureSchema
    bin_count: int
    window_length: pd.Timedelta
    window_count: int
    seed: int
    features: dict  # name -> FeatureProfile

    def to_dict(self) -> dict:
        return {
            "schema": self.schema.to_dict(),
            "window_length": format_duration(self.window_length),
            "window_count": self.window_count,
            "seed": self.seed,
            "bin_count": self.bin_count,
            "features": {
                name: {
                    "binning": fp.binning.to_dict(),
                    "reference_histogram": fp.reference_histogram.to_dict(),
                    "null_sample": [float(v) for v in fp.null_sample],
                }
                for name, fp in self.features.items()
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReferenceProfile":
        features = {}
        for name, fp in data["features"].items():
            binning = BinningSpec.from_dict(fp["binning"])
            features[name] = FeatureProfile(
                binning=binning,
                reference_histogram=Histogram.from_dict(fp["reference_histogram"], binning),
                null_sample=np.asarray(fp["null_sample"], dtype=float),
            )
        return cls(
            schema=FeatureSchema.from_dict(data["schema"]),
            bin_count=data["bin_count"],
            window_length=parse_duration(data["window_length"]),
            window_count=data["window_count"],
            seed=data["seed"],
            features=features,
        )


def save_profile(profile: ReferenceProfile, path) -> None:
    write_json(path, profile.to_dict())


def load_profile(path) -> ReferenceProfile:
    return ReferenceProfile.from_dict(read_json(path))


def sample_reference_windows(timestamps, window_length: pd.Timedelta, count: int, seed: int):
    """Draw `count` window starts uniformly at random (with replacement) from
    the reference span, sorted by start."""
    if count < 2:
        raise ValueError("window count must be >= 2")
    ts = pd.DatetimeIndex(timestamps)
    span_start = ts[0]
    span_end = ts[-1] + _TICK
    max_offset = (span_end - window_length - span_start).total_seconds()
    if max_offset < 0:
        raise ValueError("reference span too short")
    rng = np.random.default_rng(seed)
    offsets = np.sort(rng.uniform(0.0, max_offset, size=count))
    return [
        (span_start + pd.Timedelta(seconds=off), span_start + pd.Timedelta(seconds=off) + window_length)
        for off in offsets
    ]


def learn_reference(
    dataset: Dataset,
    schema: FeatureSchema,
    bin_count: int = 10,
    window_length: pd.Timedelta = pd.Timedelta(days=1),
    window_count: int = 100,
    seed: int = 42,
) -> ReferenceProfile:
    """Learn per-feature binning, reference histogram, and null divergence
    sample from a reference dataset."""
    from .drift import _js_vec  # local import: drift depends on this module

    missing = [n for n in schema.names if n not in dataset.df.columns]
    if missing:
        raise ValueError(f"dataset missing columns: {', '.join(missing)}")
    if len(dataset) == 0:
        raise ValueError("empty dataset")

    windows = sample_reference_windows(dataset.timestamps, window_length, window_count, seed)
    ts = dataset.timestamps.to_numpy()
    bounds = [
        (
            np.searchsorted(ts, start.to_numpy(), side="left"),
            np.searchsorted(ts, end.to_numpy(), side="left"),
        )
        for start, end in windows
    ]

    features = {}
    for feature in schema.features:
        column = dataset.df[feature.name].to_numpy()
        binning = build_binning(column, feature.kind, bin_count)
        codes = bin_codes(column, binning)
        reference = histogram_from_counts(count_codes(codes, binning), binning)
        ref_vec = np.append(reference.mass, reference.special_mass)
        null = np.zeros(window_count)
        for i, (lo, hi) in enumerate(bounds):
            if hi <= lo:
                continue  # empty window: no evidence of change
            hist = histogram_from_counts(count_codes(codes[lo:hi], binning), binning)
            null[i] = _js_vec(np.append(hist.mass, hist.special_mass), ref_vec)
        features[feature.name] = FeatureProfile(binning, reference, null)

    return ReferenceProfile(
        schema=schema,
        bin_count=bin_count,
        window_length=window_length,
        window_count=window_count,
        seed=seed,
        features=features,
    )
