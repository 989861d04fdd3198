"""driftscan: covariate drift analysis over timestamped tabular data.

Two-stage pipeline: learn per-feature reference histograms and an empirical
null distribution of divergences from a reference dataset, then evaluate an
observation dataset over time into per-feature p-values and alarms.
"""

from .drift import (
    DriftMatrix,
    Thresholds,
    cell_color,
    empirical_p_value,
    evaluate,
    group_features,
    holm_normalize,
    js_divergence,
    sort_features,
)
from .histogram import BinningSpec, Histogram, build_binning, build_histogram
from .ingest import Dataset, load_dataset, window_iter, write_dataset
from .lineage import LineageGraph, ancestors, descendants, related
from .profile import (
    ReferenceProfile,
    learn_reference,
    load_profile,
    sample_reference_windows,
    save_profile,
)
from .schema import Feature, FeatureSchema, load_schema
from .synth import DriftScenario, DriftSpec, generate

__all__ = [
    "BinningSpec",
    "Dataset",
    "DriftMatrix",
    "DriftScenario",
    "DriftSpec",
    "Feature",
    "FeatureSchema",
    "Histogram",
    "LineageGraph",
    "ReferenceProfile",
    "Thresholds",
    "ancestors",
    "build_binning",
    "build_histogram",
    "cell_color",
    "descendants",
    "empirical_p_value",
    "evaluate",
    "generate",
    "group_features",
    "holm_normalize",
    "js_divergence",
    "learn_reference",
    "load_dataset",
    "load_profile",
    "load_schema",
    "related",
    "sample_reference_windows",
    "save_profile",
    "sort_features",
    "window_iter",
    "write_dataset",
]

__version__ = "0.1.0"
