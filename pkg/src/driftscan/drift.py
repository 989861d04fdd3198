"""Stage-2 evaluation: divergences, empirical p-values, Holm normalization,
alarms, and the feature orderings behind the overview toolbar."""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from .histogram import Histogram, bin_codes, count_codes, histogram_from_counts
from .ingest import Dataset, window_starts
from .schema import FeatureSchema
from .serialize import format_date, format_duration, parse_duration

LN2 = float(np.log(2.0))


@dataclass(frozen=True)
class Thresholds:
    alpha: float = 0.01
    analysis_threshold: float = 0.25

    def __post_init__(self):
        if not (0.0 < self.alpha < self.analysis_threshold):
            raise ValueError(
                "thresholds must satisfy 0 < alpha < analysis_threshold, got "
                f"alpha={self.alpha}, analysis_threshold={self.analysis_threshold}"
            )


def _kl(p: np.ndarray, m: np.ndarray) -> float:
    mask = p > 0  # m > 0 wherever p > 0, since m >= p/2
    return float(np.sum(p[mask] * np.log(p[mask] / m[mask])))


def _js_vec(p: np.ndarray, q: np.ndarray) -> float:
    m = 0.5 * (p + q)
    return 0.5 * _kl(p, m) + 0.5 * _kl(q, m)


def js_divergence(h1: Histogram, h2: Histogram) -> float:
    """Jensen-Shannon divergence (natural log) over all slots including the
    special slot. Bounded by ln 2."""
    if h1.spec != h2.spec:
        raise ValueError("incompatible histograms")
    p = np.append(h1.mass, h1.special_mass)
    q = np.append(h2.mass, h2.special_mass)
    return _js_vec(p, q)


def empirical_p_value(observed: float, null_sample) -> float:
    """Tail probability of `observed` within the null sample, with add-one
    correction so the result is never zero."""
    null = np.asarray(null_sample, dtype=float)
    if null.size < 1:
        raise ValueError("null sample must be non-empty")
    if observed < 0:
        raise ValueError("observed divergence must be >= 0")
    return float((1 + np.sum(null >= observed)) / (null.size + 1))


def holm_normalize(raw_p) -> np.ndarray:
    """Holm step-down adjustment across one timestamp's features.

    Not clamped at 1: normalized values are comparable scores, not
    probabilities.
    """
    p = np.asarray(raw_p, dtype=float)
    m = p.size
    if m < 1:
        raise ValueError("need at least one p-value")
    order = np.argsort(p, kind="stable")
    factors = m - np.arange(m)
    adjusted = np.maximum.accumulate(p[order] * factors)
    out = np.empty(m)
    out[order] = adjusted
    return out


@dataclass(eq=False)
class DriftMatrix:
    features: tuple
    dates: tuple
    divergence: np.ndarray  # shape (features, dates)
    raw_p: np.ndarray
    norm_p: np.ndarray
    alarm: np.ndarray
    thresholds: Thresholds
    granularity: pd.Timedelta
    schema: FeatureSchema

    def feature_index(self, name: str) -> int:
        try:
            return self.features.index(name)
        except ValueError:
            raise KeyError(name) from None

    def to_dict(self) -> dict:
        return {
            "features": list(self.features),
            "dates": [format_date(d) for d in self.dates],
            "divergence": [[float(v) for v in row] for row in self.divergence],
            "raw_p": [[float(v) for v in row] for row in self.raw_p],
            "norm_p": [[float(v) for v in row] for row in self.norm_p],
            "alarm": [[bool(v) for v in row] for row in self.alarm],
            "thresholds": {
                "alpha": self.thresholds.alpha,
                "analysis_threshold": self.thresholds.analysis_threshold,
            },
            "granularity": format_duration(self.granularity),
            "schema": self.schema.to_dict(),
            # precomputed toolbar orderings so the UI never sorts on its own
            "orderings": {mode: sort_features(self, mode) for mode in SORT_MODES},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DriftMatrix":
        return cls(
            features=tuple(data["features"]),
            dates=tuple(pd.Timestamp(d) for d in data["dates"]),
            divergence=np.asarray(data["divergence"], dtype=float),
            raw_p=np.asarray(data["raw_p"], dtype=float),
            norm_p=np.asarray(data["norm_p"], dtype=float),
            alarm=np.asarray(data["alarm"], dtype=bool),
            thresholds=Thresholds(
                data["thresholds"]["alpha"], data["thresholds"]["analysis_threshold"]
            ),
            granularity=parse_duration(data["granularity"]),
            schema=FeatureSchema.from_dict(data["schema"]),
        )


def evaluate(dataset: Dataset, profile, granularity=None, thresholds=None) -> DriftMatrix:
    """Compare each feature's windowed histogram against its reference and
    derive p-values, normalized p-values, and alarms."""
    thresholds = thresholds or Thresholds()
    granularity = granularity if granularity is not None else profile.window_length
    schema = profile.schema
    missing = [n for n in schema.names if n not in dataset.df.columns]
    if missing:
        raise ValueError(f"dataset missing features: {', '.join(missing)}")
    if len(dataset.df) == 0:
        raise ValueError("empty dataset")

    ts = dataset.timestamps.to_numpy()
    starts = window_starts(dataset, granularity)
    step = granularity.to_numpy()
    bounds_left = np.searchsorted(ts, np.array([s.to_numpy() for s in starts]), side="left")
    bounds_right = np.searchsorted(
        ts, np.array([s.to_numpy() + step for s in starts]), side="left"
    )

    names = schema.names
    n_feat, n_win = len(names), len(starts)
    divergence = np.zeros((n_feat, n_win))
    raw_p = np.ones((n_feat, n_win))

    for i, name in enumerate(names):
        fp = profile.features[name]
        codes = bin_codes(dataset.df[name].to_numpy(), fp.binning)
        ref = np.append(fp.reference_histogram.mass, fp.reference_histogram.special_mass)
        for t in range(n_win):
            lo, hi = bounds_left[t], bounds_right[t]
            if hi <= lo:
                continue  # empty window: divergence 0, raw_p 1
            counts = count_codes(codes[lo:hi], fp.binning)
            hist = histogram_from_counts(counts, fp.binning)
            obs = np.append(hist.mass, hist.special_mass)
            divergence[i, t] = _js_vec(obs, ref)
            raw_p[i, t] = empirical_p_value(divergence[i, t], fp.null_sample)

    norm_p = np.empty_like(raw_p)
    for t in range(n_win):
        norm_p[:, t] = holm_normalize(raw_p[:, t])
    alarm = norm_p < thresholds.alpha

    return DriftMatrix(
        features=tuple(names),
        dates=tuple(starts),
        divergence=divergence,
        raw_p=raw_p,
        norm_p=norm_p,
        alarm=alarm,
        thresholds=thresholds,
        granularity=granularity,
        schema=schema,
    )


SORT_MODES = ("original", "alphabetical", "most_alarms", "least_sum_p")


def sort_features(matrix: DriftMatrix, mode: str) -> list:
    """Feature ordering for the overview heatmap."""
    names = list(matrix.features)
    if mode == "original":
        return names
    if mode == "alphabetical":
        return sorted(names)
    sum_p = matrix.norm_p.sum(axis=1)
    if mode == "most_alarms":
        alarms = matrix.alarm.sum(axis=1)
        order = sorted(range(len(names)), key=lambda i: (-alarms[i], sum_p[i], i))
        return [names[i] for i in order]
    if mode == "least_sum_p":
        order = sorted(range(len(names)), key=lambda i: (sum_p[i], i))
        return [names[i] for i in order]
    raise ValueError(f"unknown sort mode {mode!r}")


def group_features(ordering, schema: FeatureSchema, attribute: str):
    """Stable partition of an ordering by a feature attribute."""
    groups = {}
    for name in ordering:
        feature = schema.feature(name)
        if attribute not in feature.attributes:
            raise ValueError(f"feature {name!r} has no attribute {attribute!r}")
        groups.setdefault(feature.attributes[attribute], []).append(name)
    return list(groups.items())


@dataclass(frozen=True)
class CellColor:
    kind: str  # "light_gray" | "black" | "gradient"
    gradient: float = 0.0  # position in [0, 1], only for kind == "gradient"


def cell_color(norm_p: float, thresholds: Thresholds) -> CellColor:
    """Tripartite color assignment: gray above the analysis threshold, black
    below alpha, log-interpolated gradient in between."""
    if norm_p <= 0:
        raise ValueError("norm_p must be > 0")
    if norm_p >= thresholds.analysis_threshold:
        return CellColor("light_gray")
    if norm_p < thresholds.alpha:
        return CellColor("black")
    span = np.log10(thresholds.analysis_threshold) - np.log10(thresholds.alpha)
    g = (np.log10(thresholds.analysis_threshold) - np.log10(norm_p)) / span
    return CellColor("gradient", float(g))
