"""Binning and relative-frequency histograms.

Numeric features get equal-width bins over the reference min-max plus an
underflow and an overflow guard bin; NaN values accumulate in a separate
special slot. Categorical features use the reference vocabulary (frequency
descending, ties lexicographic); missing and out-of-vocabulary values share
the special slot.
"""

from dataclasses import dataclass, field

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class BinningSpec:
    kind: str
    bin_count: int = 0
    lower: float = 0.0
    upper: float = 1.0
    vocabulary: tuple = ()

    @property
    def edges(self) -> np.ndarray:
        return np.linspace(self.lower, self.upper, self.bin_count + 1)

    @property
    def slot_count(self) -> int:
        """Number of regular slots, excluding the special slot."""
        if self.kind == "numeric":
            return self.bin_count + 2  # underflow + interior + overflow
        return len(self.vocabulary)

    def slot_labels(self) -> list:
        if self.kind == "categorical":
            return list(self.vocabulary)
        edges = self.edges
        labels = [f"< {edges[0]:g}"]
        labels += [f"[{edges[i]:g}, {edges[i + 1]:g})" for i in range(self.bin_count)]
        labels.append(f"> {edges[-1]:g}")
        return labels

    def to_dict(self) -> dict:
        if self.kind == "numeric":
            return {
                "kind": "numeric",
                "bin_count": self.bin_count,
                "lower": self.lower,
                "upper": self.upper,
            }
        return {"kind": "categorical", "vocabulary": list(self.vocabulary)}

    @classmethod
    def from_dict(cls, data: dict) -> "BinningSpec":
        if data["kind"] == "numeric":
            return cls(
                "numeric",
                bin_count=data["bin_count"],
                lower=data["lower"],
                upper=data["upper"],
            )
        return cls("categorical", vocabulary=tuple(data["vocabulary"]))


@dataclass(eq=False)
class Histogram:
    spec: BinningSpec
    mass: np.ndarray
    special_mass: float
    sample_count: int

    def to_dict(self) -> dict:
        return {
            "mass": [float(v) for v in self.mass],
            "special_mass": float(self.special_mass),
            "sample_count": int(self.sample_count),
        }

    @classmethod
    def from_dict(cls, data: dict, spec: BinningSpec) -> "Histogram":
        return cls(
            spec,
            np.asarray(data["mass"], dtype=float),
            float(data["special_mass"]),
            int(data["sample_count"]),
        )


def build_binning(values, kind: str, bin_count: int = 10) -> BinningSpec:
    """Derive a BinningSpec from a reference column."""
    if bin_count < 1:
        raise ValueError("bin_count must be >= 1")
    if len(values) == 0:
        raise ValueError("empty reference column")
    if kind == "numeric":
        arr = np.asarray(values, dtype=float)
        finite = arr[~np.isnan(arr)]
        if finite.size == 0:
            lower, upper = 0.0, 1.0
        else:
            lower, upper = float(finite.min()), float(finite.max())
            if lower == upper:
                upper = lower + 1.0  # degenerate range: one interior bin takes all
        return BinningSpec("numeric", bin_count=bin_count, lower=lower, upper=upper)
    if kind == "categorical":
        series = pd.Series(values, dtype=object)
        series = series[series.notna() & (series != "")]
        counts = series.value_counts()
        vocab = sorted(counts.index, key=lambda c: (-counts[c], c))
        return BinningSpec("categorical", vocabulary=tuple(str(v) for v in vocab))
    raise ValueError(f"unknown feature kind {kind!r}")


def bin_codes(values, spec: BinningSpec) -> np.ndarray:
    """Map raw values to slot indices; the special slot is index slot_count."""
    special = spec.slot_count
    if spec.kind == "numeric":
        arr = np.asarray(values, dtype=float)
        edges = spec.edges
        idx = np.searchsorted(edges, arr, side="right") - 1
        codes = 1 + np.clip(idx, 0, spec.bin_count - 1)  # last interior closed right
        codes[arr < spec.lower] = 0
        codes[arr > spec.upper] = spec.bin_count + 1
        codes[np.isnan(arr)] = special
        return codes.astype(np.intp)
    series = pd.Series(values, dtype=object)
    lookup = {cat: i for i, cat in enumerate(spec.vocabulary)}
    codes = series.map(lookup)
    codes[series.isna() | (series == "")] = special
    return codes.fillna(special).to_numpy(dtype=np.intp)


def histogram_from_counts(counts: np.ndarray, spec: BinningSpec) -> Histogram:
    n = int(counts.sum())
    if n == 0:
        return Histogram(spec, np.zeros(spec.slot_count), 0.0, 0)
    mass = counts[: spec.slot_count] / n
    return Histogram(spec, mass, float(counts[spec.slot_count] / n), n)


def count_codes(codes: np.ndarray, spec: BinningSpec) -> np.ndarray:
    return np.bincount(codes, minlength=spec.slot_count + 1)


def build_histogram(values, spec: BinningSpec) -> Histogram:
    """Relative-frequency histogram of a column under a fixed binning."""
    if len(values) == 0:
        return Histogram(spec, np.zeros(spec.slot_count), 0.0, 0)
    codes = bin_codes(values, spec)
    return histogram_from_counts(count_codes(codes, spec), spec)
