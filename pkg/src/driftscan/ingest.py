"""Dataset loading and time windowing.

Input format: UTF-8 CSV with a header row and an ISO-8601 timestamp column.
Empty string marks a missing categorical value; literal ``NaN`` or empty
marks a missing numeric value. Rows need not be pre-sorted.
"""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from .schema import FeatureSchema

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class Dataset:
    df: pd.DataFrame
    timestamp_column: str

    @property
    def timestamps(self) -> pd.Series:
        return self.df[self.timestamp_column]

    def __len__(self) -> int:
        return len(self.df)


def load_dataset(path, schema: FeatureSchema) -> Dataset:
    """Load a CSV, parse types per the schema, and sort by timestamp."""
    raw = pd.read_csv(path, dtype=str, keep_default_na=False)
    missing = [c for c in (schema.timestamp_column, *schema.names) if c not in raw.columns]
    if missing:
        raise ValueError(f"dataset missing columns: {', '.join(missing)}")

    ts = pd.to_datetime(raw[schema.timestamp_column], errors="coerce", format="mixed")
    bad = ts.isna()
    if bad.any():
        row = int(np.flatnonzero(bad.to_numpy())[0]) + 2  # 1-based, after header
        raise ValueError(
            f"unparseable timestamp at row {row}: "
            f"{raw[schema.timestamp_column].iloc[row - 2]!r}"
        )

    df = pd.DataFrame({schema.timestamp_column: ts})
    for feature in schema.features:
        col = raw[feature.name]
        if feature.kind == "numeric":
            missing = (col == "") | (col.str.lower() == "nan")
            bad = pd.to_numeric(col, errors="coerce").isna() & ~missing
            if bad.any():
                logger.warning(
                    "column %s: %d unparseable numeric value(s) set to NaN",
                    feature.name,
                    int(bad.sum()),
                )
            # astype round-trips repr output exactly, to_numeric does not
            df[feature.name] = col.mask(bad | missing, "nan").astype(float)
        else:
            df[feature.name] = col
    df = df.sort_values(schema.timestamp_column, kind="stable").reset_index(drop=True)
    return Dataset(df, schema.timestamp_column)


def write_dataset(dataset: Dataset, path) -> None:
    out = dataset.df.copy()
    out[dataset.timestamp_column] = out[dataset.timestamp_column].dt.strftime(
        "%Y-%m-%dT%H:%M:%S"
    )
    out.to_csv(path, index=False, na_rep="NaN")


def window_starts(dataset: Dataset, granularity: pd.Timedelta) -> list:
    """Consecutive window starts from the floor of the first timestamp,
    covering every row."""
    if len(dataset) == 0:
        raise ValueError("empty dataset")
    ts = dataset.timestamps
    first = ts.iloc[0].floor(granularity)
    last = ts.iloc[-1]
    starts = []
    cur = first
    while cur <= last:
        starts.append(cur)
        cur = cur + granularity
    return starts


def window_iter(dataset: Dataset, granularity: pd.Timedelta):
    """Yield (window start, row slice) over half-open windows
    [start, start + granularity); empty windows included."""
    starts = window_starts(dataset, granularity)
    ts = dataset.timestamps.to_numpy()
    step = granularity.to_numpy()
    for start in starts:
        lo = np.searchsorted(ts, start.to_numpy(), side="left")
        hi = np.searchsorted(ts, start.to_numpy() + step, side="left")
        yield start, dataset.df.iloc[lo:hi]
