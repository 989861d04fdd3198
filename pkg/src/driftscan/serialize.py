"""Canonical JSON encoding and ISO-8601 duration/date helpers.

Every artifact (profile.json, result.json, exported bundles) and every HTTP
response goes through :func:`to_json_bytes`, so identical in-memory objects
always serialize to identical bytes.
"""

import json
import re

import pandas as pd


def to_json_bytes(obj) -> bytes:
    """Serialize to compact JSON with round-trip float precision."""
    return json.dumps(obj, separators=(",", ":"), allow_nan=False).encode("utf-8")


def write_json(path, obj) -> None:
    with open(path, "wb") as fh:
        fh.write(to_json_bytes(obj))
        fh.write(b"\n")


def read_json(path):
    with open(path, "rb") as fh:
        return json.load(fh)


_ISO_DURATION = re.compile(
    r"^P(?:(?P<days>\d+)D)?"
    r"(?:T(?:(?P<hours>\d+)H)?(?:(?P<minutes>\d+)M)?(?:(?P<seconds>\d+(?:\.\d+)?)S)?)?$"
)


def parse_duration(text: str) -> pd.Timedelta:
    """Parse an ISO-8601 duration like ``P1D`` or ``PT6H`` (also accepts
    pandas offsets such as ``1D``)."""
    m = _ISO_DURATION.match(text)
    if m and text != "P":
        td = pd.Timedelta(
            days=int(m.group("days") or 0),
            hours=int(m.group("hours") or 0),
            minutes=int(m.group("minutes") or 0),
            seconds=float(m.group("seconds") or 0),
        )
    else:
        try:
            td = pd.Timedelta(text)
        except ValueError as exc:
            raise ValueError(f"cannot parse duration {text!r}") from exc
    if td <= pd.Timedelta(0):
        raise ValueError(f"duration must be positive, got {text!r}")
    return td


def format_duration(td: pd.Timedelta) -> str:
    """Minimal ISO-8601 rendering of a positive Timedelta."""
    total = td.total_seconds()
    days, rem = divmod(int(total), 86400)
    hours, rem = divmod(rem, 3600)
    minutes, seconds = divmod(rem, 60)
    frac = total - int(total)
    out = "P"
    if days:
        out += f"{days}D"
    time_part = ""
    if hours:
        time_part += f"{hours}H"
    if minutes:
        time_part += f"{minutes}M"
    if seconds or frac:
        sec = seconds + frac
        time_part += f"{sec:g}S"
    if time_part:
        out += "T" + time_part
    if out == "P":
        out = "PT0S"
    return out


def format_date(ts: pd.Timestamp) -> str:
    """Window-start label: plain date when midnight-aligned, else full ISO."""
    if ts == ts.normalize():
        return ts.strftime("%Y-%m-%d")
    return ts.isoformat()


def parse_date(text: str) -> pd.Timestamp:
    return pd.Timestamp(text)
