"""Feature schema: names, kinds, attributes, and declared lineage edges."""

from dataclasses import dataclass, field

from .serialize import read_json

KINDS = ("numeric", "categorical")
ORIGINS = ("raw", "engineered")


@dataclass(frozen=True)
class Feature:
    name: str
    kind: str
    attributes: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FeatureSchema:
    timestamp_column: str
    features: tuple
    lineage: tuple = ()

    def __post_init__(self):
        names = [f.name for f in self.features]
        if any(not n for n in names):
            raise ValueError("feature names must be non-empty")
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate feature names: {dupes}")
        if not self.timestamp_column:
            raise ValueError("timestamp_column must be non-empty")
        for f in self.features:
            if f.kind not in KINDS:
                raise ValueError(f"feature {f.name!r}: unknown kind {f.kind!r}")
            origin = f.attributes.get("origin")
            if origin not in ORIGINS:
                raise ValueError(
                    f"feature {f.name!r}: attribute 'origin' must be one of {ORIGINS}"
                )
        known = set(names)
        for parent, child in self.lineage:
            for endpoint in (parent, child):
                if endpoint not in known:
                    raise ValueError(f"lineage references unknown feature {endpoint!r}")

    @property
    def names(self):
        return tuple(f.name for f in self.features)

    def feature(self, name: str) -> Feature:
        for f in self.features:
            if f.name == name:
                return f
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "timestamp_column": self.timestamp_column,
            "features": [
                {"name": f.name, "kind": f.kind, "attributes": dict(f.attributes)}
                for f in self.features
            ],
            "lineage": [list(edge) for edge in self.lineage],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FeatureSchema":
        features = tuple(
            Feature(f["name"], f["kind"], dict(f.get("attributes", {})))
            for f in data["features"]
        )
        lineage = tuple((p, c) for p, c in data.get("lineage", []))
        return cls(data["timestamp_column"], features, lineage)


def load_schema(path) -> FeatureSchema:
    return FeatureSchema.from_dict(read_json(path))
