"""Published JSON Schemas for every API response (and exported bundle file)."""

_HISTOGRAM = {
    "type": "object",
    "required": ["mass", "special_mass", "sample_count"],
    "properties": {
        "mass": {"type": "array", "items": {"type": "number", "minimum": 0}},
        "special_mass": {"type": "number", "minimum": 0},
        "sample_count": {"type": "integer", "minimum": 0},
    },
}

_THRESHOLDS = {
    "type": "object",
    "required": ["alpha", "analysis_threshold"],
    "properties": {
        "alpha": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        "analysis_threshold": {"type": "number", "exclusiveMinimum": 0},
    },
}

_NAME_LIST = {"type": "array", "items": {"type": "string"}}

META_SCHEMA = {
    "type": "object",
    "required": ["features", "dates", "thresholds", "granularity"],
    "properties": {
        "features": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "origin", "kind"],
                "properties": {
                    "name": {"type": "string"},
                    "origin": {"enum": ["raw", "engineered"]},
                    "kind": {"enum": ["numeric", "categorical"]},
                },
            },
        },
        "dates": _NAME_LIST,
        "thresholds": _THRESHOLDS,
        "granularity": {"type": "string"},
    },
}

MATRIX_SCHEMA = {
    "type": "object",
    "required": [
        "features",
        "dates",
        "divergence",
        "raw_p",
        "norm_p",
        "alarm",
        "thresholds",
        "granularity",
        "schema",
        "orderings",
    ],
    "properties": {
        "features": _NAME_LIST,
        "dates": _NAME_LIST,
        "divergence": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number", "minimum": 0}},
        },
        "raw_p": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
            },
        },
        "norm_p": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "alarm": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "boolean"}},
        },
        "thresholds": _THRESHOLDS,
        "granularity": {"type": "string"},
        "schema": {"type": "object"},
        "orderings": {
            "type": "object",
            "required": ["original", "alphabetical", "most_alarms", "least_sum_p"],
            "additionalProperties": _NAME_LIST,
        },
    },
}

HISTOGRAM_SCHEMA = {
    "type": "object",
    "required": ["reference", "target", "special_label", "binning", "labels"],
    "properties": {
        "reference": _HISTOGRAM,
        "target": _HISTOGRAM,
        "special_label": {"enum": ["NaN", "missing+new"]},
        "binning": {"type": "object"},
        "labels": _NAME_LIST,
    },
}

LINEAGE_SCHEMA = {
    "type": "object",
    "required": ["ancestors", "descendants"],
    "properties": {"ancestors": _NAME_LIST, "descendants": _NAME_LIST},
}

RELATED_SCHEMA = LINEAGE_SCHEMA
