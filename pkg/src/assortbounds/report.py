"""JSON analysis reports: construction, schema and (de)serialisation."""

from __future__ import annotations

import copy
import hashlib
import json

import jsonschema

from . import __version__
from .bounds import AssortativityRange
from .explorer import ExplorationReport
from .graph import EdgeCounts, Graph, MetadataAssignment

SCHEMA_VERSION = "1.0"

_COUNTS = {
    "type": "object",
    "properties": {k: {"type": "integer", "minimum": 0} for k in ("m11", "m10", "m00", "m")},
    "required": ["m11", "m10", "m00", "m"],
    "additionalProperties": False,
}

_EDGE_BOUNDS = {
    "type": "object",
    "properties": {
        k: {"type": "integer", "minimum": 0}
        for k in ("m11_lower", "m11_upper", "m10_lower", "m10_upper", "m00_lower", "m00_upper")
    },
    "required": ["m11_lower", "m11_upper", "m10_lower", "m10_upper", "m00_lower", "m00_upper"],
    "additionalProperties": False,
}

_TRIPLE = {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3}

_RANGE = {
    "type": "object",
    "properties": {
        "space": {"enum": ["mgs", "gs"]},
        "variant": {"enum": ["improved", "original"]},
        "r_lower": {"type": "number"},
        "r_upper": {"type": "number"},
        "lower_counts": _TRIPLE,
        "upper_counts": {"type": "array", "items": _TRIPLE},
        "edge_count_bounds": _EDGE_BOUNDS,
        "candidate_log": {"type": "array", "items": {"type": "object"}},
    },
    "required": ["space", "r_lower", "r_upper", "lower_counts", "upper_counts",
                 "edge_count_bounds", "candidate_log"],
    "additionalProperties": False,
}

_NUM_OR_NULL = {"type": ["number", "null"]}

_EXPLORATION = {
    "type": "object",
    "properties": {
        "space": {"enum": ["ms", "gs"]},
        "method": {"enum": ["enumeration", "permutation", "heuristic", "rewiring"]},
        "sample_count": {"type": "integer", "minimum": 0},
        "undefined_count": {"type": "integer", "minimum": 0},
        "r_min_observed": _NUM_OR_NULL,
        "r_max_observed": _NUM_OR_NULL,
        "mean_r": _NUM_OR_NULL,
        "bin_edges": {"type": "array", "items": {"type": "number"}},
        "bin_counts": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "seed": {"type": ["integer", "null"]},
        "params": {"type": "object"},
    },
    "required": ["space", "method", "sample_count", "undefined_count", "r_min_observed",
                 "r_max_observed", "mean_r", "bin_edges", "bin_counts", "seed", "params"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "assortbounds analysis report",
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "tool": {
            "type": "object",
            "properties": {"name": {"const": "assortbounds"}, "version": {"type": "string"}},
            "required": ["name", "version"],
            "additionalProperties": False,
        },
        "command": {"type": "string"},
        "input": {
            "type": "object",
            "properties": {
                "nodes": {"type": "integer", "minimum": 0},
                "edges": {"type": "integer", "minimum": 0},
                "n1": {"type": ["integer", "null"]},
                "n0": {"type": ["integer", "null"]},
                "edges_sha256": {"type": "string"},
                "labels_sha256": {"type": ["string", "null"]},
            },
            "required": ["nodes", "edges", "n1", "n0", "edges_sha256", "labels_sha256"],
            "additionalProperties": False,
        },
        "observed": {
            "type": ["object", "null"],
            "properties": {"r": {"type": "number"}, "counts": _COUNTS},
            "required": ["r", "counts"],
            "additionalProperties": False,
        },
        "bounds": {
            "type": "object",
            "properties": {"mgs": _RANGE, "gs": _RANGE},
            "additionalProperties": False,
        },
        "segregation": {
            "type": ["object", "null"],
            "properties": {
                "expected_cross": {"type": "number"},
                "observed_cross": {"type": "integer"},
                "S": {"type": "number", "minimum": 0, "maximum": 1},
            },
            "required": ["expected_cross", "observed_cross", "S"],
            "additionalProperties": False,
        },
        "normalized": {
            "type": "object",
            "properties": {"mgs": _NUM_OR_NULL, "gs": _NUM_OR_NULL},
            "additionalProperties": False,
        },
        "explorations": {"type": "array", "items": _EXPLORATION},
        "seed": {"type": ["integer", "null"]},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["schema_version", "tool", "command", "input", "observed", "bounds",
                 "segregation", "normalized", "explorations", "seed", "notes"],
    "additionalProperties": False,
}


def _lenient(schema):
    if isinstance(schema, dict):
        return {k: _lenient(v) for k, v in schema.items() if k != "additionalProperties"}
    if isinstance(schema, list):
        return [_lenient(v) for v in schema]
    return schema


def validate_report(obj: dict, strict: bool = True) -> None:
    """Raise ``jsonschema.ValidationError`` if ``obj`` does not match the schema.

    Strict mode rejects unknown fields at every level.
    """
    schema = REPORT_SCHEMA if strict else _lenient(copy.deepcopy(REPORT_SCHEMA))
    jsonschema.validate(obj, schema)


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def input_digest(g: Graph, a: MetadataAssignment | None, n1: int | None) -> dict:
    names = g.node_labels or tuple(str(i) for i in range(g.n))
    edge_text = "\n".join(sorted(" ".join(sorted((names[i], names[j]))) for i, j in g.edges))
    labels = None
    if a is not None:
        labels = _sha("\n".join(sorted(f"{names[i]}\t{a.labels[i]}" for i in range(g.n))))
        n1 = a.n1
    return {
        "nodes": g.n,
        "edges": g.m,
        "n1": n1,
        "n0": None if n1 is None else g.n - n1,
        "edges_sha256": _sha(edge_text),
        "labels_sha256": labels,
    }


def counts_dict(ec: EdgeCounts) -> dict:
    return {"m11": ec.m11, "m10": ec.m10, "m00": ec.m00, "m": ec.m}


def range_dict(span: AssortativityRange) -> dict:
    b = span.edge_bounds
    return {
        "space": span.space,
        "variant": b.variant,
        "r_lower": span.r_lower,
        "r_upper": span.r_upper,
        "lower_counts": list(span.lower_counts),
        "upper_counts": [list(c) for c in span.upper_counts],
        "edge_count_bounds": {
            "m11_lower": b.m11_lower, "m11_upper": b.m11_upper,
            "m10_lower": b.m10_lower, "m10_upper": b.m10_upper,
            "m00_lower": b.m00_lower, "m00_upper": b.m00_upper,
        },
        "candidate_log": [dict(e) for e in span.candidate_log],
    }


def new_report(command: str, g: Graph, a: MetadataAssignment | None,
               n1: int | None, seed: int | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "assortbounds", "version": __version__},
        "command": command,
        "input": input_digest(g, a, n1),
        "observed": None,
        "bounds": {},
        "segregation": None,
        "normalized": {},
        "explorations": [],
        "seed": seed,
        "notes": [],
    }


def add_exploration(report: dict, er: ExplorationReport) -> None:
    report["explorations"].append(er.to_dict())


def dumps(report: dict) -> str:
    """Stable serialisation: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def loads(text: str, strict: bool = True) -> dict:
    obj = json.loads(text)
    validate_report(obj, strict=strict)
    return obj
