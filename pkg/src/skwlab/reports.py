"""Structured JSON reports for experiment runs.

Every runner in :mod:`skwlab.experiments` and every CLI subcommand that
produces machine-readable output funnels it through this module so that all
artifacts share one validated envelope:

* a fixed header (schema version, tool name, UTC timestamp, experiment name),
* standard descriptions of the field, algebra, and linear functional in play,
* an experiment-specific ``results`` object,
* optional wall-clock timings and the RNG seed used.

Counts that can exceed 2**53 (enveloping-algebra dimensions grow like
``p**dim * 2**dim``) are stored as decimal strings so the files survive
round-trips through JSON parsers that read numbers as IEEE doubles.  Use
:func:`big` when putting such counts into a report and :func:`unbig` when
consuming them.

Writes are atomic (temp file + ``os.replace``) so a crashed run never leaves
a half-written report behind.
"""

from __future__ import annotations

import datetime
import json
import os
import tempfile

import jsonschema

__all__ = [
    "REPORT_SCHEMA",
    "SCHEMA_VERSION",
    "big",
    "unbig",
    "describe_field",
    "describe_algebra",
    "describe_chi",
    "new_report",
    "validate_report",
    "write_report",
    "read_report",
]

SCHEMA_VERSION = "1"

# Decimal-string pattern used for potentially huge exact counts.
_BIGINT = {"type": "string", "pattern": "^-?[0-9]+$"}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "tool", "created_utc", "experiment", "results"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "tool": {"const": "skwlab"},
        "created_utc": {"type": "string"},
        "experiment": {"type": "string", "minLength": 1},
        "field": {
            "type": ["object", "null"],
            "required": ["p", "k", "q", "modulus"],
            "properties": {
                "p": {"type": "integer", "minimum": 3},
                "k": {"type": "integer", "minimum": 1},
                "q": {"type": "integer", "minimum": 3},
                "modulus": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "algebra": {
            "type": ["object", "null"],
            "required": ["family", "n", "dim_even", "dim_odd"],
            "properties": {
                "family": {"type": "string"},
                "n": {"type": "integer", "minimum": 1},
                "dim_even": {"type": "integer", "minimum": 0},
                "dim_odd": {"type": "integer", "minimum": 0},
            },
        },
        "chi": {
            "type": ["object", "null"],
            "required": ["values"],
            "properties": {
                "values": {"type": "array", "items": {"type": "integer"}},
                "even_labels": {"type": "array", "items": {"type": "string"}},
                "nonzero": {
                    "type": "object",
                    "additionalProperties": {"type": "integer"},
                },
            },
        },
        "seed": {"type": ["integer", "null"]},
        "timings_s": {
            "type": "object",
            "additionalProperties": {"type": "number", "minimum": 0},
        },
        "results": {"type": "object"},
    },
    "additionalProperties": False,
    "$defs": {"bigint": _BIGINT},
}


def big(x) -> str:
    """Render an exact integer count as a decimal string for JSON storage."""
    return str(int(x))


def unbig(s) -> int:
    """Parse a decimal-string count back to a Python int."""
    return int(s)


def describe_field(field) -> dict:
    d = field.descriptor
    return {"p": int(d.p), "k": int(d.k), "q": int(field.q), "modulus": [int(c) for c in d.modulus]}


def describe_algebra(algebra) -> dict:
    return {
        "family": algebra.family,
        "n": int(algebra.n),
        "dim_even": int(algebra.dim_even),
        "dim_odd": int(algebra.dim_odd),
    }


def describe_chi(chi) -> dict:
    g = chi.algebra
    return {
        "values": [int(v) for v in chi.values],
        "even_labels": [g.basis[i].label for i in g.even_indices],
        "nonzero": {str(k): int(v) for k, v in chi.described().items()},
    }


def _utc_now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def new_report(
    experiment: str,
    results: dict,
    *,
    field=None,
    algebra=None,
    chi=None,
    seed=None,
    timings_s: dict | None = None,
) -> dict:
    """Assemble and validate a report envelope from live objects."""
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool": "skwlab",
        "created_utc": _utc_now(),
        "experiment": experiment,
        "field": describe_field(field) if field is not None else None,
        "algebra": describe_algebra(algebra) if algebra is not None else None,
        "chi": describe_chi(chi) if chi is not None else None,
        "seed": None if seed is None else int(seed),
        "results": results,
    }
    if timings_s is not None:
        report["timings_s"] = {k: float(v) for k, v in timings_s.items()}
    validate_report(report)
    return report


def validate_report(report: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if the report violates the schema."""
    jsonschema.validate(report, REPORT_SCHEMA)


def write_report(path: str, report: dict) -> str:
    """Validate then atomically write a report; returns the final path."""
    validate_report(report)
    directory = os.path.dirname(os.path.abspath(path)) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(report, fh, indent=1, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def read_report(path: str) -> dict:
    with open(path) as fh:
        report = json.load(fh)
    validate_report(report)
    return report
