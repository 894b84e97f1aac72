"""Canonical JSON/CSV forms for reports, clouds, and runs.

The CLI and the HTTP service both emit through these helpers, so identical
inputs and seeds produce byte-identical documents on either surface.  Nothing
time- or host-dependent may enter these payloads.
"""

from __future__ import annotations

import io
import json
import math

import numpy as np

from .experiments import (
    AlmostSureRun,
    ConcentrationReport,
    PointCloud,
    distance_histogram,
    distances_summary,
)
from .linalg import matrix_to_json


def dumps(obj) -> str:
    """Stable JSON rendering (fixed indentation, insertion key order)."""
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _finite(value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError("refusing to serialize a non-finite number")
    return value


def _flatten(matrix: np.ndarray) -> dict:
    return {
        "re": [_finite(v) for v in matrix.real.ravel()],
        "im": [_finite(v) for v in matrix.imag.ravel()],
    }


def report_to_dict(report: ConcentrationReport) -> dict:
    doc = {
        "kind": "concentration_report",
        "n": report.n,
        "alphabet_size": report.alphabet_size,
        "dim": report.dim,
        "mode": report.mode,
        "count": report.count,
        "seed": report.seed,
        "threshold": _finite(report.threshold),
        "proportion_within": _finite(report.proportion_within),
        "count_within": report.count_within,
        "count_total": report.count_total,
    }
    if report.c_constant is not None:
        doc["c_constant"] = _finite(report.c_constant)
        doc["proportion_lower_bound"] = _finite(report.proportion_lower_bound)
    doc["distance_norm"] = report.distance_norm
    doc["constant_norm"] = report.constant_norm
    doc["distances"] = distances_summary(report.distances)
    doc["histogram"] = distance_histogram(report.distances)
    doc["matrices"] = [matrix_to_json(m) for m in report.matrices]
    return doc


def cloud_to_dict(cloud: PointCloud) -> dict:
    return {
        "kind": "point_cloud",
        "n": cloud.n,
        "alphabet_size": cloud.alphabet_size,
        "dim": cloud.dim,
        "mode": cloud.mode,
        "count": cloud.count,
        "count_requested": cloud.count_requested,
        "seed": cloud.seed,
        "markers": {name: _flatten(m) for name, m in cloud.markers.items()},
        "matrices": [matrix_to_json(m) for m in cloud.matrices],
        "points": [
            {"word": word, **_flatten(product)}
            for word, product in zip(cloud.words, cloud.products)
        ],
    }


def cloud_to_csv(cloud: PointCloud) -> str:
    """Flat columns: word, then re/im per entry, labeled 1-based row_col."""
    d = cloud.dim
    buffer = io.StringIO()
    header = ["word"]
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            header += [f"re_{i}_{j}", f"im_{i}_{j}"]
    buffer.write(",".join(header) + "\n")
    for word, product in zip(cloud.words, cloud.products):
        cells = [word]
        for value in product.ravel():
            cells += [repr(_finite(value.real)), repr(_finite(value.imag))]
        buffer.write(",".join(cells) + "\n")
    return buffer.getvalue()


def run_to_dict(run: AlmostSureRun) -> dict:
    doc = {
        "kind": "almost_sure_run",
        "alphabet_size": run.alphabet_size,
        "dim": run.dim,
        "seed": run.seed,
        "n_values": list(run.n_values),
        "errors": [_finite(e) for e in run.errors],
    }
    if run.c_constant is not None:
        doc["c_constant"] = _finite(run.c_constant)
        doc["bound_curve"] = [_finite(b) for b in run.bound_curve]
    doc["bound_onset_n"] = run.bound_onset_n
    doc["distance_norm"] = run.distance_norm
    doc["constant_norm"] = run.constant_norm
    doc["matrices"] = [matrix_to_json(m) for m in run.matrices]
    return doc
