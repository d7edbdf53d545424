"""Reader for the dampwave data formats.

Re-implemented against the documented file contracts (binary + JSON
sidecar, long-format metric CSV) rather than importing the simulation
package: the files are the interface.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

FORMAT_NAME = "dampwave-field-v1"

_DTYPES = {"float64": "<f8", "complex128": "<c16"}


class SchemaError(ValueError):
    """Sidecar/binary pair does not match the documented schema."""


def read_grid(base: str | Path) -> tuple[np.ndarray, dict]:
    """Load a ``<base>.bin`` + ``<base>.json`` pair.

    Returns the array (shaped per the sidecar) and the sidecar dict.
    Raises SchemaError naming the first offending field.
    """
    base = Path(base)
    json_path = base if base.suffix == ".json" else base.with_suffix(".json")
    bin_path = json_path.with_suffix(".bin")
    if not json_path.exists():
        raise SchemaError(f"missing sidecar: {json_path}")
    if not bin_path.exists():
        raise SchemaError(f"missing payload: {bin_path}")
    try:
        meta = json.loads(json_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{json_path}: sidecar is not valid JSON ({exc})") from exc
    for field in ("format", "kind", "dtype", "shape", "axes", "order"):
        if field not in meta:
            raise SchemaError(f"{json_path}: sidecar missing field {field!r}")
    if meta["format"] != FORMAT_NAME:
        raise SchemaError(f"{json_path}: field 'format' is {meta['format']!r}, expected {FORMAT_NAME!r}")
    if meta["order"] != "C":
        raise SchemaError(f"{json_path}: field 'order' must be 'C'")
    if meta["dtype"] not in _DTYPES:
        raise SchemaError(f"{json_path}: field 'dtype' unknown: {meta['dtype']!r}")
    shape = meta["shape"]
    if not isinstance(shape, list) or not all(isinstance(n, int) and n >= 0 for n in shape):
        raise SchemaError(f"{json_path}: field 'shape' malformed: {shape!r}")
    data = np.fromfile(bin_path, dtype=_DTYPES[meta["dtype"]])
    expected = int(np.prod(shape)) if shape else 0
    if data.size != expected:
        raise SchemaError(
            f"{bin_path}: field 'shape' expects {expected} values, payload has {data.size}"
        )
    return data.reshape(shape), meta


def spacetime_axes(meta: dict) -> tuple[np.ndarray, np.ndarray]:
    """(t lattice, space lattice) of a spacetime_density sidecar."""
    if meta.get("kind") != "spacetime_density":
        raise SchemaError(f"field 'kind' is {meta.get('kind')!r}, expected 'spacetime_density'")
    t_ax, s_ax = meta["axes"]
    for field in ("start", "step", "n"):
        if field not in t_ax:
            raise SchemaError(f"time axis missing field {field!r}")
    ts = t_ax["start"] + t_ax["step"] * np.arange(t_ax["n"])
    for field in ("min", "max", "n"):
        if field not in s_ax:
            raise SchemaError(f"space axis missing field {field!r}")
    spacing = (s_ax["max"] - s_ax["min"]) / s_ax["n"]
    xs = s_ax["min"] + spacing * np.arange(s_ax["n"])
    return ts, xs


def read_metrics_csv(path: str | Path) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    """Long-format (metric, t, value) CSV -> {metric: (t, value) arrays}."""
    path = Path(path)
    series: dict[str, tuple[list, list]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"metric", "t", "value"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise SchemaError(f"{path}: missing columns {sorted(required)}")
        for row in reader:
            ts, vs = series.setdefault(row["metric"], ([], []))
            ts.append(float(row["t"]))
            vs.append(float(row["value"]))
    return {k: (np.asarray(t), np.asarray(v)) for k, (t, v) in series.items()}


def run_params(meta: dict) -> dict:
    return meta.get("params", {})
