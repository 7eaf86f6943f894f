"""JSON and CSV serialisation.

Complex numbers are written as ``[re, im]`` pairs. Floats go through
``repr``, which is the shortest string that round-trips a double exactly.
"""

import csv
import json

import numpy as np

from .validation import check_dimension, check_table


def complex_to_json(z):
    z = np.asarray(z, dtype=complex)
    if z.ndim == 0:
        return [float(z.real), float(z.imag)]
    return [complex_to_json(x) for x in z]


def complex_from_json(data):
    arr = np.asarray(data, dtype=float)
    if arr.shape[-1:] != (2,):
        raise ValueError("complex entries must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def to_jsonable(obj):
    """Recursively convert numpy scalars and arrays into plain JSON values."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return complex_to_json(obj)
        return to_jsonable(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_to_json(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def dumps(obj):
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, allow_nan=True)


def table_to_json(c):
    c = check_table(c)
    return {"d": c.shape[0], "c": complex_to_json(c)}


def table_from_json(data):
    d = check_dimension(data["d"])
    return check_table(complex_from_json(data["c"]), d=d)


def fiducial_to_json(v):
    v = np.asarray(v, dtype=complex)
    return {"d": v.shape[0], "v": complex_to_json(v)}


def fiducial_from_json(data):
    d = check_dimension(data["d"])
    v = complex_from_json(data["v"])
    if v.shape != (d,):
        raise ValueError(f"expected {d} entries in 'v', got shape {v.shape}")
    return v


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def write_json(path, obj):
    with open(path, "w") as fh:
        fh.write(dumps(obj) + "\n")


def write_report_csv(path, report):
    """Write a flat ``{name: value}`` report as a two-column CSV."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["quantity", "value"])
        for key in sorted(report):
            writer.writerow([key, repr(report[key]) if isinstance(report[key], float) else report[key]])
