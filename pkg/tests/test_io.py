import json

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from helpers import d2_table
from whsic import io
from whsic.overlaps import check_conditions

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)
complex_tables = st.integers(2, 5).flatmap(
    lambda d: arrays(np.complex128, (d, d), elements=st.complex_numbers(allow_nan=False, allow_infinity=False))
)


@settings(max_examples=60, deadline=None)
@given(c=complex_tables)
def test_table_round_trip_exact(c):
    text = io.dumps(io.table_to_json(c))
    back = io.table_from_json(json.loads(text))
    assert np.array_equal(back, c)


@settings(max_examples=60, deadline=None)
@given(x=finite)
def test_float_repr_exact(x):
    assert json.loads(io.dumps({"x": x}))["x"] == x


def test_fiducial_round_trip(tmp_path):
    v = np.array([0.6, 0.8j])
    path = tmp_path / "v.json"
    io.write_json(path, io.fiducial_to_json(v))
    assert np.array_equal(io.fiducial_from_json(io.load_json(path)), v)


def test_sorted_keys():
    text = io.dumps(check_conditions(d2_table()).to_dict())
    keys = list(json.loads(text))
    assert keys == sorted(keys)


def test_jsonable_numpy():
    out = io.to_jsonable({"a": np.float64(1.5), "b": np.int32(2), "c": np.bool_(True), "z": 1j, "arr": np.arange(2)})
    assert out == {"a": 1.5, "b": 2, "c": True, "z": [0.0, 1.0], "arr": [0, 1]}


def test_bad_shapes():
    import pytest

    with pytest.raises(ValueError):
        io.complex_from_json([1, 2, 3])
    with pytest.raises(ValueError):
        io.fiducial_from_json({"d": 3, "v": [[1, 0], [0, 0]]})
    with pytest.raises(ValueError):
        io.table_from_json({"d": 3, "c": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]})


def test_csv(tmp_path):
    path = tmp_path / "r.csv"
    io.write_report_csv(path, {"b": 0.1, "a": True})
    lines = path.read_text().splitlines()
    assert lines == ["quantity,value", "a,True", "b,0.1"]
