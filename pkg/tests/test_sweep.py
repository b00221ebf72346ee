"""Sweep plumbing: spec validation, grids, rows, CSV/JSON stability."""

from __future__ import annotations

import io
import json
import math

import pytest

from relvoigt import DomainError, h2
from relvoigt.sweep import SweepSpec, json_payload, run_sweep, write_csv


def spec_h0(**kw):
    base = dict(
        function="h0", fixed={"a": 0.5}, axis="u",
        start=-2.0, stop=2.0, steps=5, scale="linear",
    )
    base.update(kw)
    return SweepSpec(**base)


def test_linear_grid():
    s = spec_h0()
    grid = s.grid()
    assert len(grid) == 5
    assert grid[0] == -2.0 and grid[-1] == 2.0
    assert abs(grid[1] - (-1.0)) < 1e-15


def test_log_grid():
    s = SweepSpec(
        function="h2", fixed={"u1": 1.0, "u2": 0.0}, axis="a",
        start=1e-3, stop=10.0, steps=5, scale="log",
    )
    grid = s.grid()
    assert abs(grid[0] - 1e-3) < 1e-18
    assert abs(grid[-1] - 10.0) < 1e-14
    ratios = [grid[i + 1] / grid[i] for i in range(4)]
    assert max(ratios) - min(ratios) < 1e-12


def test_spec_validation():
    with pytest.raises(DomainError):
        spec_h0(function="h9")
    with pytest.raises(DomainError):
        spec_h0(axis="q")
    with pytest.raises(DomainError):
        spec_h0(axis="a")  # axis also in fixed
    with pytest.raises(DomainError):
        spec_h0(fixed={})  # wrong complement
    with pytest.raises(DomainError):
        spec_h0(fixed={"a": 0.5, "u1": 1.0})
    with pytest.raises(DomainError):
        spec_h0(start=2.0, stop=-2.0)
    with pytest.raises(DomainError):
        spec_h0(steps=1)
    with pytest.raises(DomainError):
        spec_h0(scale="cubic")
    with pytest.raises(DomainError):
        spec_h0(start=-1.0, stop=1.0, scale="log")
    with pytest.raises(DomainError):
        spec_h0(start=float("nan"))


def test_run_sweep_values():
    rows = run_sweep(spec_h0())
    assert len(rows) == 5
    mid = rows[2]
    assert mid.axis_value == 0.0
    from relvoigt import h0

    assert mid.value == h0(0.5, 0.0)
    assert mid.error == ""
    # h0 returns a bare float, no error estimate column content
    assert mid.error_estimate is None


def test_run_sweep_eval_result_carries_estimate():
    s = SweepSpec(
        function="h2", fixed={"u1": 1.0, "u2": 0.0}, axis="a",
        start=0.5, stop=1.5, steps=3, scale="linear",
    )
    rows = run_sweep(s)
    assert rows[0].value == h2(0.5, 1.0, 0.0).value
    assert rows[0].error_estimate is not None
    assert rows[0].error_estimate >= 0.0


def test_run_sweep_marks_domain_errors_and_continues():
    s = SweepSpec(
        function="v2", fixed={"e": 1.0, "mu": 1.0, "gamma": 0.5}, axis="sigma",
        start=-0.1, stop=0.3, steps=5, scale="linear",
    )
    rows = run_sweep(s)
    assert len(rows) == 5
    assert rows[0].error == "ParameterError" and rows[0].value is None
    assert rows[1].error == "ParameterError"  # sigma == 0
    assert rows[-1].error == "" and rows[-1].value > 0.0


def test_csv_shape_and_stability():
    s = spec_h0()
    rows = run_sweep(s)
    buf1, buf2 = io.StringIO(), io.StringIO()
    write_csv(s, rows, buf1)
    write_csv(s, run_sweep(s), buf2)
    text = buf1.getvalue()
    assert text == buf2.getvalue()  # byte-stable across runs
    lines = text.split("\n")
    assert lines[0] == "u,value,error_estimate,error"
    assert len(lines) == 7 and lines[-1] == ""
    first = lines[1].split(",")
    assert first[0] == f"{-2.0:.16e}"
    assert first[2] == ""  # no estimate for bare floats
    assert first[3] == ""


def test_csv_error_rows():
    s = SweepSpec(
        function="d2", fixed={"gamma": 0.5, "mu": 1.0}, axis="sigma",
        start=-0.5, stop=0.5, steps=3, scale="linear",
    )
    buf = io.StringIO()
    write_csv(s, run_sweep(s), buf)
    lines = buf.getvalue().split("\n")
    assert lines[1] == f"{-0.5:.16e},,,ParameterError"
    assert lines[2].startswith(f"{0.0:.16e},{1.0:.16e}")


def test_json_payload_shape():
    s = spec_h0(steps=3)
    payload = json_payload(s, run_sweep(s))
    assert payload["function"] == "h0"
    assert payload["axis"] == "u"
    assert payload["fixed"] == {"a": 0.5}
    assert payload["scale"] == "linear"
    assert len(payload["rows"]) == 3
    row = payload["rows"][0]
    assert set(row) == {"u", "value", "error_estimate", "error"}
    json.dumps(payload)  # must be serializable as-is


def test_all_functions_sweepable():
    cases = {
        "h0": ({"a": 1.0}, "u"),
        "h2": ({"u1": 1.0, "u2": 0.0}, "a"),
        "i2": ({"u1": 1.0, "u2": 0.0}, "a"),
        "v0": ({"e": 1.0, "mu": 1.0, "gamma": 0.5}, "sigma"),
        "v2": ({"e": 1.0, "mu": 1.0, "gamma": 0.5}, "sigma"),
        "d0": ({"gamma": 0.5, "mu": 1.0}, "sigma"),
        "d2": ({"gamma": 0.5, "mu": 1.0}, "sigma"),
    }
    for fn, (fixed, axis) in cases.items():
        s = SweepSpec(
            function=fn, fixed=fixed, axis=axis,
            start=0.1, stop=1.0, steps=3, scale="linear",
        )
        rows = run_sweep(s)
        assert len(rows) == 3
        assert all(r.error == "" for r in rows), fn
        assert all(math.isfinite(r.value) for r in rows), fn
