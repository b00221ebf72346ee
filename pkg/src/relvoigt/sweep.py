"""Grid sweeps over one parameter of any public profile function.

A SweepSpec pins every parameter of the chosen function except one axis,
which ranges over a linear or logarithmic grid.  run_sweep evaluates the
function pointwise and never aborts the grid: a point that violates a
precondition produces a row carrying the error name instead of a value,
and the sweep continues.  Serializers emit CSV (fixed 17-significant-digit
scientific notation, so output is byte-stable across runs) or JSON
(shortest round-trip floats).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, TextIO

import numpy as np

from . import rel_voigt, voigt
from .errors import DomainError, RelVoigtError
from .profiles import ProfileParams
from .result import EvalResult

__all__ = ["FUNCTIONS", "SweepSpec", "SweepRow", "run_sweep", "write_csv", "json_payload"]


def _profile(p: Mapping[str, float]) -> ProfileParams:
    return ProfileParams(mu=p["mu"], gamma=p["gamma"], sigma=p["sigma"])


# name -> (ordered parameter names, evaluator over a parameter dict)
FUNCTIONS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "h0": (("a", "u"), lambda p: voigt.h0(p["a"], p["u"])),
    "h2": (("a", "u1", "u2"), lambda p: rel_voigt.h2(p["a"], p["u1"], p["u2"])),
    "v0": (("e", "mu", "gamma", "sigma"), lambda p: voigt.v0(p["e"], _profile(p))),
    "v2": (("e", "mu", "gamma", "sigma"), lambda p: rel_voigt.v2(p["e"], _profile(p))),
    "d0": (("sigma", "gamma", "mu"), lambda p: rel_voigt.d0(p["sigma"], p["gamma"], p["mu"])),
    "d2": (("sigma", "gamma", "mu"), lambda p: rel_voigt.d2(p["sigma"], p["gamma"], p["mu"])),
    "i2": (("a", "u1", "u2"), lambda p: rel_voigt.i2_closed(p["a"], p["u1"], p["u2"])),
}


@dataclass(frozen=True)
class SweepSpec:
    """One-axis grid description for a registered function.

    fixed must supply exactly the function's other parameters; the axis
    grid is linspace(start, stop, steps) or geomspace for scale='log'
    (which requires start > 0).
    """

    function: str
    fixed: dict[str, float] = field(default_factory=dict)
    axis: str = ""
    start: float = 0.0
    stop: float = 1.0
    steps: int = 2
    scale: str = "linear"

    def __post_init__(self) -> None:
        if self.function not in FUNCTIONS:
            raise DomainError(
                f"unknown function {self.function!r}, expected one of "
                f"{sorted(FUNCTIONS)}"
            )
        names = FUNCTIONS[self.function][0]
        if self.axis not in names:
            raise DomainError(
                f"axis {self.axis!r} is not a parameter of {self.function} "
                f"(parameters: {', '.join(names)})"
            )
        fixed = {str(k): float(v) for k, v in dict(self.fixed).items()}
        object.__setattr__(self, "fixed", fixed)
        if self.axis in fixed:
            raise DomainError(f"axis {self.axis!r} must not also be fixed")
        expected = set(names) - {self.axis}
        if set(fixed) != expected:
            raise DomainError(
                f"fixed parameters for {self.function} must be exactly "
                f"{sorted(expected)}, got {sorted(fixed)}"
            )
        for k, v in fixed.items():
            if not math.isfinite(v):
                raise DomainError(f"fixed parameter {k} must be finite, got {v!r}")
        for name in ("start", "stop"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)
        if not self.start < self.stop:
            raise DomainError(f"need start < stop, got [{self.start!r}, {self.stop!r}]")
        if int(self.steps) < 2:
            raise DomainError(f"steps must be >= 2, got {self.steps!r}")
        object.__setattr__(self, "steps", int(self.steps))
        if self.scale not in ("linear", "log"):
            raise DomainError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if self.scale == "log" and self.start <= 0.0:
            raise DomainError(f"log scale requires start > 0, got {self.start!r}")

    def grid(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.steps)
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepRow:
    """One grid point: value and error estimate, or an error marker.

    error is the empty string on success, otherwise the exception class
    name; value and error_estimate are None for error rows, and
    error_estimate is also None for functions that return a bare float.
    """

    axis_value: float
    value: float | None
    error_estimate: float | None
    error: str


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the spec's function over its grid, one row per point."""
    evaluate = FUNCTIONS[spec.function][1]
    rows = []
    for x in spec.grid():
        params = dict(spec.fixed)
        params[spec.axis] = float(x)
        try:
            res = evaluate(params)
        except RelVoigtError as exc:
            rows.append(SweepRow(float(x), None, None, type(exc).__name__))
            continue
        if isinstance(res, EvalResult):
            rows.append(SweepRow(float(x), res.value, res.error_estimate, ""))
        else:
            rows.append(SweepRow(float(x), float(res), None, ""))
    return rows


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.16e}"


def write_csv(spec: SweepSpec, rows: list[SweepRow], stream: TextIO) -> None:
    """Write rows as CSV with a header naming the axis column."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow([spec.axis, "value", "error_estimate", "error"])
    for r in rows:
        writer.writerow([_fmt(r.axis_value), _fmt(r.value), _fmt(r.error_estimate), r.error])


def json_payload(spec: SweepSpec, rows: list[SweepRow]) -> dict:
    """JSON-ready dict mirroring the CSV content plus the spec itself."""
    return {
        "function": spec.function,
        "axis": spec.axis,
        "fixed": {k: spec.fixed[k] for k in sorted(spec.fixed)},
        "scale": spec.scale,
        "rows": [
            {
                spec.axis: r.axis_value,
                "value": r.value,
                "error_estimate": r.error_estimate,
                "error": r.error,
            }
            for r in rows
        ],
    }
