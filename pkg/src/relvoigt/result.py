"""Evaluation result record shared by the line-broadening functions.

The relativistic broadening function has several computational regimes with
different accuracy characteristics (closed form, small-width series, large-u
asymptotic, direct quadrature), so every evaluator returns the value together
with an error estimate and a tag naming the path actually taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["EvalResult", "METHODS"]

# the four computational regimes
METHODS = frozenset(
    {"closed_form", "degenerate_series", "large_u_asymptotic", "quadrature"}
)


@dataclass(frozen=True)
class EvalResult:
    """A real function value with an absolute error estimate and method tag."""

    value: float
    error_estimate: float
    method: str

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise DomainError(f"EvalResult value must be finite, got {self.value!r}")
        if not (math.isfinite(self.error_estimate) and self.error_estimate >= 0.0):
            raise DomainError(
                f"EvalResult error_estimate must be finite and >= 0, "
                f"got {self.error_estimate!r}"
            )
        if self.method not in METHODS:
            raise DomainError(f"unknown method tag {self.method!r}")
