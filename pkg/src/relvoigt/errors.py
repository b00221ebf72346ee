"""Exception hierarchy.

DomainError marks inputs outside an operation's mathematical domain
(non-finite values, evaluation in a regime a formula is not valid for).
ParameterError is the physical-parameter flavor (mu, gamma, sigma out of
range).  IntegrationError signals quadrature breakdown: a non-finite
integrand value or a scheme that cannot reach its tolerance.
"""

from __future__ import annotations

__all__ = ["RelVoigtError", "DomainError", "ParameterError", "IntegrationError"]


class RelVoigtError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RelVoigtError, ValueError):
    """An input lies outside the mathematical domain of the operation."""


class ParameterError(DomainError):
    """A physical profile parameter (mu, gamma, sigma) is out of range."""


class IntegrationError(RelVoigtError, RuntimeError):
    """Numerical integration failed or met a non-finite integrand value."""
