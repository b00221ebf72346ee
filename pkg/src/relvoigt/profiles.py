"""Base resonance line shapes and the reductions to dimensionless coordinates.

Three densities: the nonrelativistic Breit-Wigner (a Cauchy density in E),
its relativistic counterpart with the (E^2 - mu^2)^2 denominator, and the
Gaussian smearing kernel.  The reduce_* maps take physical (E; mu, gamma,
sigma) to the dimensionless coordinates the line-broadening functions use:

    nonrelativistic:  a = gamma / (2 sqrt(2) sigma),   u = (E - mu) / (sqrt(2) sigma)
    relativistic:     a = gamma mu / (2 sigma^2),
                      u1 = (E - mu) / (sqrt(2) sigma), u2 = (E + mu) / (sqrt(2) sigma)

Positivity of mu/gamma/sigma is enforced strictly here, at the physical
layer; the reduced-coordinate functions downstream accept any real a, u
since the underlying identities treat them as free variables.  Profiles
evaluate for all real E; physical-domain filtering is the caller's business.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError

__all__ = [
    "ProfileParams",
    "ReducedCoordsNonRel",
    "ReducedCoordsRel",
    "bw_nonrel",
    "bw_rel",
    "gaussian",
    "reduce_nonrel",
    "reduce_rel",
]

_SQRT2 = math.sqrt(2.0)
_SQRT2PI = math.sqrt(2.0 * math.pi)


def _finite(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


@dataclass(frozen=True)
class ProfileParams:
    """Resonance mass mu, width gamma and Gaussian dispersion sigma.

    Finiteness is checked at construction; positivity is enforced by each
    operation for the fields it actually uses (sigma = 0 is meaningful only
    where an explicit sigma -> 0 limit is requested, e.g. the damping
    functions).
    """

    mu: float
    gamma: float
    sigma: float

    def __post_init__(self) -> None:
        for name in ("mu", "gamma", "sigma"):
            _finite(name, getattr(self, name))


@dataclass(frozen=True)
class ReducedCoordsNonRel:
    a: float
    u: float

    def __post_init__(self) -> None:
        _finite("a", self.a)
        _finite("u", self.u)


@dataclass(frozen=True)
class ReducedCoordsRel:
    a: float
    u1: float
    u2: float

    def __post_init__(self) -> None:
        _finite("a", self.a)
        _finite("u1", self.u1)
        _finite("u2", self.u2)


def _require_positive(name: str, x: float) -> float:
    if not x > 0.0:
        raise ParameterError(f"{name} must be > 0, got {x!r}")
    return x


def bw_nonrel(e: float, params: ProfileParams) -> float:
    """Nonrelativistic Breit-Wigner density (Gamma/2pi)/((E-mu)^2+(Gamma/2)^2).

    Unit-normalized Cauchy density centered at mu; maximum 2/(pi Gamma).
    """
    e = _finite("e", e)
    gamma = _require_positive("gamma", params.gamma)
    d = e - params.mu
    return (gamma / (2.0 * math.pi)) / (d * d + 0.25 * gamma * gamma)


def bw_rel(e: float, params: ProfileParams) -> float:
    """Relativistic Breit-Wigner density (mu Gamma/pi)/((E^2-mu^2)^2+(mu Gamma)^2).

    Even in E with maxima at E = +-mu where it reaches 1/(pi mu Gamma).
    """
    e = _finite("e", e)
    mu = _require_positive("mu", params.mu)
    gamma = _require_positive("gamma", params.gamma)
    q = e * e - mu * mu
    mg = mu * gamma
    return (mg / math.pi) / (q * q + mg * mg)


def gaussian(x: float, sigma: float) -> float:
    """Centered Gaussian density; callers pass x = E - E0 for a shifted peak."""
    x = _finite("x", x)
    sigma = _finite("sigma", sigma)
    _require_positive("sigma", sigma)
    z = x / sigma
    return math.exp(-0.5 * z * z) / (sigma * _SQRT2PI)


def reduce_nonrel(e: float, params: ProfileParams) -> ReducedCoordsNonRel:
    """Map (E; mu, gamma, sigma) to the classical reduced coordinates (a, u)."""
    e = _finite("e", e)
    sigma = _require_positive("sigma", params.sigma)
    return ReducedCoordsNonRel(
        a=params.gamma / (2.0 * _SQRT2 * sigma),
        u=(e - params.mu) / (_SQRT2 * sigma),
    )


def reduce_rel(e: float, params: ProfileParams) -> ReducedCoordsRel:
    """Map (E; mu, gamma, sigma) to the relativistic reduced coordinates.

    mu = 0 lands on the degenerate manifold u1 = u2; that is allowed here
    (the reduced functions know what to do with it), only sigma must be
    positive.
    """
    e = _finite("e", e)
    sigma = _require_positive("sigma", params.sigma)
    s = _SQRT2 * sigma
    return ReducedCoordsRel(
        a=params.gamma * params.mu / (2.0 * sigma * sigma),
        u1=(e - params.mu) / s,
        u2=(e + params.mu) / s,
    )
