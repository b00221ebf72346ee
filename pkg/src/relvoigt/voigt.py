"""Classical line-broadening function H0 and Voigt profile V0.

H0(a, u) = (a/pi) Int e^{-t^2} / ((u-t)^2 + a^2) dt is the Gaussian-weighted
Lorentzian underlying the classical Voigt profile

    V0(E; mu, gamma, sigma) = H0(a, u) / (sqrt(2 pi) sigma)

in the reduced coordinates of ``profiles.reduce_nonrel``.  For a > 0 the
integral collapses to Re w(u + ia) with w the Faddeeva function, which is
the stable closed form used here; the equivalent two-erfc-term form
(1/2)(e^{-(u+ia)^2} erfc(a-iu) + e^{-(u-ia)^2} erfc(a+iu)) is kept as a
documented identity and exercised in tests only, since it overflows naively
for large |u|.

H0 is odd in a.  At exactly a = 0 the defining integral has a zero
prefactor, so h0 returns 0 there; the one-sided limits +-e^{-u^2}, which do
not agree, are exposed separately as h0_limit_a0.
"""

from __future__ import annotations

import math

import numpy as np

from .complex_fn import scaled_wofz_term
from .errors import DomainError, IntegrationError, ParameterError
from .profiles import ProfileParams, reduce_nonrel
from .quadrature import QuadratureConfig, integrate_semi_infinite
from .result import EvalResult

__all__ = ["h0", "h0_limit_a0", "h0_laplace_rep", "v0"]

_SQRT_PI = math.sqrt(math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _finite(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def _check_side(side: int) -> int:
    if side not in (1, -1):
        raise DomainError(f"side must be +1 or -1, got {side!r}")
    return side


def h0(a: float, u: float) -> float:
    """Classical line-broadening function; Re w(u + ia) for a > 0, odd in a."""
    a = _finite("a", a)
    u = _finite("u", u)
    if a == 0.0:
        return 0.0
    if a < 0.0:
        return -h0(-a, u)
    return scaled_wofz_term(complex(u, a)).real


def h0_limit_a0(u: float, side: int) -> float:
    """One-sided limit of H0 as a -> 0 from the given side: side * e^{-u^2}."""
    u = _finite("u", u)
    side = _check_side(side)
    return side * math.exp(-u * u)


def h0_laplace_rep(
    a: float, u: float, config: QuadratureConfig | None = None
) -> EvalResult:
    """H0 via its Laplace-type representation, a diagnostic cross-route.

    H0(a, u) = Re (1/sqrt(pi)) Int_0^inf e^{-a x + i u x - x^2/4} dx,
    valid for a > 0; evaluated by semi-infinite quadrature.
    """
    a = _finite("a", a)
    u = _finite("u", u)
    if a <= 0.0:
        raise DomainError(f"representation requires a > 0, got a={a!r}")

    def f(x: np.ndarray) -> np.ndarray:
        return np.exp((-a + 1j * u) * x - 0.25 * x * x) / _SQRT_PI

    r = integrate_semi_infinite(f, config)
    if not r.converged:
        raise IntegrationError(
            f"semi-infinite quadrature did not converge at (a, u)=({a!r}, {u!r})"
        )
    return EvalResult(float(r.value.real), r.error_estimate, "quadrature")


def v0(e: float, params: ProfileParams) -> float:
    """Classical Voigt profile: Gaussian-smeared nonrelativistic Breit-Wigner."""
    if not params.gamma > 0.0:
        raise ParameterError(f"gamma must be > 0, got {params.gamma!r}")
    rc = reduce_nonrel(e, params)
    return h0(rc.a, rc.u) / (_SQRT_2PI * params.sigma)
