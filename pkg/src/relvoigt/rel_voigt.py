"""Relativistic line-broadening function H2 and Voigt profile V2.

H2(a, u1, u2) = (a/pi) Int e^{-t^2} / ((u1-t)^2 (u2-t)^2 + a^2) dt is the
relativistic analogue of the classical H0: smearing the relativistic
Breit-Wigner with a Gaussian gives

    V2(E; mu, gamma, sigma) = H2(a, u1, u2) / (2 sqrt(pi) sigma^2)

in the reduced coordinates of ``profiles.reduce_rel``.  The quartic
denominator factors over four complex roots, and the integral collapses to
four Faddeeva-function terms grouped by the square roots w1, w2 of
(u1-u2)^2 +- 4ia; that closed form is the production path.

The closed form degrades in two regimes, both covered explicitly: near the
degenerate manifold u1 = u2 with small a the two pole groups cancel
catastrophically and a Laurent series in sqrt(a) takes over, while for
min(|u1|, |u2|) large a leading-order asymptotic is available as a
cross-check.  Independent routes (direct quadrature, a shifted-contour
form, and two integral representations obtained by Gaussianizing the
denominator) exist solely to verify the closed form against each other.

H2 is odd in a and exactly symmetric under u1 <-> u2 and under
(u1, u2) -> (-u1, -u2).  The pole algebra below is arranged so those
symmetries hold bitwise in floating point, not just approximately: the
radicand is built from (u1-u2)^2 and u1+u2 alone, and IEEE negation and
commutative addition do the rest.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .complex_fn import faddeeva_w
from .errors import DomainError, IntegrationError, ParameterError
from .profiles import ProfileParams, bw_nonrel, bw_rel, reduce_rel
from .quadrature import (
    QuadratureConfig,
    integrate_interval,
    integrate_real_line,
    integrate_real_line_compactified,
    integrate_semi_infinite,
)
from .result import EvalResult
from .voigt import v0

__all__ = [
    "PoleSet",
    "pole_set",
    "h2",
    "h2_quadrature",
    "h2_limit_a0",
    "h2_degenerate_series",
    "h2_large_u_asymptotic",
    "h2_rectangle",
    "h2_integral_rep",
    "i2_closed",
    "i2_quadrature",
    "v2",
    "v2_gamma0_limit",
    "d0",
    "d2",
]

_SQRT_PI = math.sqrt(math.pi)

# The closed form loses accuracy to cancellation between the two pole
# groups as w1, w2 -> 0, i.e. jointly small gap |u1-u2| and small a; the
# two-term Laurent series has relative error O(a) there and takes over.
_DEGENERATE_GAP = 1e-3
_DEGENERATE_A = 1e-3

# The four-term sum is real for real inputs; a residual imaginary part
# beyond this (relative) level means the evaluation broke down.
_REALNESS_TOL = 1e-10


def _finite(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def _check_side(side: int) -> int:
    if side not in (1, -1):
        raise DomainError(f"side must be +1 or -1, got {side!r}")
    return side


@dataclass(frozen=True)
class PoleSet:
    """Roots of the quartic (t-u1)^2 (t-u2)^2 + a^2 and their square roots.

    w1 = sqrt((u1-u2)^2 + 4ia) and w2 = sqrt((u1-u2)^2 - 4ia), principal
    branch.  t1_plus/t1_minus = (u1+u2 +- w1)/2 solve (t-u1)(t-u2) = ia;
    t2_plus/t2_minus = (u1+u2 +- w2)/2 solve (t-u1)(t-u2) = -ia.  For
    a > 0 the two roots in the upper half-plane are t1_plus and t2_minus,
    the ones an upper contour encloses.  At a = 0 the roots collapse in
    pairs onto u1 and u2, which is representable but degenerate.
    """

    w1: complex
    w2: complex
    t1_plus: complex
    t1_minus: complex
    t2_plus: complex
    t2_minus: complex


def pole_set(a: float, u1: float, u2: float) -> PoleSet:
    """Factor the H2 denominator; exact under the H2 symmetries.

    Built from (u1-u2)^2 and u1+u2 only, so swapping u1 and u2 or negating
    both reproduces every field bitwise (squaring absorbs the sign flip of
    the difference, and the sum is commutative).
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    d = u1 - u2
    dd = d * d
    s = u1 + u2
    w1 = cmath.sqrt(complex(dd, 4.0 * a))
    w2 = cmath.sqrt(complex(dd, -4.0 * a))
    return PoleSet(
        w1=w1,
        w2=w2,
        t1_plus=0.5 * (s + w1),
        t1_minus=0.5 * (s - w1),
        t2_plus=0.5 * (s + w2),
        t2_minus=0.5 * (s - w2),
    )


def _h2_closed_form(a: float, u1: float, u2: float) -> EvalResult:
    # requires a > 0 so that all four w arguments lie in the upper
    # half-plane, where the Faddeeva function is bounded
    ps = pole_set(a, u1, u2)
    g1 = (faddeeva_w(ps.t1_plus) + faddeeva_w(-ps.t1_minus)) / (2.0 * ps.w1)
    g2 = (faddeeva_w(-ps.t2_plus) + faddeeva_w(ps.t2_minus)) / (2.0 * ps.w2)
    total = g1 + g2
    value = total.real
    residual = abs(total.imag)
    if residual > _REALNESS_TOL * (1.0 + abs(value)):
        raise IntegrationError(
            f"closed form lost realness at (a, u1, u2)=({a!r}, {u1!r}, {u2!r}): "
            f"residual imaginary part {residual:.3e}"
        )
    err = residual + 1e-13 * (abs(g1) + abs(g2))
    return EvalResult(value, err, "closed_form")


def h2(a: float, u1: float, u2: float) -> EvalResult:
    """Relativistic line-broadening function.

    Dispatches on the regime: exactly a = 0 returns 0 (odd-function
    convention, matching h0; the one-sided limits live in h2_limit_a0),
    a < 0 is the negated a > 0 value, the degenerate corner goes through
    the Laurent series, and everything else takes the four-term closed
    form.  The method field of the result records the path.
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    if a == 0.0:
        return EvalResult(0.0, 0.0, "closed_form")
    if a < 0.0:
        r = h2(-a, u1, u2)
        return EvalResult(-r.value, r.error_estimate, r.method)
    if abs(u1 - u2) < _DEGENERATE_GAP and a < _DEGENERATE_A:
        return h2_degenerate_series(a, 0.5 * (u1 + u2))
    return _h2_closed_form(a, u1, u2)


def _peak_seeds(a: float, u1: float, u2: float) -> list[float]:
    # the integrand has Lorentzian-like peaks at u1 and u2 of half-width
    # |a|/|u1-u2| (or |a|^{1/2} when the peaks merge); seed the panel
    # edges geometrically out from each peak so adaptive refinement never
    # has to discover a spike much narrower than its panel
    aa = abs(a)
    width = aa / max(abs(u1 - u2), math.sqrt(aa))
    seeds = [u1, u2]
    if width < 0.5:
        for u in (u1, u2):
            w = width
            while w < 2.0:
                seeds.append(u - w)
                seeds.append(u + w)
                w *= 4.0
    return seeds


def h2_quadrature(
    a: float, u1: float, u2: float, config: QuadratureConfig | None = None
) -> EvalResult:
    """H2 by direct adaptive quadrature of the defining integral.

    The independent oracle for the closed form.  Works for either sign of
    a (the integrand is odd in a), but not at a = 0 where the integral is
    identically zero by convention rather than value.
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    if a == 0.0:
        raise DomainError("direct quadrature requires a != 0")

    pref = a / math.pi

    def f(t: np.ndarray) -> np.ndarray:
        p = (u1 - t) * (u2 - t)
        return pref * np.exp(-t * t) / (p * p + a * a)

    r = integrate_real_line(f, config, seeds=_peak_seeds(a, u1, u2))
    if not r.converged:
        raise IntegrationError(
            f"quadrature did not converge at (a, u1, u2)=({a!r}, {u1!r}, {u2!r}); "
            f"error estimate {r.error_estimate:.3e}"
        )
    return EvalResult(float(r.value), r.error_estimate, "quadrature")


def h2_limit_a0(u1: float, u2: float, side: int) -> float:
    """One-sided limit of H2 as a -> 0: +-(e^{-u1^2} + e^{-u2^2})/|u1-u2|."""
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    side = _check_side(side)
    if u1 == u2:
        raise DomainError("limit divergent on degenerate manifold")
    return side * (math.exp(-u1 * u1) + math.exp(-u2 * u2)) / abs(u1 - u2)


def h2_degenerate_series(a: float, u: float) -> EvalResult:
    """Two-term Laurent series of H2 on the degenerate manifold u1 = u2 = u.

    H2(a, u, u) = e^{-u^2}/sqrt(2a) + e^{-u^2} (2u^2 - 1) sqrt(a/2) + O(a),
    valid for small a > 0; the error estimate is the next-order scale
    e^{-u^2} a.
    """
    a = _finite("a", a)
    u = _finite("u", u)
    if a <= 0.0:
        raise DomainError(f"series requires a > 0, got {a!r}")
    g = math.exp(-u * u)
    value = g / math.sqrt(2.0 * a) + g * (2.0 * u * u - 1.0) * math.sqrt(0.5 * a)
    return EvalResult(value, g * a, "degenerate_series")


def h2_large_u_asymptotic(
    a: float, u1: float, u2: float, threshold: float = 15.0
) -> EvalResult:
    """Leading-order H2 for both |u1| and |u2| large: a/(sqrt(pi)(u1^2 u2^2 + a^2)).

    The next-order relative error comes from the Gaussian moments of the
    expanded quartic and is dominated by (3/2)(1/u1 + 1/u2)^2; the error
    estimate reports that scale.
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    threshold = _finite("threshold", threshold)
    if a == 0.0:
        raise DomainError("asymptotic form requires a != 0")
    m = min(abs(u1), abs(u2))
    if m < threshold:
        raise DomainError(
            f"asymptotic regime not reached: min(|u1|, |u2|)={m!r} below "
            f"threshold {threshold!r}"
        )
    value = a / (_SQRT_PI * (u1 * u1 * u2 * u2 + a * a))
    rel_next = 1.5 * (1.0 / abs(u1) + 1.0 / abs(u2)) ** 2
    return EvalResult(value, abs(value) * rel_next, "large_u_asymptotic")


def h2_rectangle(
    a: float,
    u1: float,
    u2: float,
    offset: float | None = None,
    config: QuadratureConfig | None = None,
) -> EvalResult:
    """H2 from a contour shifted off the real axis plus two residue terms.

    Deforming the defining integral upward across the enclosed poles gives

        H2 = (a/pi) Int_L e^{-t^2}/((t-u1)^2 (t-u2)^2 + a^2) dt
             + e^{-t1_plus^2}/w1 + e^{-t2_minus^2}/w2

    with L the horizontal line Im t = offset.  The offset must clear both
    enclosed poles; by default it sits 1 above the higher one, keeping the
    e^{offset^2} growth of the Gaussian factor on L modest.  A diagnostic
    route: as a -> 0 the line term vanishes and the residues alone
    reproduce the limit values.
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    if a <= 0.0:
        raise DomainError(f"contour form requires a > 0, got {a!r}")
    ps = pole_set(a, u1, u2)
    im_max = max(ps.t1_plus.imag, ps.t2_minus.imag)
    if offset is None:
        offset = 1.0 + im_max
    else:
        offset = _finite("offset", offset)
    if offset <= im_max:
        raise DomainError("contour must enclose both poles")
    cfg = config if config is not None else QuadratureConfig(abs_tol=1e-9, rel_tol=1e-9)

    shift = 1j * offset

    def f(x: np.ndarray) -> np.ndarray:
        t = x + shift
        p = (t - u1) * (t - u2)
        return np.exp(-t * t) / (p * p + a * a)

    line = integrate_real_line(
        f, cfg, seeds=[ps.t1_plus.real, ps.t1_minus.real]
    )
    if not line.converged:
        raise IntegrationError(
            f"contour quadrature did not converge at offset {offset!r}; "
            f"error estimate {line.error_estimate:.3e}"
        )
    residues = (
        cmath.exp(-ps.t1_plus * ps.t1_plus) / ps.w1
        + cmath.exp(-ps.t2_minus * ps.t2_minus) / ps.w2
    )
    total = (a / math.pi) * line.value + residues
    err = (a / math.pi) * line.error_estimate + abs(total.imag)
    return EvalResult(total.real, err, "quadrature")


def _rep_double(a, u1, u2, cfg: QuadratureConfig) -> EvalResult:
    # H2 = (1/pi) Int dt e^{-t^2} Int_0^inf e^{-ax} cos(x (t-u1)(t-u2)) dx,
    # evaluated by honest nested quadrature.  The inner integral of an
    # exponentially damped cosine is a geometric sum over whole periods,
    # which the semi-infinite integrator closes analytically, so the hot
    # path is the per-abscissa Python loop, not the x integration.
    inner_cfg = QuadratureConfig(
        abs_tol=min(1e-9, cfg.abs_tol), rel_tol=1e-10, max_subdivisions=400
    )

    def inner(c: float) -> float:
        hint = None
        if abs(c) >= 0.4:
            # block on a whole number of periods with total width about 1:
            # consecutive block integrals then form an exact geometric
            # sequence whose ratio is far enough from 1 for the closure
            # test to survive quadrature noise even at high frequency
            period = 2.0 * math.pi / abs(c)
            hint = period * max(1.0, round(1.0 / period))

        def g(x: np.ndarray) -> np.ndarray:
            return np.exp(-a * x) * np.cos(c * x)

        r = integrate_semi_infinite(g, inner_cfg, period_hint=hint)
        if not r.converged:
            raise IntegrationError(
                f"inner x-quadrature did not converge at frequency {c!r}"
            )
        return float(r.value)

    # the inner integral is bounded by 1/a, so points whose Gaussian
    # envelope falls below this floor cannot move the total past the
    # tolerance; skipping them avoids the most oscillatory inner calls
    env_floor = 1e-13 * a

    def outer(t: np.ndarray) -> np.ndarray:
        env = np.exp(-t * t)
        out = np.zeros_like(env)
        for i, ti in enumerate(t):
            if env[i] >= env_floor:
                out[i] = inner((ti - u1) * (ti - u2))
        return env * out / math.pi

    r = integrate_real_line(outer, cfg, seeds=_peak_seeds(a, u1, u2))
    if not r.converged:
        raise IntegrationError(
            f"outer t-quadrature did not converge at (a, u1, u2)="
            f"({a!r}, {u1!r}, {u2!r})"
        )
    return EvalResult(float(r.value), r.error_estimate, "quadrature")


def _rep_single_complex(a, u1, u2, cfg: QuadratureConfig) -> EvalResult:
    # Collapsing the t integral of the double form through the Gaussian
    # integral Int dt e^{-(1-ix)t^2 - ixst} = sqrt(pi/(1-ix)) e^{-x^2 s^2
    # / (4(1-ix))} leaves
    #   H2 = (1/sqrt(pi)) Re Int_0^inf
    #            e^{-ax + (ix/4)(4 u1 u2 - (u1+u2)^2 x/(i+x))} / sqrt(1-ix) dx
    # with the principal branch of sqrt(1-ix).  The modulus of the
    # exponential is bounded by e^{-ax}, so truncation at x_max leaves a
    # tail below e^{-a x_max}/a; the phase oscillates at frequency about
    # |u1 u2| near 0 and (u1-u2)^2/4 asymptotically, and panel edges are
    # pre-seeded on that scale so no oscillation hides inside one panel.
    s = u1 + u2
    p = u1 * u2
    x_max = max(50.0 / a, 200.0)

    def f(x: np.ndarray) -> np.ndarray:
        z = -a * x + 0.25j * x * (4.0 * p - s * s * x / (1j + x))
        val = np.exp(z) / np.sqrt(1.0 - 1j * x)
        return val.real / _SQRT_PI

    freq = max(abs(p), 0.25 * (u1 - u2) ** 2, 1e-3)
    step = min(1.0, 0.5 * math.pi / freq)
    count = min(int(x_max / step) + 2, 8000)
    breaks = np.linspace(0.0, x_max, count)

    r = integrate_interval(f, 0.0, x_max, cfg, breakpoints=breaks)
    if not r.converged:
        raise IntegrationError(
            f"x-quadrature did not converge at (a, u1, u2)=({a!r}, {u1!r}, {u2!r})"
        )
    tail = math.exp(-a * x_max) / a
    return EvalResult(float(r.value), r.error_estimate + tail, "quadrature")


def h2_integral_rep(
    a: float,
    u1: float,
    u2: float,
    variant: str,
    config: QuadratureConfig | None = None,
) -> EvalResult:
    """H2 through one of two independent integral representations.

    variant "double" is the nested Gaussian-times-damped-cosine form;
    variant "single_complex" is its analytically collapsed single
    oscillatory integral.  Both are verification routes with looser
    accuracy than the closed form and both require a > 0.
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    if a <= 0.0:
        raise DomainError(f"integral representations require a > 0, got {a!r}")
    cfg = config if config is not None else QuadratureConfig(abs_tol=1e-8, rel_tol=1e-8)
    if variant == "double":
        return _rep_double(a, u1, u2, cfg)
    if variant == "single_complex":
        return _rep_single_complex(a, u1, u2, cfg)
    raise DomainError(f"unknown variant {variant!r}, expected 'double' or 'single_complex'")


def i2_closed(a: float, u1: float, u2: float) -> float:
    """Integral of the normalized H2 denominator kernel: Re(1/w1 + 1/w2).

    I2(a, u1, u2) = (a/pi) Int dt / ((t-u1)^2 (t-u2)^2 + a^2) in closed
    form.  Odd in a; as a -> 0+ it tends to 2/|u1 - u2|, which is also the
    exact value returned at a = 0 (the two square roots collapse to
    |u1 - u2|).  At a = 0 on the degenerate manifold the kernel has a real
    double pole and no finite value exists.
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    if a == 0.0 and u1 == u2:
        raise DomainError("double pole on the real axis")
    if a < 0.0:
        return -i2_closed(-a, u1, u2)
    ps = pole_set(a, u1, u2)
    z = 1.0 / ps.w1 + 1.0 / ps.w2
    if abs(z.imag) > 1e-12:
        raise IntegrationError(
            f"closed form lost realness at (a, u1, u2)=({a!r}, {u1!r}, {u2!r}): "
            f"residual imaginary part {abs(z.imag):.3e}"
        )
    return z.real


def i2_quadrature(
    a: float, u1: float, u2: float, config: QuadratureConfig | None = None
) -> EvalResult:
    """I2 by direct quadrature of its defining integral; oracle for i2_closed.

    The integrand decays like 1/t^4, so the real line is compactified
    rather than truncated.
    """
    a = _finite("a", a)
    u1 = _finite("u1", u1)
    u2 = _finite("u2", u2)
    if a == 0.0:
        raise DomainError("direct quadrature requires a != 0")

    pref = a / math.pi

    def f(t: np.ndarray) -> np.ndarray:
        p = (u1 - t) * (u2 - t)
        return pref / (p * p + a * a)

    r = integrate_real_line_compactified(f, config, seeds=_peak_seeds(a, u1, u2))
    if not r.converged:
        raise IntegrationError(
            f"quadrature did not converge at (a, u1, u2)=({a!r}, {u1!r}, {u2!r}); "
            f"error estimate {r.error_estimate:.3e}"
        )
    return EvalResult(float(r.value), r.error_estimate, "quadrature")


def v2(e: float, params: ProfileParams) -> float:
    """Relativistic Voigt profile: Gaussian-smeared relativistic Breit-Wigner."""
    if not params.mu > 0.0:
        raise ParameterError(f"mu must be > 0, got {params.mu!r}")
    if not params.gamma > 0.0:
        raise ParameterError(f"gamma must be > 0, got {params.gamma!r}")
    rc = reduce_rel(e, params)
    sigma = params.sigma
    return h2(rc.a, rc.u1, rc.u2).value / (2.0 * _SQRT_PI * sigma * sigma)


def v2_gamma0_limit(e: float, mu: float, sigma: float, side: int) -> float:
    """One-sided limit of V2 as gamma -> 0: a two-Gaussian line pair.

    +-(1/(2 sigma mu sqrt(2 pi))) (e^{-(E-mu)^2/2 sigma^2} + e^{-(E+mu)^2/2 sigma^2}).
    """
    e = _finite("e", e)
    mu = _finite("mu", mu)
    sigma = _finite("sigma", sigma)
    side = _check_side(side)
    if mu == 0.0:
        raise DomainError("limit divergent on degenerate manifold mu = 0")
    if sigma <= 0.0:
        raise ParameterError(f"sigma must be > 0, got {sigma!r}")
    q = 0.5 / (sigma * sigma)
    pair = math.exp(-q * (e - mu) ** 2) + math.exp(-q * (e + mu) ** 2)
    return side * pair / (2.0 * sigma * mu * math.sqrt(2.0 * math.pi))


def _check_ratio_params(sigma: float, gamma: float, mu: float):
    sigma = _finite("sigma", sigma)
    gamma = _finite("gamma", gamma)
    mu = _finite("mu", mu)
    if gamma <= 0.0:
        raise ParameterError(f"gamma must be > 0, got {gamma!r}")
    if mu <= 0.0:
        raise ParameterError(f"mu must be > 0, got {mu!r}")
    if sigma < 0.0:
        raise ParameterError(f"sigma must be >= 0, got {sigma!r}")
    return sigma, gamma, mu


def d0(sigma: float, gamma: float, mu: float) -> float:
    """Peak damping of the classical profile: V0 at the peak over the bare
    Breit-Wigner there; exactly 1 at sigma = 0 and decaying from 1 as the
    Gaussian smearing widens."""
    sigma, gamma, mu = _check_ratio_params(sigma, gamma, mu)
    if sigma == 0.0:
        return 1.0
    params = ProfileParams(mu=mu, gamma=gamma, sigma=sigma)
    return v0(mu, params) / bw_nonrel(mu, params)


def d2(sigma: float, gamma: float, mu: float) -> float:
    """Peak damping of the relativistic profile, normalized like d0."""
    sigma, gamma, mu = _check_ratio_params(sigma, gamma, mu)
    if sigma == 0.0:
        return 1.0
    params = ProfileParams(mu=mu, gamma=gamma, sigma=sigma)
    return v2(mu, params) / bw_rel(mu, params)
