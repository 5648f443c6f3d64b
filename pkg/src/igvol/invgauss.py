"""Inverse Gaussian distribution in an overflow-safe drift parametrization.

The distribution is stored as (lam, theta) with ``theta = lam / mean``
instead of (mean, lam): the mean diverges in the regimes this package cares
about (it enters as 2/|log-moneyness|), while theta stays small and finite.
theta = 0 encodes an infinite mean, i.e. the driftless first-passage (Levy)
limit, and every formula below degenerates to it smoothly.

With t = sqrt(x/lam), a = theta*t and b = 1/t, the distribution function is

    F(x) = Phi(a - b) + exp(2*theta) * Phi(-(a + b))

and the survival function is the matching two-term difference.  All
assembly here is done through scaled tails so that no intermediate quantity
overflows for any representable input.
"""

from dataclasses import dataclass
from math import exp, fabs, inf, isfinite, pi, sqrt

import numpy as np

from .errors import ConvergenceError
from .normal import (EPS, INV_SQRT_2PI, _exp_half_sq, _phis_diff, norm_cdf,
                     norm_cdf_scaled, norm_quantile)

_MAX_ITER = 100


@dataclass(frozen=True, slots=True)
class IGParams:
    """Inverse Gaussian parameters, drift form.

    lam is the shape parameter; theta = lam / mean is the drift.  theta = 0
    encodes an infinite mean.
    """

    lam: float
    theta: float

    def __post_init__(self):
        if not (isfinite(self.lam) and self.lam > 0.0):
            raise ValueError(
                f"IGParams: shape lam must be positive and finite, got {self.lam!r}")
        if not (isfinite(self.theta) and self.theta >= 0.0):
            raise ValueError(
                f"IGParams: drift theta must be >= 0 and finite, got {self.theta!r}")

    @property
    def mean(self) -> float:
        return self.lam / self.theta if self.theta > 0.0 else inf

    @classmethod
    def from_mean(cls, mu: float, lam: float = 1.0) -> "IGParams":
        if not (isfinite(mu) and mu > 0.0):
            raise ValueError(f"IGParams: mean must be positive and finite, got {mu!r}")
        return cls(lam=lam, theta=lam / mu)

    @classmethod
    def from_log_moneyness(cls, k: float) -> "IGParams":
        """Parameters (mean 2/|k|, shape 1); theta comes out as |k|/2 exactly."""
        if not isfinite(k):
            raise ValueError(f"IGParams: log-moneyness must be finite, got {k!r}")
        return cls(lam=1.0, theta=0.5 * fabs(k))


@dataclass(frozen=True, slots=True)
class GIGParams:
    """Generalized inverse Gaussian triplet used in the variance-space view.

    Only the reciprocal-of-IG member (order 1/2, a = 1/4, b = k**2) is ever
    instantiated here; no density convention is fixed beyond that.
    """

    p_order: float
    a: float
    b: float

    def __post_init__(self):
        if self.a <= 0.0 or self.b < 0.0:
            raise ValueError("GIGParams: need a > 0 and b >= 0")

    @classmethod
    def from_log_moneyness(cls, k: float) -> "GIGParams":
        return cls(p_order=0.5, a=0.25, b=k * k)


def _uw(x: float, theta: float, lam: float):
    """Tail arguments (a - b, a + b) for the two-term CDF form."""
    t = sqrt(x / lam)
    b = 1.0 / t
    a = theta * t
    return a - b, a + b


def _second_term(u: float, w: float, two_theta: float) -> float:
    """exp(2*theta) * Phi(-w), assembled without overflow.

    Falls back to the exact exponent identity 2*theta - w*w/2 = -u*u/2 when
    the direct product would hit erfc's underflow range (w >= 2*sqrt(theta)
    guarantees exp(2*theta) itself is representable whenever w <= 37).
    """
    if w <= 37.0:
        return exp(two_theta) * norm_cdf(-w)
    return _exp_half_sq(-1.0, u) * norm_cdf_scaled(-w)


def _cdf_uw(u: float, w: float, two_theta: float) -> float:
    """CDF from tail arguments: a sum of positives, accurate in both tails."""
    return norm_cdf(u) + _second_term(u, w, two_theta)


def _sf_uw(u: float, w: float, two_theta: float) -> float:
    """Survival from tail arguments, keeping full relative precision near 0."""
    if u <= 0.0:
        return norm_cdf(-u) - _second_term(u, w, two_theta)
    return _exp_half_sq(-1.0, u) * _phis_diff(u, w)


def _validate_x(x: float):
    if not x > 0.0:
        raise ValueError(f"inverse Gaussian support is x > 0, got {x!r}")


def ig_cdf(x: float, params: IGParams) -> float:
    """Distribution function F(x; lam, theta)."""
    _validate_x(x)
    u, w = _uw(x, params.theta, params.lam)
    return min(_cdf_uw(u, w, 2.0 * params.theta), 1.0)


def ig_survival(x: float, params: IGParams) -> float:
    """Survival function 1 - F, computed from the two-term form directly.

    Not computed as ``1 - ig_cdf(x)``: values near zero keep full relative
    precision, which the price-identity and quantile machinery rely on.
    """
    _validate_x(x)
    u, w = _uw(x, params.theta, params.lam)
    return max(_sf_uw(u, w, 2.0 * params.theta), 0.0)


def ig_pdf(x: float, params: IGParams) -> float:
    """Density in drift form sqrt(lam/(2 pi x^3)) * exp(-(a-b)^2/2).

    The drift-form exponent -(theta^2 x/lam - 2 theta + lam/x)/2 equals the
    classical -lam (x-mean)^2 / (2 mean^2 x) and stays finite as theta -> 0,
    where the density becomes the Levy first-passage density.
    """
    _validate_x(x)
    u, _ = _uw(x, params.theta, params.lam)
    e = _exp_half_sq(-1.0, u)
    if e == 0.0:
        return 0.0
    return sqrt(params.lam / (2.0 * pi * x)) / x * e


def ig_quantile(p: float, params: IGParams) -> float:
    """Quantile function: the x with F(x) = p, to a few ulp in x."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"ig_quantile requires 0 < p < 1, got {p!r}")
    x, _, _ = _quantile_core(p, params.theta, params.lam)
    return x


def _x_from_u(u: float, four_theta: float, lam: float) -> float:
    """Invert a - b = u (with a*b = theta) back to x, stably for either sign."""
    w = sqrt(u * u + four_theta)
    if u > 0.0:
        t = (u + w) * 2.0 / four_theta
    else:
        t = 2.0 / (w - u)
    return lam * t * t


def _quantile_core(p: float, theta: float, lam: float):
    """Solve F(x) = p; returns (x, iterations, probability residual).

    The solve runs in the transformed coordinate u = a - b, where the CDF
    becomes Phi(u) + exp(2 theta) Phi(-sqrt(u^2 + 4 theta)) with the exact
    derivative phi(u) * (1 - u/w).  In that coordinate the solution is
    always bracketed by [Phi^-1(p/2), Phi^-1(p)]:  the upper end because
    the second CDF term is positive, the lower end because that term is
    bounded by the first one.  Safeguarded Newton with bisection fallback;
    positivity of x holds by construction.
    """
    q = 1.0 - p
    if theta == 0.0:
        # driftless limit: F = 2 Phi(u) with u = -b < 0, closed form
        u = norm_quantile(0.5 * p)
        t = -1.0 / u
        x = lam * t * t
        return x, 0, fabs(2.0 * norm_cdf(u) - p)

    four_theta = 4.0 * theta
    cdf_side = p <= 0.5
    targ = p if cdf_side else q
    tol = 4.0 * EPS * targ

    z_hi = norm_quantile(p)
    z_lo = norm_quantile(0.5 * p)

    # initial guess: one or two passes of the Mills-ratio-corrected inverse
    if cdf_side:
        u = z_hi
        for _ in range(2):
            w = sqrt(u * u + four_theta)
            ratio = -u / w if u < 0.0 else 0.0
            u = norm_quantile(p / (1.0 + ratio))
    else:
        u = z_hi
        for _ in range(2):
            if u <= 0.0:
                break
            w = sqrt(u * u + four_theta)
            qa = q * w / (w - u)
            if qa >= 0.49:
                u = 0.0
                break
            u = -norm_quantile(qa)
    if not z_lo < u < z_hi:
        u = 0.5 * (z_lo + z_hi)

    lo, hi = z_lo, z_hi
    resid = inf
    iters = 0
    for iters in range(1, _MAX_ITER + 1):
        w = sqrt(u * u + four_theta)
        if cdf_side:
            g = _cdf_uw(u, w, 0.5 * four_theta) - p
        else:
            g = q - _sf_uw(u, w, 0.5 * four_theta)
        resid = fabs(g)
        if g > 0.0:
            hi = u
        elif g < 0.0:
            lo = u
        else:
            break
        if resid <= tol:
            break
        dg = INV_SQRT_2PI * _exp_half_sq(-1.0, u) * (1.0 - u / w)
        if dg > 0.0:
            u_new = u - g / dg
            if not lo < u_new < hi:
                u_new = 0.5 * (lo + hi)
        else:
            u_new = 0.5 * (lo + hi)
        if fabs(u_new - u) <= EPS * w:
            u = u_new
            break
        u = u_new
    else:
        raise ConvergenceError(
            f"ig quantile did not converge for p={p!r}, theta={theta!r}, "
            f"lam={lam!r}; residual {resid:.3e}", bracket=(lo, hi))

    return _x_from_u(u, four_theta, lam), iters, resid


def gig_quantile_variance(c: float, k: float) -> float:
    """Variance-space quantile: the v**2 with P(Z < v**2) = c, Z = 4/Y.

    Y is inverse Gaussian with mean 2/|k| and shape 1, so the value is
    exactly 4 / ig_quantile(1 - c); Z itself) is generalized inverse
    Gaussian with parameters ``GIGParams.from_log_moneyness(k)``.
    """
    if not 0.0 < c < 1.0:
        raise ValueError(f"gig_quantile_variance requires 0 < c < 1, got {c!r}")
    if k == 0.0 or not isfinite(k):
        raise ValueError(f"gig_quantile_variance requires finite k != 0, got {k!r}")
    x, _, _ = _quantile_core(1.0 - c, 0.5 * fabs(k), 1.0)
    return 4.0 / x


# ---------------------------------------------------------------------------
# Exact sampling (Michael-Schucany-Haas transformation)
# ---------------------------------------------------------------------------


def ig_sample_many(params: IGParams, n: int, rng: np.random.Generator) -> np.ndarray:
    """n exact draws via the chi-square transformation with root selection.

    The smaller root of the quadratic is computed in the conjugate form
    x1 = mean * (R - 1)/(R + 1), R = sqrt(1 + 4*lam/(mean*y)), which has no
    cancellation for any y; the uniform draw then picks x1 with probability
    mean/(mean + x1) and mean^2/x1 otherwise.
    """
    if params.theta <= 0.0:
        raise ValueError("ig_sample requires theta > 0 (finite mean)")
    if n < 1:
        raise ValueError(f"need n >= 1 draws, got {n}")
    mu = params.lam / params.theta
    y = rng.standard_normal(n)
    y *= y
    with np.errstate(divide="ignore"):
        r = np.sqrt(1.0 + (4.0 * params.theta) / y)
        x1 = np.where(np.isfinite(r), mu * (r - 1.0) / (r + 1.0), mu)
    u = rng.random(n)
    return np.where(u * (mu + x1) <= mu, x1, (mu * mu) / x1)


def ig_sample(params: IGParams, rng: np.random.Generator) -> float:
    """One exact draw; advances (and is deterministic in) the generator state."""
    return float(ig_sample_many(params, 1, rng)[0])
