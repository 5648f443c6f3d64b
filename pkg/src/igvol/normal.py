"""Standard normal distribution kernels at (near) machine precision.

Everything here is scalar, pure and reentrant.  The design constraints are

* full relative accuracy of ``norm_cdf`` in both tails (erfc-based, with a
  compensated argument so the ``x/sqrt(2)`` rounding does not leak into the
  tail: that rounding alone costs ~2*(x^2/2) ulp if done naively),
* a scaled tail form ``norm_cdf_scaled`` (exp(x^2/2)*Phi(x)) so callers can
  assemble products like ``exp(huge)*Phi(very negative)`` without overflow,
* a cancellation-free difference of two scaled tails, which is the
  workhorse behind accurate survival probabilities of the drifted
  first-passage laws built on top of this module.

Non-finite inputs propagate as NaN; argument validation is the caller's job.
"""

from math import erfc, exp, fabs, inf, isnan, log, nan, sqrt

EPS = 2.220446049250313e-16
INV_SQRT2 = 0.7071067811865475244008443621048490392848
INV_SQRT_2PI = 0.3989422804014326779399460599343818684759
TWO_OVER_SQRTPI = 1.1283791670955125738961589031215451716881

# Veltkamp split of 1/sqrt(2); _C_TINY is the residual beyond double-double.
_SPLITTER = 134217729.0  # 2**27 + 1
_t = INV_SQRT2 * _SPLITTER
_C_HI = _t - (_t - INV_SQRT2)
_C_LO = INV_SQRT2 - _C_HI
_C_TINY = -4.833646656726457e-17
del _t

# erfc underflows to subnormals/zero past ~26.5; its argument there is x ~ -37.5
_PRODUCT_TAIL_SWITCH = -37.5


def norm_pdf(x: float) -> float:
    """Standard normal density."""
    return INV_SQRT_2PI * _exp_half_sq(-1.0, x)


def _z_div_sqrt2(x: float):
    """x/sqrt(2) as a hi/lo pair (Dekker product, no fma needed)."""
    p = x * INV_SQRT2
    t = x * _SPLITTER
    xh = t - (t - x)
    xl = x - xh
    e = ((xh * _C_HI - p) + xh * _C_LO + xl * _C_HI) + xl * _C_LO
    e += x * _C_TINY
    return p, e


def _erfc_xs2(x: float) -> float:
    """erfc(x/sqrt(2)) with a first-order correction for the argument rounding."""
    z, zlo = _z_div_sqrt2(x)
    e = erfc(z)
    if fabs(z) < 26.5:
        e -= zlo * TWO_OVER_SQRTPI * exp(-z * z)
    return e


def norm_cdf(x: float) -> float:
    """Standard normal CDF Phi(x).

    Relative accuracy is a few ulp across both tails down to the subnormal
    range (the absolute floor near 1e-300 is set by erfc's underflow).
    """
    return 0.5 * _erfc_xs2(-x)


def _exp_half_sq(sign: float, x: float) -> float:
    """exp(sign * x*x/2) with the squaring done in double-double.

    Without this, exp(x*x/2) carries a relative error of ~(x*x/2)*eps from
    the rounding of the argument, which at x ~ 37 is four orders of
    magnitude above 1 ulp.
    """
    p = x * x
    t = x * _SPLITTER
    xh = t - (t - x)
    xl = x - xh
    e = ((xh * xh - p) + 2.0 * xh * xl) + xl * xl
    yh = 0.5 * sign * p
    if yh > 710.0:
        return inf
    if yh < -745.0:
        return 0.0
    r = exp(yh)
    return r + r * (0.5 * sign * e)


def _mills_scaled(s: float) -> float:
    """exp(s^2/2)*Phi(-s) for large s via the Laplace continued fraction."""
    r = 0.0
    for i in range(16, 0, -1):
        r = i / (s + r)
    return INV_SQRT_2PI / (s + r)


def norm_cdf_scaled(x: float) -> float:
    """Scaled CDF exp(x*x/2) * Phi(x).

    For x <= 0 this is the scaled complementary (Mills-ratio) form and stays
    O(1/|x|); it lets tail products be assembled in scaled space without
    under- or overflow.  For x > 0 the value grows like exp(x*x/2) and
    overflows to inf past x ~ 38.
    """
    if isnan(x):
        return nan
    if x > 0.0:
        return _exp_half_sq(1.0, x) - norm_cdf_scaled(-x)
    if x < _PRODUCT_TAIL_SWITCH:
        return _mills_scaled(-x)
    return 0.5 * _exp_half_sq(1.0, x) * _erfc_xs2(-x)


def log_norm_cdf(x: float) -> float:
    """log Phi(x), tail-safe (finite for any finite x)."""
    if x > -1.0:
        return log(norm_cdf(x))
    # Phi(x) = exp(-x^2/2) * norm_cdf_scaled(x); split keeps the log exact
    p = x * x
    t = x * _SPLITTER
    xh = t - (t - x)
    xl = x - xh
    e = ((xh * xh - p) + 2.0 * xh * xl) + xl * xl
    return log(norm_cdf_scaled(x)) - 0.5 * p - 0.5 * e


_GL14_X = (
    -0.98628380869681231, -0.92843488366357352,
    -0.82720131506976502, -0.68729290481168548,
    -0.5152486363581541, -0.31911236892788974,
    -0.10805494870734367, 0.10805494870734367,
    0.31911236892788974, 0.5152486363581541,
    0.68729290481168548, 0.82720131506976502,
    0.92843488366357352, 0.98628380869681231,
)
_GL14_W = (
    0.035119460331752374, 0.080158087159760305,
    0.12151857068790296, 0.15720316715819341,
    0.18553839747793763, 0.20519846372129555,
    0.21526385346315766, 0.21526385346315766,
    0.20519846372129555, 0.18553839747793763,
    0.15720316715819341, 0.12151857068790296,
    0.080158087159760305, 0.035119460331752374,
)


def _mills_residual(s: float, nterms: int) -> float:
    """rho(s) = 1 - s*sqrt(2pi)*norm_cdf_scaled(-s), cancellation-free.

    Tail of the Laplace continued fraction for the Mills ratio: with
    m(s) = 1/(s + r1) the residual is exactly r1/(s + r1).
    """
    r = 0.0
    for i in range(nterms, 1, -1):
        r = i / (s + r)
    r1 = 1.0 / (s + r)
    return r1 / (s + r1)


def _phis_diff(u: float, w: float) -> float:
    """norm_cdf_scaled(-u) - norm_cdf_scaled(-w) for 0 <= u <= w, stably.

    The naive subtraction loses a factor ~u/(w-u) of relative precision when
    the window is narrow; that ratio is unbounded in the regimes the inverse
    Gaussian right tail visits.  Branches (each validated to a few 1e-15
    relative against a high-precision oracle):

    * ``w <= 1.5``: Taylor series around 0 (the derivative recurrence
      m[n+1] = n*m[n-1] is exact there), with w**n - u**n built by the
      cancellation-free recurrence pd[n] = w*pd[n-1] + u**(n-1)*(w-u);
    * narrow window, center <= 3: Taylor around the center, derivative
      recurrence run forward from m0 = norm_cdf_scaled(-center) (rounding
      growth is outweighed by the (h/a)**2j decay of the terms);
    * narrow window, center > 3: Gauss-Legendre integration of the Mills
      residual, whose continued-fraction form has no cancellation;
    * otherwise direct subtraction, whose cancellation is bounded because
      the two arguments then differ by at least a factor 5/3.
    """
    h = 0.5 * (w - u)
    if h <= 0.0:
        return 0.0
    a = 0.5 * (u + w)

    if w <= 1.5:
        d0 = w - u
        m_prev = 0.5  # Phi_s(0)
        m_curr = INV_SQRT_2PI
        pd = d0
        un = 1.0
        fact = 1.0
        total = m_curr * pd
        sgn = 1.0
        for n in range(2, 60):
            m_prev, m_curr = m_curr, (n - 1) * m_prev
            un *= u
            pd = w * pd + un * d0
            fact *= n
            sgn = -sgn
            term = sgn * m_curr * pd / fact
            total += term
            if fabs(term) < 1e-18 * total:
                break
        return total

    if h <= 0.25 * a:
        if a <= 3.0:
            # odd part of the Taylor series around the center
            m_nm1 = norm_cdf_scaled(-a)
            m_n = INV_SQRT_2PI - a * m_nm1
            total = m_n * h
            hpow = h
            fact = 1.0
            for n in range(2, 40):
                m_nm1, m_n = m_n, (n - 1) * m_nm1 - a * m_n
                if n & 1:
                    hpow *= h * h
                    fact *= n * (n - 1)
                    term = m_n * hpow / fact
                    total += term
                    if fabs(term) < 1e-18 * fabs(total):
                        break
            return 2.0 * total
        nterms = int(384.0 / (u * u)) + 10
        acc = 0.0
        for i in range(14):
            acc += _GL14_W[i] * _mills_residual(a + h * _GL14_X[i], nterms)
        return INV_SQRT_2PI * h * acc

    return norm_cdf_scaled(-u) - norm_cdf_scaled(-w)


# ---------------------------------------------------------------------------
# Quantile: Wichura's PPND16 rational approximations plus one Halley polish.
# ---------------------------------------------------------------------------

_A = (3.3871328727963666080, 1.3314166789178437745e2, 1.9715909503065514427e3,
      1.3731693765509461125e4, 4.5921953931549871457e4, 6.7265770927008700853e4,
      3.3430575583588128105e4, 2.5090809287301226727e3)
_B = (4.2313330701600911252e1, 6.8718700749205790830e2, 5.3941960214247511077e3,
      2.1213794301586595867e4, 3.9307895800092710610e4, 2.8729085735721942674e4,
      5.2264952788528545610e3)
_C = (1.42343711074968357734, 4.63033784615654529590, 5.76949722146069140550,
      3.64784832476320460504, 1.27045825245236838258, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4)
_D = (2.05319162663775882187, 1.67638483018380384940, 6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9)
_E = (6.65790464350110377720, 5.46378491116411436990, 1.78482653991729133580,
      2.96560571828504891230e-1, 2.65321895265761230930e-2,
      1.24266094738807843860e-3, 2.71155556874348757815e-5,
      2.01033439929228813265e-7)
_F = (5.99832206555887937690e-1, 1.36929880922735805310e-1,
      1.48753612908506148525e-2, 7.86869131145613259100e-4,
      1.84631831751005468180e-5, 1.42151175831644588870e-7,
      2.04426310338993978564e-15)


def _ppnd16(p: float) -> float:
    """Rational initial approximation to Phi^-1(p), ~1e-16 relative."""
    q = p - 0.5
    if fabs(q) <= 0.425:
        r = 0.180625 - q * q
        num = ((((((_A[7] * r + _A[6]) * r + _A[5]) * r + _A[4]) * r + _A[3])
                * r + _A[2]) * r + _A[1]) * r + _A[0]
        den = ((((((_B[6] * r + _B[5]) * r + _B[4]) * r + _B[3]) * r + _B[2])
                * r + _B[1]) * r + _B[0]) * r + 1.0
        return q * num / den
    r = p if q < 0.0 else 1.0 - p
    r = sqrt(-log(r))
    if r <= 5.0:
        r -= 1.6
        num = ((((((_C[7] * r + _C[6]) * r + _C[5]) * r + _C[4]) * r + _C[3])
                * r + _C[2]) * r + _C[1]) * r + _C[0]
        den = ((((((_D[6] * r + _D[5]) * r + _D[4]) * r + _D[3]) * r + _D[2])
                * r + _D[1]) * r + _D[0]) * r + 1.0
    else:
        r -= 5.0
        num = ((((((_E[7] * r + _E[6]) * r + _E[5]) * r + _E[4]) * r + _E[3])
                * r + _E[2]) * r + _E[1]) * r + _E[0]
        den = ((((((_F[6] * r + _F[5]) * r + _F[4]) * r + _F[3]) * r + _F[2])
                * r + _F[1]) * r + _F[0]) * r + 1.0
    x = num / den
    return -x if q < 0.0 else x


def _norm_quantile_resid(p: float):
    """(x, |Phi(x) - p|) with one Halley polish on the small-probability side."""
    x = _ppnd16(p)
    q = p if p <= 0.5 else 1.0 - p
    if q < 1e-290:
        # phi(x) underflows region; PPND16 alone is already ~1 ulp in x here
        return x, 0.0
    xs = -fabs(x)
    f = norm_cdf(xs) - q
    phi = INV_SQRT_2PI * _exp_half_sq(-1.0, xs)
    if phi > 0.0:
        d = f / phi
        step = d / (1.0 + 0.5 * xs * d)
        xs -= step
        x = xs if p <= 0.5 else -xs
        # residual after the polish, reusing the pre-step density
        f = f - step * phi
    return x, fabs(f)


def norm_quantile(p: float) -> float:
    """Inverse standard normal CDF.

    Accepts 0 < p < 1; the result round-trips through ``norm_cdf`` to within
    1e-15 absolute over [1e-300, 1 - 1e-16].
    """
    if not 0.0 < p < 1.0:
        raise ValueError(
            f"norm_quantile requires 0 < p < 1, got {p!r} "
            f"(violates the {'lower' if p <= 0 else 'upper'} bound)")
    return _norm_quantile_resid(p)[0] + 0.0
