"""Validate norm_cdf_scaled and the stabilized scaled-tail difference vs mpmath."""
import math, random
import mpmath as mp
mp.mp.dps = 50
random.seed(99)

INV_SQRT2 = 0.7071067811865475244008443621048490392848
_t = INV_SQRT2 * 134217729.0
C_HI = _t - (_t - INV_SQRT2); C_LO = INV_SQRT2 - C_HI
C_TINY = float(mp.mpf(1)/mp.sqrt(2) - mp.mpf(C_HI) - mp.mpf(C_LO))
TWO_OVER_SQRTPI = 1.1283791670955125738961589031215451716881
INV_SQRT_2PI = 0.3989422804014326779399460599343818684759

def dd_mul_inv_sqrt2(x):
    p = x * INV_SQRT2
    t = x * 134217729.0
    xh = t - (t - x); xl = x - xh
    e = ((xh * C_HI - p) + xh * C_LO + xl * C_HI) + xl * C_LO
    e += x * C_TINY
    return p, e

def erfc_xsq2(x):
    z, zlo = dd_mul_inv_sqrt2(x)
    e = math.erfc(z)
    if abs(z) < 26.5:
        e -= zlo * TWO_OVER_SQRTPI * math.exp(-z * z)
    return e

def exp_half_sq(x, sign):
    """exp(sign * x*x/2) with Dekker-squared argument."""
    p = x * x
    t = x * 134217729.0
    xh = t - (t - x); xl = x - xh
    e = ((xh * xh - p) + 2.0 * xh * xl) + xl * xl
    yh = 0.5 * p; yl = 0.5 * e
    if sign < 0:
        yh = -yh; yl = -yl
    r = math.exp(yh)
    return r + r * yl

def cf_mills_scaled(s, depth=16):
    """Phi_s(-s) = C * m(s), Laplace CF for Mills ratio, s large."""
    r = 0.0
    for i in range(depth, 0, -1):
        r = i / (s + r)
    return INV_SQRT_2PI / (s + r)

def norm_cdf_scaled(x):
    if x > 0:
        return exp_half_sq(x, +1) - norm_cdf_scaled(-x)
    if x < -37.5:
        return cf_mills_scaled(-x)
    return 0.5 * exp_half_sq(x, +1) * erfc_xsq2(-x)

def phis_mp(x):
    x = mp.mpf(x)
    return mp.exp(x*x/2) * 0.5 * mp.erfc(-x/mp.sqrt(2))

def ulps(a, e):
    if e == 0: return 0.0
    u = math.ulp(float(e)) or 5e-324
    return float(abs(mp.mpf(a) - e) / mp.mpf(u))

w = 0; wx = None
for _ in range(4000):
    x = -random.uniform(0, 60)
    u = ulps(norm_cdf_scaled(x), phis_mp(x))
    if u > w: w, wx = u, x
print("norm_cdf_scaled worst ulp on [-60,0]:", round(w,2), "at", wx)
print("scaled(0) =", norm_cdf_scaled(0.0))
print("scaled(-40) =", norm_cdf_scaled(-40.0), " oracle 0.00996733518830131")
print("scaled(-1)  =", norm_cdf_scaled(-1.0), " oracle 0.2615782918651234")

# ---- stable difference Phi_s(-u) - Phi_s(-w), 0 <= u <= w ----
def phis_diff(u, w):
    h = 0.5 * (w - u)
    if h <= 0.0:
        return 0.0
    a = 0.5 * (u + w)
    if a < 2.0 or h > 0.25 * a:
        return norm_cdf_scaled(-u) - norm_cdf_scaled(-w)
    # Miller backward recurrence for m_n = d^n/dt^n Phi_s(t) at t = -a
    rho = (h / a) ** 2
    jmax = int(18.0 / -math.log10(rho)) + 2
    N = 2 * jmax + 1
    G = 14
    mm = [0.0] * (N + G + 2)
    mm[N + G + 1] = 0.0
    mm[N + G] = 1.0
    for n in range(N + G, 0, -1):
        mm[n - 1] = (mm[n + 1] + a * mm[n]) / n
    scale = norm_cdf_scaled(-a) / mm[0]
    total = 0.0
    hpow = h                # h^(2j+1)
    fact = 1.0              # (2j+1)!
    for j in range(jmax + 1):
        n = 2 * j + 1
        if j > 0:
            hpow *= h * h
            fact *= n * (n - 1)
        term = mm[n] * scale * hpow / fact
        total += term
        if term < total * 1e-18:
            break
    return 2.0 * total

def phis_diff_mp(u, w):
    return phis_mp(-mp.mpf(u)) - phis_mp(-mp.mpf(w))

print("\nphis_diff validation (relative error):")
worst = 0; wcase = None
cases = []
for _ in range(4000):
    a = math.exp(random.uniform(math.log(1e-3), math.log(50)))
    h = a * math.exp(random.uniform(math.log(1e-12), 0))  # h in (0, a]
    u = a - h; w = a + h
    if u < 0: continue
    cases.append((u, w))
for u, w in cases:
    got = phis_diff(u, w)
    exact = phis_diff_mp(u, w)
    if exact == 0: continue
    rel = float(abs(mp.mpf(got) - exact) / exact)
    if rel > worst: worst, wcase = rel, (u, w)
print("worst relative:", worst, "at (u,w) =", wcase)

# targeted: the theta=1e-6 nasty case
u, w = 8.2, 8.2 + 2*1.2e-7
print("nasty case rel err:", float(abs(mp.mpf(phis_diff(u,w)) - phis_diff_mp(u,w))/phis_diff_mp(u,w)))

# naive comparison on the nasty case
naive = norm_cdf_scaled(-u) - norm_cdf_scaled(-w)
print("naive rel err:", float(abs(mp.mpf(naive) - phis_diff_mp(u,w))/phis_diff_mp(u,w)))
