"""Dev validation of the planned normal-CDF kernels against mpmath."""
import math
import mpmath as mp
mp.mp.dps = 40

INV_SQRT2 = 0.7071067811865475244008443621048490392848
# Veltkamp split of 1/sqrt(2): hi has 26 trailing zero bits
_t = INV_SQRT2 * 134217729.0
C_HI = _t - (_t - INV_SQRT2)
C_LO = INV_SQRT2 - C_HI
# residual beyond double: 1/sqrt(2) = C_HI + C_LO + C_TINY
C_TINY = float(mp.mpf(1)/mp.sqrt(2) - mp.mpf(C_HI) - mp.mpf(C_LO))
TWO_OVER_SQRTPI = 1.1283791670955125738961589031215451716881

def dd_mul_const(x):
    """x * (1/sqrt2) as hi + lo using Dekker TwoProduct (no fma)."""
    p = x * INV_SQRT2
    t = x * 134217729.0
    xh = t - (t - x)
    xl = x - xh
    e = ((xh * C_HI - p) + xh * C_LO + xl * C_HI) + xl * C_LO
    e += x * C_TINY
    return p, e

def erfc_xsq2(x):
    """erfc(x/sqrt(2)) with dd argument + first-order correction."""
    z, zlo = dd_mul_const(x)
    e = math.erfc(z)
    az = abs(z)
    if az < 26.5:
        e -= zlo * TWO_OVER_SQRTPI * math.exp(-z * z)
    return e

def norm_cdf(x):
    return 0.5 * erfc_xsq2(-x)

def ulps(approx, exact_mp):
    if exact_mp == 0:
        return 0.0
    d = mp.mpf(approx) - exact_mp
    import math as m
    u = m.ulp(float(exact_mp)) or 5e-324
    return float(abs(d) / mp.mpf(u))

def Phi_mp(x):
    return 0.5 * mp.erfc(-mp.mpf(x) / mp.sqrt(2))

# 1) norm_cdf accuracy across |x|<=8 and tails
import random
random.seed(12345)
worst = (0, None); worst_tail = (0, None)
for i in range(4000):
    x = random.uniform(-8, 8)
    u = ulps(norm_cdf(x), Phi_mp(x))
    if u > worst[0]: worst = (u, x)
for i in range(1500):
    x = -random.uniform(8, 37.4)
    u = ulps(norm_cdf(x), Phi_mp(x))
    if u > worst_tail[0]: worst_tail = (u, x)
print("norm_cdf worst ulp |x|<=8:", worst)
print("norm_cdf worst ulp tail x in [-37.4,-8]:", worst_tail)

# naive comparison
def norm_cdf_naive(x):
    return 0.5 * math.erfc(-x * INV_SQRT2)
wn = 0
for i in range(2000):
    x = random.uniform(-8, 8)
    u = ulps(norm_cdf_naive(x), Phi_mp(x))
    wn = max(wn, u)
print("naive norm_cdf worst ulp |x|<=8:", wn)
