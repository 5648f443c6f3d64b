"""Compute frozen oracle constants with mpmath (50 digits), printed as 17g doubles."""
import mpmath as mp
mp.mp.dps = 50

def Phi(x):
    return 0.5 * mp.erfc(-x / mp.sqrt(2))

def Phis(x):  # e^{x^2/2} Phi(x)
    return mp.exp(x * x / 2) * Phi(x)

def Qn(p):
    return mp.sqrt(2) * mp.erfinv(2 * mp.mpf(p) - 1)

def bs_call(k, v):
    k = mp.mpf(k); v = mp.mpf(v)
    d1 = -k / v + v / 2
    d2 = -k / v - v / 2
    return Phi(d1) - mp.e**k * Phi(d2)

def ig_cdf(x, mu, lam):
    x = mp.mpf(x); mu = mp.mpf(mu); lam = mp.mpf(lam)
    a = mp.sqrt(lam * x) / mu
    b = mp.sqrt(lam / x)
    return Phi(a - b) + mp.exp(2 * lam / mu) * Phi(-(a + b))

vals = {
    "norm_cdf(0.1)": Phi(mp.mpf("0.1")),
    "norm_cdf(-1)": Phi(-1),
    "norm_cdf(-2)": Phi(-2),
    "norm_cdf_scaled(-1) = e^0.5*Phi(-1)": Phis(-1),
    "norm_cdf_scaled(-40)": Phis(-40),
    "norm_quantile(0.975)": Qn("0.975"),
    "norm_quantile(0.45)": Qn("0.45"),
    "bs_normalized_call(0,0.2) = 2*Phi(0.1)-1": 2 * Phi(mp.mpf("0.1")) - 1,
    "ig_cdf(1; mu=1, lam=1)": ig_cdf(1, 1, 1),
    "ig_pdf(1;1,1) = 1/sqrt(2pi)": 1 / mp.sqrt(2 * mp.pi),
    "parity c=0.1,k=0.2 -> p": mp.mpf("0.1") - (1 - mp.e**mp.mpf("0.2")),
    "k(v=0.5, delta=0.45)": mp.mpf("0.5") * (mp.mpf("0.25") - Qn("0.45")),
    "bs_normalized_call(0.1,0.5)": bs_call("0.1", "0.5"),
    "1 - bs_normalized_call(0.1,0.5)": 1 - bs_call("0.1", "0.5"),
    "bs_normalized_call(0.3,0.2)": bs_call("0.3", "0.2"),
    "bs_normalized_call(0.2,0.4)": bs_call("0.2", "0.4"),
    "bs_normalized_call(0.2,0.5)": bs_call("0.2", "0.5"),
    "bs_normalized_call(0.5,1.0)": bs_call("0.5", "1.0"),
    "bs_normalized_call(1.0,0.3)": bs_call("1.0", "0.3"),
    "ig_cdf(16; mu=20, lam=1) (=1-c(0.1,0.5))": ig_cdf(16, 20, 1),
}
for name, v in vals.items():
    print(f"{name:*<55s} {mp.nstr(v, 20)}   float: {float(v)!r}")
