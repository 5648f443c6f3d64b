import math, random, sys
import mpmath as mp
sys.path.insert(0, "/root/pkg/src")
from igvol import normal as N
mp.mp.dps = 50
random.seed(31415)

def Phi_mp(x): return 0.5 * mp.erfc(-mp.mpf(x) / mp.sqrt(2))
def phis_mp(x):
    x = mp.mpf(x); return mp.exp(x*x/2) * Phi_mp(x)
def ulps(a, e):
    if e == 0: return 0.0 if a == 0 else float('inf')
    u = math.ulp(float(e)) or 5e-324
    return float(abs(mp.mpf(a) - e) / mp.mpf(u))

# norm_cdf
w1 = max(ulps(N.norm_cdf(x), Phi_mp(x)) for x in (random.uniform(-8,8) for _ in range(4000)))
w2 = max(ulps(N.norm_cdf(-x), Phi_mp(-x)) for x in (random.uniform(8,37.4) for _ in range(2000)))
print("norm_cdf ulp: central", round(w1,2), "tail", round(w2,2))

# norm_cdf_scaled
w3 = max(ulps(N.norm_cdf_scaled(-x), phis_mp(-x)) for x in (random.uniform(0,60) for _ in range(4000)))
print("norm_cdf_scaled ulp [-60,0]:", round(w3,2))

# norm_quantile round trips + vs mpmath
worst_x = 0
for _ in range(4000):
    p = math.exp(random.uniform(math.log(1e-300), math.log(0.5)))
    if random.random() < 0.5: p = 1.0 - max(p, 2e-16)
    x = N.norm_quantile(p)
    xe = float(mp.sqrt(2) * mp.erfinv(2*mp.mpf(p) - 1))
    err = abs(x - xe) / max(abs(xe), 1e-300)
    worst_x = max(worst_x, err)
print("norm_quantile worst relative-x vs mpmath:", worst_x)

# inverse consistency invariant: p in [1e-15, 1-1e-15]
worst = 0
for _ in range(4000):
    p = math.exp(random.uniform(math.log(1e-15), math.log(0.5)))
    if random.random() < 0.5: p = 1.0 - p
    if not (0.0 < p < 1.0): continue
    x = N.norm_quantile(p)
    err = abs(N.norm_cdf(x) - p)
    bound = 1e-15 * max(p, 1-p) + 1e-17
    worst = max(worst, err / bound)
print("inverse consistency worst (err/bound):", worst)

# phis_diff sweep across all branches
def pd_mp(u, w): return phis_mp(-mp.mpf(u)) - phis_mp(-mp.mpf(w))
worst = 0; wc = None
for _ in range(6000):
    a = math.exp(random.uniform(math.log(1e-6), math.log(50)))
    h = a * math.exp(random.uniform(math.log(1e-14), 0))
    u, w = a - h, a + h
    if u < 0: continue
    e = pd_mp(u, w)
    if e == 0: continue
    rel = float(abs(mp.mpf(N._phis_diff(u, w)) - e) / e)
    if rel > worst: worst, wc = rel, (u, w, a, h)
print("phis_diff worst relative:", worst, "at", wc)

# frozen spec examples
print("cdf(0.1):", N.norm_cdf(0.1), "== 0.539827837277029")
print("cdf(0):", N.norm_cdf(0.0), "inf:", N.norm_cdf(float('inf')), N.norm_cdf(float('-inf')))
print("scaled(-40):", N.norm_cdf_scaled(-40.0), "== 0.00996733518830131")
print("Q(0.975):", N.norm_quantile(0.975), "== 1.9599639845400543")
print("Q(0.5):", N.norm_quantile(0.5))
print("nan:", N.norm_cdf(float('nan')), N.norm_cdf_scaled(float('nan')))
