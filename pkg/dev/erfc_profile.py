import math, random
import mpmath as mp
mp.mp.dps = 40
random.seed(7)

def ulps(approx, exact_mp):
    if exact_mp == 0: return 0.0
    u = math.ulp(float(exact_mp)) or 5e-324
    return float(abs(mp.mpf(approx) - exact_mp) / mp.mpf(u))

# profile glibc erfc over z ranges (exact double inputs so no argument error)
for zr in [(0,0.5),(0.5,1.0),(1.0,1.5),(1.5,2.5),(2.5,5),(5,10),(10,26)]:
    w = 0
    for _ in range(3000):
        z = random.uniform(*zr)
        w = max(w, ulps(math.erfc(z), mp.erfc(mp.mpf(z))))
    print(f"erfc z in {zr}: worst {w:.2f} ulp")
# erf central
w = 0
for _ in range(3000):
    z = random.uniform(-0.9, 0.9)
    w = max(w, ulps(math.erf(z), mp.erf(mp.mpf(z))))
print("erf |z|<0.9 worst:", round(w,2), "ulp")
# exp quality
w = 0
for _ in range(3000):
    y = random.uniform(-700, 0)
    w = max(w, ulps(math.exp(y), mp.exp(mp.mpf(y))))
print("exp worst:", round(w,2), "ulp")
