# Reference values for test_coeigen.cpp: W_n^{(q)} from the Wright series at
# 200 digits (terms summed until negligible).
from mpmath import mp, mpf, gamma, rgamma, factorial, log, exp
mp.dps = 200

def W(a, b, n, q, x):
    a, b, x = mpf(a), mpf(b), mpf(x)
    ba = b + 1/a - 1
    u = x**(1/a)
    s = 0
    k = 0
    while True:
        t = (-u)**k / factorial(k) * gamma(k/a + n + ba + 1) * rgamma(k/a + ba + 1 - q)
        s += t
        if k > 20 and abs(t) < mpf(10)**(-120) * abs(s):
            break
        k += 1
    return s * x**(ba - q) / (factorial(n) * a * gamma(a*b + 1))

def dens(a, b, x):
    a, b, x = mpf(a), mpf(b), mpf(x)
    return x**(b + 1/a - 1) * exp(-x**(1/a)) / (a*gamma(a*b+1))

cases = [(0.5, 1, 2, 0, 1.5), (0.75, 0.5, 5, 0, 3.0), (0.5, 1, 3, 1, 0.8),
         (0.5, 1, 40, 0, 12.8), (0.3, 2, 6, 2, 0.4), (0.9, 0.1, 7, 0, 0.25),
         (0.75, 0.5, 12, 0, 2.0), (0.5, 1, 1, 0, 1.0)]
for c in cases:
    print(c, mp.nstr(W(*c), 22))
print("R1 (0.5,1) x=1", mp.nstr(W(0.5, 1, 1, 0, 1.0) / dens(0.5, 1, 1.0), 22))
