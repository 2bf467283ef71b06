"""Independent values for the saddle-point functions (mpmath, 80 digits)."""
from mpmath import mp, mpf, atan, log, tan, pi, findroot, sin, cos

mp.dps = 80


def g(alpha, s, tau):
    # Written from the two log/arctan groups with the arctan branch chosen
    # explicitly by the sign of 1 - s.
    sb = 1 - s
    logs = (1 + alpha) * log(1 + tau**2) - sb * log(1 + tau**2 / sb**2)
    if sb > 0:
        arc = atan(tau / sb)
    else:
        arc = pi - atan(tau / abs(sb))
    return logs / 2 - tau * ((1 + alpha) * atan(tau) - arc)


def tau_star_ge1(alpha, s):
    f = lambda t: pi - (1 + alpha) * atan(t) - atan(t / (s - 1))
    return findroot(f, mpf(1))


def tau_star_lt1(alpha, s):
    f = lambda t: -(1 + alpha) * atan(t) + atan(t / (1 - s))
    return findroot(f, mpf(2))


a = mpf(1) / 2
print("g(0.5, 2, 1) =", mp.nstr(g(a, mpf(2), mpf(1)), 20))
print("g(0.5, 0.7, 0.4) =", mp.nstr(g(a, mpf('0.7'), mpf('0.4')), 20))
print("tau*(0.5, 5) =", mp.nstr(tau_star_ge1(a, mpf(5)), 20))
print("tau*(0.5, 0.6) =", mp.nstr(tau_star_lt1(a, mpf('0.6')), 20))
a = mpf(3) / 4
print("tau*(0.75, 2.5) =", mp.nstr(tau_star_ge1(a, mpf('2.5')), 20))
