"""High-precision reference values frozen into the C++ test suites.

Run with `python3 reference_values.py`; every number printed here is copied
verbatim into a test. Uses mpmath at 50 digits, independent of the C++ code.
"""
import mpmath as mp

mp.mp.dps = 50


def lam(n, s, alpha):
    return 2 ** (2 * s) * mp.gamma((n + 2 * s + 2 * alpha) / 4) * mp.gamma((n + 2 * s - 2 * alpha) / 4) / (
        mp.gamma((n - 2 * s - 2 * alpha) / 4) * mp.gamma((n - 2 * s + 2 * alpha) / 4))


def hardy(n, s):
    return 2 ** (2 * s) * mp.gamma(mp.mpf(n + 2 * s) / 4) ** 2 / mp.gamma(mp.mpf(n - 2 * s) / 4) ** 2


def margin(n, s, a, p):
    n, s, a, p = map(mp.mpf, (n, s, a, p))
    beta = (2 * s + a) / (p - 1)
    alpha = (n - 2 * s) / 2 - beta
    return (p * lam(n, s, alpha) - hardy(n, s)) / 2 ** (2 * s)


print("# log_gamma references")
for x in ["0.001", "0.01", "0.1", "0.25", "0.5", "0.75", "0.999", "1.001", "1.5", "1.999", "2.001",
          "2.5", "3.3", "5", "7.25", "10", "25.5", "50", "100", "333.3", "640.5", "1000"]:
    print(f"{{{x}, {mp.nstr(mp.loggamma(mp.mpf(float(x))), 20)}}},")

print("# kappa_s(0.25)", mp.nstr(mp.gamma(0.75) * mp.sqrt(2) / mp.gamma(0.25), 20))
print("# hardy(2,0.5)", mp.nstr(hardy(2, mp.mpf("0.5")), 20))
for ns in [(2, "0.5"), (3, "0.5"), (3, "0.75"), (5, "0.25"), (10, "0.5")]:
    print("# hardy", ns, mp.nstr(hardy(ns[0], mp.mpf(ns[1])), 20))
print("# margin(3,.5,1,4)", mp.nstr(margin(3, "0.5", 1, 4), 20))
print("# amplitude(3,.5,1,4)", mp.nstr(mp.mpf(3) ** (-mp.mpf(1) / 6), 20))
print("# margin(10,.5,0,1e6)", mp.nstr(margin(10, "0.5", 0, 10 ** 6), 20))
lim = lambda n, s, a: (2 * s + a) * 2 ** (2 * s - 1) * mp.gamma(mp.mpf(n) / 2) * mp.gamma(s) / mp.gamma(mp.mpf(n - 2 * s) / 2)
print("# large-p limit p*lambda (10,.5,0)", mp.nstr(lim(10, mp.mpf("0.5"), 0), 20))
print("# large-p limit p*lambda (3,.5,1)", mp.nstr(lim(3, mp.mpf("0.5"), 1), 20))

# JL-type threshold at (10, 0.5, 0): smallest sign change of the margin above p_S.
pS = mp.mpf(11) / 9
grid = [pS * (1 + mp.mpf(10) ** -9) * (mp.mpf(10) ** 6 / (pS * (1 + mp.mpf(10) ** -9))) ** (mp.mpf(k) / 511) for k in range(512)]
prev = None
for p in grid:
    m = margin(10, "0.5", 0, p)
    if prev is not None and mp.sign(m) != mp.sign(prev[1]):
        root = mp.findroot(lambda q: margin(10, "0.5", 0, q), (prev[0], p), solver="anderson")
        print("# jl root (10,.5,0)", mp.nstr(root, 20))
        break
    prev = (p, m)

# Unnormalized singular-integral constants: A(gamma) * C(n,s) = Phi(gamma).
def c_ns(n, s):
    return s * 4 ** s * mp.gamma(mp.mpf(n) / 2 + s) / (mp.pi ** (mp.mpf(n) / 2) * mp.gamma(1 - s))

def a_three(s, g):
    # n = 3 reduction of the folded double integral (angular integral in closed form).
    m = (3 + 2 * s) / 2
    f = lambda t: t ** (2 * s - 1) * mp.expm1(g * mp.log(t)) * mp.expm1((3 - 2 * s - g) * mp.log(t)) * (
        (1 - t) ** (-1 - 2 * s) - (1 + t) ** (-1 - 2 * s)) / (2 * t * (m - 1))
    return 2 * mp.pi * mp.quad(f, [0, 0.5, 0.9, 0.99, 1])

s = mp.mpf("0.5")
print("# A(3,.5,gamma=2/3) n=3 reduction", mp.nstr(a_three(s, mp.mpf(2) / 3), 20))
print("# lambda(1/3)/C(3,.5)", mp.nstr(lam(3, s, mp.mpf(1) / 3) / c_ns(3, s), 20))
print("# hardy_integral(3,.5)", mp.nstr(a_three(s, mp.mpf(1)), 20), mp.nstr(hardy(3, s) / c_ns(3, s), 20))

# Poisson kernel normalization p_{n,s} = Gamma((n+2s)/2) / (pi^{n/2} Gamma(s)).
for n, s in [(1, "0.5"), (1, "0.25"), (3, "0.75")]:
    s = mp.mpf(s)
    print("# p_ns", n, s, mp.nstr(mp.gamma((n + 2 * s) / 2) / (mp.pi ** (mp.mpf(n) / 2) * mp.gamma(s)), 20))

# Fractional Laplacian of exp(-x^2) in 1D at s = 0.999 versus -u''.
for x in [0, 0.5, 1, 2]:
    f = lambda xi, ss: xi ** (2 * ss) * mp.sqrt(mp.pi) * mp.exp(-xi ** 2 / 4) * mp.cos(xi * x) / mp.pi
    v = mp.quad(lambda xi: f(xi, mp.mpf("0.999")), [0, mp.inf])
    exact = (2 - 4 * x * x) * mp.exp(-x * x)
    print("# s=.999 gaussian x=", x, mp.nstr(v, 12), mp.nstr(exact, 12), mp.nstr(v - exact, 6))

for x in [0, 1]:
    for ss in ["0.9999"]:
        v = mp.quad(lambda xi: xi ** (2 * mp.mpf(ss)) * mp.exp(-xi ** 2 / 4) * mp.cos(xi * x) / mp.sqrt(mp.pi), [0, mp.inf])
        print("# s=", ss, "gaussian x=", x, mp.nstr(v - (2 - 4 * x * x) * mp.exp(-x * x), 6))

# Fractional Laplacian of exp(-x^2), n = 1, at s = 0.25 and 0.75 (trace identity oracle values).
for ss in ["0.25", "0.75"]:
    for x in [0, 1, 3]:
        v = mp.quad(lambda xi: xi ** (2 * mp.mpf(ss)) * mp.exp(-xi ** 2 / 4) * mp.cos(xi * x) / mp.sqrt(mp.pi), [0, mp.inf])
        print("# fraclap gaussian s=", ss, "x=", x, mp.nstr(v, 16))

# Critical bubble in n = 2, s = 1/2: u_e = (r^2 + (1+y)^2)^(-1/2) solves the extension problem with p = 3.
# First-order energy at lambda = 1 by direct quadrature in polar coordinates (rho, phi) of the meridian plane.
def bubble_energy(lmb):
    u = lambda r, y: (r * r + (1 + y) ** 2) ** -0.5
    def grad2(r, y):
        d = r * r + (1 + y) ** 2
        return (r * r + (1 + y) ** 2) / d ** 3
    bulk = 2 * mp.pi * mp.quad(lambda rho, phi: 0.5 * grad2(rho * mp.cos(phi), rho * mp.sin(phi)) * rho * mp.cos(phi) * rho,
                               [0, lmb], [0, mp.pi / 2])
    nonlin = 2 * mp.pi * mp.quad(lambda r: r * u(r, 0) ** 4, [0, lmb]) / 4
    sphere = 2 * mp.pi * mp.quad(lambda phi: u(lmb * mp.cos(phi), lmb * mp.sin(phi)) ** 2 * lmb * mp.cos(phi) * lmb, [0, mp.pi / 2])
    e1 = mp.mpf(2 * 0.5 * 4) / 2 - 2
    return lmb ** e1 * (bulk - nonlin) + lmb ** (e1 - 1) * (0.5 / 2) * sphere

print("# bubble E(1)", mp.nstr(bubble_energy(mp.mpf(1)), 16))
print("# bubble E(2)", mp.nstr(bubble_energy(mp.mpf(2)), 16))

# Cut-off mass rho(x) = int (eta(x)-eta(y))^2 |x-y|^{-n-2s} dy, eta = (1+|y|^2)^{-m/2}.
def rho1(x, s, m):
    eta = lambda z: (1 + z * z) ** (-m / 2)
    f = lambda y: (eta(x) - eta(y)) ** 2 * abs(x - y) ** (-1 - 2 * s)
    return mp.quad(f, [-mp.inf, -1, 0, x, x + 1, mp.inf])

for x in [0, 1, 10, 100]:
    print("# rho n=1 s=.25 m=1 x=", x, mp.nstr(rho1(mp.mpf(x), mp.mpf("0.25"), 1), 16))

def rho2(x, s, m):
    # polar coordinates around x; angular average over the circle
    eta = lambda z2: (1 + z2) ** (-m / 2)
    g = lambda t, th: (eta(x * x) - eta(x * x + t * t + 2 * x * t * mp.cos(th))) ** 2 * t ** (-1 - 2 * s)
    return 2 * mp.quad(g, [0, 0.5, 1, abs(x - 1), x, x + 1, mp.inf], [0, mp.pi])

print("# rho n=2 s=.75 m=1.5 x=1", mp.nstr(rho2(mp.mpf(1), mp.mpf("0.75"), mp.mpf("1.5")), 12))
def rho3(x, s, m):
    eta = lambda z2: (1 + z2) ** (-m / 2)
    g = lambda t, c: (eta(x * x) - eta(x * x + t * t + 2 * x * t * c)) ** 2 * t ** (-1 - 2 * s)
    return 2 * mp.pi * mp.quad(g, [0, 0.5, 1, abs(x - 1), x, x + 1, mp.inf], [-1, 1])

print("# rho n=3 s=.5 m=2 x=1", mp.nstr(rho3(mp.mpf(1), mp.mpf("0.5"), 2), 12), "pi^2/4 =", mp.nstr(mp.pi ** 2 / 4, 16))
print("# rho n=3 s=.5 m=2 x=3", mp.nstr(rho3(mp.mpf(3), mp.mpf("0.5"), 2), 12), "pi^2/100 =", mp.nstr(mp.pi ** 2 / 100, 16))
