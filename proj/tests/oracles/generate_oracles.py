#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ test suites.

Every number printed here is computed with mpmath at 50 digits, independently
of the C++ code paths (closed forms evaluated directly, integrals by mpmath's
tanh-sinh quadrature, roots by mpmath.findroot).  Re-run to audit:

    python3 tests/oracles/generate_oracles.py
"""
from mpmath import (mp, mpf, log, sqrt, pi, quad, ellipk, ellipfun, findroot,
                    besselj, sech, tanh, inf)

mp.dps = 50


def kappa(h):
    L = log(h)
    return (-mpf(1) / 324 + mpf(96) * h / 3125 - mpf(9) * h**2 / 64
            + mpf(32) * h**3 / 81 - mpf(3) * h**4 / 4
            + mpf(7580461) * h**6 / 16200000
            - (66801 * h**6 * L - 46690 * h**6 * L**2 + 17400 * h**6 * L**3
               - 3000 * h**6 * L**4) / 90000)


def upper_x0(h):
    L = log(h)
    return sqrt(pi / (2 * kappa(h))) / 2 * (2 * h**2 * L**2 - 2 * h**2 * L + h**2 - 1)


def c_strip():
    return pi / 2 * sqrt(3 * pi / 2)


def lower(R, h):
    mu0 = findroot(lambda x: besselj(0, x), 2.4)
    a = sqrt(pi) / 2 * sqrt(R**2 + h**2) / (R * h)
    b = mu0 / sqrt(4 * R * h - pi)
    return pi * sqrt(mpf(3) / 2) * max(a, b), a, b


def b1(h):
    return mpf(8) / 35 * (mpf(36) / 5 * (2 * h**2 + 3 * h + 2) / (h - 1)**2
                          + mpf(6) / 5 * (13 * h + 22) * (3 * h**2 - h + 3) / (h - 1)**3
                          + (19 * h**3 + 51 * h**2 + 75 * h + 65) / (3 * (h - 1)**3))


def b2(R, h):
    return (4 * R * h
            + 4 * (82563626 + 139273674 * h + 131633079 * h**2 + 47395086 * h**3) / (75150075 * (h - 1))
            + 4 * (6562533 + 20038773 * h + 29176308 * h**2 + 22648263 * h**3 + 5977793 * h**4) / (25050025 * (h - 1)**2)
            + 288 * (1561958 + 3280874 * h + 4160951 * h**2 + 3491837 * h**3 + 1768313 * h**4 + 336653 * h**5) / (425850425 * (h - 1)**3))


def b2_exact(R, h):
    # exact ||Psi_R||^4_{L4}/U^4 from symbolic integration of the piecewise
    # polynomial field (sympy), written as 4Rh + remainder
    return 4 * R * h + 4 * (1011981090 * h**5 + 1495360527 * h**4 - 173841573 * h**3
                            + 41135272 * h**2 + 362811451 * h + 416279809) / (1277551275 * (h - 1)**3)


def re_bar(R, h):
    num = c_strip() * sqrt(R**2 + h**2) / (R * h)
    den = 2 * sqrt(b1(h)) + sqrt(pi / (2 * R * h)) * (3 * pi * b2(R, h) / 2 * (R**2 + h**2))**mpf(0.25)
    return num / den


def eps_growth(h):
    f = lambda e: 2 * h / (3 * pi**3) * e**4 + 2 * sqrt(2) / h**mpf(0.25) * e - 1
    return findroot(f, (mpf(0), mpf(2)), solver='bisect' if False else 'anderson')


def strip():
    m = mpf(1) / 2
    al = ellipk(m)
    cn = lambda t: ellipfun('cn', t, m=m)
    sn = lambda t: ellipfun('sn', t, m=m)
    dn = lambda t: ellipfun('dn', t, m=m)
    i4 = quad(lambda t: cn(t)**4, [-al, 0, al])
    i2 = quad(lambda t: cn(t)**2, [-al, 0, al])
    id_ = quad(lambda t: (sn(t) * dn(t))**2, [-al, 0, al])
    mu = lambda h: (h / al * i4)**mpf(0.25)
    wp2 = lambda h: (al / h) * id_ / mu(h)**2
    w2 = lambda h: (h / al) * i2 / mu(h)**2
    h0 = findroot(lambda h: wp2(h) - 1, mpf(2))
    a = sqrt(w2(h0))
    q = (mpf(2) / (3 * a) * a**2 + 2 * a * wp2(h0)) / sqrt(4 * a / 3)
    return al, h0, mu(h0), a, q, q * h0, cn(2 * al)


if __name__ == "__main__":
    mu0 = findroot(lambda x: besselj(0, x), 2.4)
    print("mu0", mu0)
    al, h0, mu_h0, a, q, c, cn2a = strip()
    print("alpha", al)
    print("cn(2 alpha)", cn2a)
    print("h0", h0)
    print("mu_h0", mu_h0)
    print("W_L2 at h0", a)
    print("quotient at h0", q)
    print("c_upper", c)
    print("c_upper/strip_lower_const", c / c_strip())
    print("strip lower constant", c_strip())
    for h in [mpf('1.05'), mpf('1.1'), mpf(2), mpf(5), mpf(10)]:
        print("kappa", h, kappa(h))
        print("upper_x0", h, upper_x0(h))
    for h in [mpf(2), mpf(5), mpf(10)]:
        x0q = (2 * pi * quad(lambda r: (-log(r) + (h - r) / r)**2 * r, [1, h])
               / sqrt(2 * pi * quad(lambda r: ((h - r) * log(r))**4 * r, [1, h])))
        print("x0 quadrature quotient", h, x0q)
    print("ratio upper_x0*h/c at h=1e6", upper_x0(mpf(10)**6) * 10**6 / c_strip())
    print("2 sqrt10/pi", 2 * sqrt(10) / pi)
    print("lower(6,2)", *lower(mpf(6), mpf(2)))
    print("2 sqrt(5 pi)/2", sqrt(5 * pi))
    for h in [mpf(2), mpf(3), mpf(5)]:
        print("B1", h, b1(h))
    for R, h in [(6, 2), (10, 3), (20, 5)]:
        print("B2 closed form", R, h, b2(mpf(R), mpf(h)), "exact", b2_exact(mpf(R), mpf(h)))
    print("re_bar(6,2)", re_bar(mpf(6), mpf(2)))
    print("re_bar(6,5)", re_bar(mpf(6), mpf(5)))
    for h in [mpf('1.5'), mpf(2), mpf(5), mpf(20)]:
        print("eps", h, eps_growth(h))
