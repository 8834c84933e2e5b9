#!/usr/bin/env python3
"""Emit power-series coefficients of the Riemann-Siegel correction terms C0..C4.

Each C_k(p) is expanded in u = p - 1/2 from the Taylor series of
Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), obtained by exact
series division at high working precision.

Usage: gen_rs_coeffs.py > rs_coefficients.inc
"""
import mpmath as mp

mp.mp.dps = 80
DEG = 90  # Psi series degree; C4 needs Psi^(12)
OUT_DEG = 60


def cos_series(inner, deg):
    """Taylor series of cos(f(u)) where f is given as a series with f(0) = c."""
    c0 = inner[0]
    g = [mp.mpf(0)] + inner[1:]  # f - f(0)
    # cos(c0 + g) = cos c0 cos g - sin c0 sin g, with g(0) = 0
    cos_g = [mp.mpf(0)] * (deg + 1)
    sin_g = [mp.mpf(0)] * (deg + 1)
    power = [mp.mpf(1)] + [mp.mpf(0)] * deg
    fact = mp.mpf(1)
    for k in range(deg + 1):
        if k > 0:
            power = mul(power, g, deg)
            fact *= k
        if all(x == 0 for x in power):
            break
        sign = (-1) ** (k // 2)
        target = cos_g if k % 2 == 0 else sin_g
        for i in range(deg + 1):
            target[i] += sign * power[i] / fact
    return [mp.cos(c0) * a - mp.sin(c0) * b for a, b in zip(cos_g, sin_g)]


def mul(a, b, deg):
    out = [mp.mpf(0)] * (deg + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(deg + 1 - i):
            out[i + j] += x * b[j]
    return out


def div(a, b, deg):
    out = [mp.mpf(0)] * (deg + 1)
    for i in range(deg + 1):
        s = a[i] - sum(out[j] * b[i - j] for j in range(i))
        out[i] = s / b[0]
    return out


def deriv(a, k):
    out = []
    for i in range(len(a) - k):
        f = mp.mpf(1)
        for j in range(k):
            f *= i + k - j
        out.append(a[i + k] * f)
    return out


def main():
    two_pi = 2 * mp.pi
    # p = 1/2 + u: p^2 - p - 1/16 = u^2 - 5/16 ; cos(2 pi p) = -cos(2 pi u)
    num = cos_series([two_pi * mp.mpf(-5) / 16, mp.mpf(0), two_pi] + [mp.mpf(0)] * (DEG - 2), DEG)
    den = cos_series([mp.mpf(0), two_pi] + [mp.mpf(0)] * (DEG - 1), DEG)
    den = [-x for x in den]
    psi = div(num, den, DEG)

    pi = mp.pi
    d = lambda k: deriv(psi, k)

    def comb(terms):
        out = [mp.mpf(0)] * (OUT_DEG + 1)
        for coef, series in terms:
            for i in range(min(OUT_DEG + 1, len(series))):
                out[i] += coef * series[i]
        return out

    c = [
        comb([(1, psi)]),
        comb([(-1 / (96 * pi**2), d(3))]),
        comb([(1 / (64 * pi**2), d(2)), (1 / (18432 * pi**4), d(6))]),
        comb([(-1 / (64 * pi**2), d(1)), (-1 / (3840 * pi**4), d(5)),
              (-1 / (5308416 * pi**6), d(9))]),
        comb([(1 / (128 * pi**2), psi), (19 / (24576 * pi**4), d(4)),
              (11 / (5898240 * pi**6), d(8)), (1 / (2038431744 * pi**8), d(12))]),
    ]
    print("// Generated by gen_rs_coeffs.py; power series in u = p - 1/2.")
    print(f"inline constexpr int kRsSeriesDegree = {OUT_DEG};")
    print(f"inline constexpr double kRsCoefficients[5][{OUT_DEG + 1}] = {{")
    for series in c:
        print("    {")
        for x in series:
            print(f"        {mp.nstr(x, 20, min_fixed=1, max_fixed=0)},")
        print("    },")
    print("};")


if __name__ == "__main__":
    main()
