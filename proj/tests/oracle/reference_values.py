#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ tests.

Independent of the library: evaluates the closed forms with mpmath at 40
digits. Run with `python3 tests/oracle/reference_values.py`.
"""
from mpmath import mp, mpf, exp, sqrt, log, pi, tan, atan, erfc, log10, degrees, radians, diff

mp.dps = 40


def cn2(a, high=mpf("3.6e-3"), mid=mpf("2.7e-15"), ground=mpf("1e-14"),
        high_scale=1000, mid_scale=1500, ground_scale=100, prefactor=mpf("1e-5")):
    a = mpf(a)
    return (high * (prefactor * a) ** 10 * exp(-a / high_scale)
            + mid * exp(-a / mid_scale) + ground * exp(-a / ground_scale))


def sigma(length, wavelength=mpf("1550e-9"), k=mpf("1.23")):
    return k * (2 * pi / wavelength) ** (mpf(7) / 6) * mpf(length) ** (mpf(11) / 6)


def margin(s, p0):
    s, p0 = mpf(s), mpf(p0)
    return exp(sqrt(-2 * s * log(2 * p0)) + s / 2)


def db(x):
    return 10 * log10(x)


def altitude(c1, fov_deg):
    return mpf(c1) / tan(radians(mpf(fov_deg)) / 2)


def q(x):
    return erfc(x / sqrt(2)) / 2


def margin_db(length, fov_deg, p0):
    return db(margin(sigma(length) * cn2(altitude(10, fov_deg)), p0))


def main():
    print("cn2(0)", cn2(0))
    print("cn2(114.30)", cn2("114.30"))
    print("cn2(1000)", cn2(1000))
    print("simplified(2, 500, 250)", 2 * 250 * exp(mpf("-0.5")))
    print("sigma 2 km", sigma(2000))
    print("sigma 5 km", sigma(5000))
    a120 = altitude(10, 120)
    print("altitude(10, 120)", a120, "cn2", cn2(a120), "s", sigma(2000) * cn2(a120))
    print("altitude(10, 10)", altitude(10, 10), "altitude(10, 5)", altitude(10, 5))
    print("pm(0.861, 1e-10)", margin("0.861", "1e-10"), "dB", db(margin("0.861", "1e-10")))
    print("pm(0.5, 1e-2)", margin("0.5", "0.01"))
    for s, pm in (("0.5", "9.283"), ("0.5", margin("0.5", "0.01"))):
        x = (log(mpf(pm)) - mpf(s) / 2) / sqrt(mpf(s))
        print("s", s, "pm", pm, "x", x, "Q", q(x), "chernoff", exp(-x ** 2 / 2) / 2)
    s = mpf(1)
    pm = margin(s, "1e-3")
    print("s=1 p0=1e-3 pm", pm, "Q", q((log(pm) - s / 2) / sqrt(s)))
    for length in (2000, 5000):
        for p0 in ("1e-10", "1e-6"):
            print(length, p0, [(f, float(margin_db(length, f, p0))) for f in (120, 90, 10, 5)])
    print("gain 120->90 @1e-10", margin_db(2000, 120, "1e-10") - margin_db(2000, 90, "1e-10"))
    print("gain 120->10 @1e-10", margin_db(2000, 120, "1e-10") - margin_db(2000, 10, "1e-10"))
    print("gain 120->5 @1e-6", margin_db(2000, 120, "1e-6") - margin_db(2000, 5, "1e-6"))
    print("fov(36 mm, 50 mm)", degrees(2 * atan(mpf(36) / 100)))
    print("fov(18 mm, 180 mm)", degrees(2 * atan(mpf(18) / 360)))
    print("fov(18 mm, 10 mm)", degrees(2 * atan(mpf(18) / 20)))
    print("default optimum: altitude 200, cn2", cn2(200), "s", sigma(2000) * cn2(200),
          "dB", db(margin(sigma(2000) * cn2(200), "1e-6")))
    print("strictly decreasing on [0, 3000] at 1 m:", all(cn2(a + 1) < cn2(a) for a in range(0, 3000)))
    high_only = lambda a: cn2(a, mid=0, ground=0)
    print("first-term hump:", mp.findroot(lambda a: diff(high_only, a), 9000))


if __name__ == "__main__":
    main()
