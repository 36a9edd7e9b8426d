#!/usr/bin/env python3
"""Regenerates data/witnesses/*.json.

Closed-form components are evaluated with mpmath at 50 digits and rounded to
double. The L4 witness is only known to four significant digits; its fixture
is the weighted minimum-norm correction of those digits onto K4 = J6 = L6 = 0,
and the script asserts that the corrected tensor still rounds to the printed
digits.

Usage: python3 tools/gen_witness_fixtures.py [output_dir]
"""

import itertools
import json
import pathlib
import sys

import mpmath as mp

mp.mp.dps = 50

SLOTS = [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 1), (0, 1, 2),
         (0, 2, 2), (1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)]
NAMES = ["I2", "J2", "I4", "J4", "K4", "L4", "I6", "J6", "K6", "L6", "M6", "I8", "I10"]


def invariants(c):
    """All thirteen invariants by literal index sums over the full array."""
    R = range(3)
    A = {}
    for i, j, k in itertools.product(R, R, R):
        A[i, j, k] = c[SLOTS.index(tuple(sorted((i, j, k))))]
    u = [sum(A[i, l, l] for l in R) for i in R]
    D = {}
    for i, j, k in itertools.product(R, R, R):
        iso = (u[k] if i == j else 0) + (u[j] if i == k else 0) + (u[i] if j == k else 0)
        D[i, j, k] = A[i, j, k] - iso / 5
    M = [[sum(D[i, j, k] * D[i, j, l] for i in R for j in R) for l in R] for k in R]
    v = [sum(M[k][l] * D[k, l, p] for k in R for l in R) for p in R]
    w = [sum(D[i, j, k] * u[i] * u[j] for i in R for j in R) for k in R]

    def dot(a, b):
        return sum(a[i] * b[i] for i in R)

    def mv(m, x):
        return [sum(m[i][j] * x[j] for j in R) for i in R]

    mu, mvv = mv(M, u), mv(M, v)
    return {
        "I2": sum(M[i][i] for i in R), "J2": dot(u, u),
        "I4": sum(M[k][l] ** 2 for k in R for l in R), "J4": dot(u, mu),
        "K4": dot(v, u), "L4": dot(w, u), "I6": dot(v, v), "J6": dot(mu, w),
        "K6": dot(v, w), "L6": dot(mu, v), "M6": dot(w, w), "I8": dot(mu, mvv),
        "I10": sum(D[i, j, k] * v[i] * v[j] * v[k] for i in R for j in R for k in R),
    }


def as_float(x):
    return float(mp.nstr(x, 17))


def k4_components():
    s2, s3, s6 = mp.sqrt(2), mp.sqrt(3), mp.sqrt(6)
    return [3 / (5 * s2), s3 / 10, mp.mpf(1) / 10, 4 * s2 / 15 - 1 / s3, mp.mpf(1) / 3 + 1 / s6,
            -s2 / 15 + 1 / s3, 3 * s3 / 10, mp.mpf(-9) / 10, s3 / 10, mp.mpf(13) / 10]


def j6_components():
    r = mp.sqrt(313)
    big = mp.sqrt(8053043 - 308071 * r)
    q = mp.sqrt((298 - 2 * r) / (648164815 - 26977811 * r))
    a113 = (3966519 - 219867 * r) / (5 * mp.sqrt(648164815 - 26977811 * r) * (-215 + 7 * r))
    a112 = 121 * (2963 - 103 * r) / (10 * (-215 + 7 * r)) * q
    root = mp.sqrt((149 - r) / 2) / 6
    return [root - 18 * (-215 + 7 * r) / (5 * big), a112, a113, -6 * (-215 + 7 * r) / (5 * big),
            mp.mpf(1), -root - 6 * (-215 + 7 * r) / (5 * big),
            363 * (2963 - 103 * r) / (10 * (-215 + 7 * r)) * q, 1 + a113, a112, -1 + 3 * a113]


J6_CLOSED_FORM = [
    "(1/6) sqrt((149 - sqrt 313)/2) - 18(-215 + 7 sqrt 313) / (5 sqrt(8053043 - 308071 sqrt 313))",
    "121(2963 - 103 sqrt 313) / (10(-215 + 7 sqrt 313)) * sqrt((298 - 2 sqrt 313)/(648164815 - 26977811 sqrt 313))",
    "(3966519 - 219867 sqrt 313) / (5 sqrt(648164815 - 26977811 sqrt 313) (-215 + 7 sqrt 313))",
    "-6(-215 + 7 sqrt 313) / (5 sqrt(8053043 - 308071 sqrt 313))",
    "1",
    "-(1/6) sqrt((149 - sqrt 313)/2) - 6(-215 + 7 sqrt 313) / (5 sqrt(8053043 - 308071 sqrt 313))",
    "363(2963 - 103 sqrt 313) / (10(-215 + 7 sqrt 313)) * sqrt((298 - 2 sqrt 313)/(648164815 - 26977811 sqrt 313))",
    "1 + A113",
    "A112",
    "-1 + 3 A113",
]

J6_DECIMALS = ["1.554", "-0.1877", "-0.01287", "0.06780", "1", "-1.283", "-0.5631", "0.9871", "-0.1877", "-1.039"]
L4_DECIMALS = ["1.0358", "0.06373", "-0.06357", "1.8269", "1", "-1.9697", "0.1912", "0.9364", "0.06373", "-1.1907"]


def half_unit(text):
    if "." not in text:
        return mp.mpf(0)
    return mp.mpf(10) ** (-len(text.split(".")[1])) / 2


def polish(decimals, constraints):
    """Weighted minimum-norm Newton correction onto constraints = 0."""
    x = [mp.mpf(s) for s in decimals]
    h = [half_unit(s) for s in decimals]
    free = [i for i in range(10) if h[i] > 0]
    eps = mp.mpf("1e-25")
    for _ in range(12):
        f = [invariants(x)[n] for n in constraints]
        if max(abs(v) for v in f) < mp.mpf("1e-45"):
            break
        J = mp.matrix(len(constraints), len(free))
        for col, i in enumerate(free):
            xp = list(x)
            xp[i] += eps
            fp = [invariants(xp)[n] for n in constraints]
            for r in range(len(constraints)):
                J[r, col] = (fp[r] - f[r]) / eps
        W = mp.diag([h[i] ** 2 for i in free])
        lam = mp.lu_solve(J * W * J.T, mp.matrix(f))
        dx = -(W * J.T * lam)
        for col, i in enumerate(free):
            x[i] += dx[col]
    worst = max(abs(x[i] - mp.mpf(decimals[i])) / h[i] for i in free)
    assert worst < 1, "corrected tensor no longer rounds to the printed digits"
    return x, worst


def write(out_dir, name, payload):
    path = out_dir / f"{name}.json"
    path.write_text(json.dumps(payload, indent=2) + "\n")
    print("wrote", path)


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/witnesses")
    out_dir.mkdir(parents=True, exist_ok=True)

    write(out_dir, "L6", {
        "format": "witness-v1",
        "case": "L6",
        "source": "sign-flip witness for L6: K4 = L4 = J6 = 0 and L6 != 0",
        "tensor": {"format": "sym3-v1", "field": "rational",
                   "components": ["3/5", "0", "0", "6/5", "0", "-4/5", "0", "1/2", "0", "-1/2"]},
        "expected": {"I2": "7", "J2": "1", "I4": "37/2", "J4": "2", "K4": "0", "L4": "0", "I6": "4",
                     "J6": "0", "L6": "-2", "M6": "0", "I10": "4"},
        "vanishing": ["K4", "L4", "J6"],
        "tolerance": {"mode": "exact"},
    })

    k4 = k4_components()
    write(out_dir, "K4", {
        "format": "witness-v1",
        "case": "K4",
        "source": "sign-flip witness for K4: L4 = J6 = L6 = 0 and K4 != 0",
        "closed_form": ["3/(5 sqrt 2)", "sqrt 3 / 10", "1/10", "4 sqrt 2 / 15 - 1/sqrt 3",
                        "1/3 + 1/sqrt 6", "-sqrt 2 / 15 + 1/sqrt 3", "3 sqrt 3 / 10", "-9/10",
                        "sqrt 3 / 10", "13/10"],
        "tensor": {"format": "sym3-v1", "field": "float", "components": [as_float(c) for c in k4]},
        "expected": {"I2": "8", "J2": "3/2", "I4": "88/3", "J4": "8/3", "K4": "8/9", "L4": "0",
                     "I6": "64/9", "J6": "0", "L6": "0", "M6": "11/9", "I10": "11776/729"},
        "vanishing": ["L4", "J6", "L6"],
        "tolerance": {"mode": "absolute", "value": 1e-10},
    })

    j6 = j6_components()
    for value, text in zip(j6, J6_DECIMALS):
        assert abs(value - mp.mpf(text)) <= half_unit(text) or text == "1", (value, text)
    write(out_dir, "J6", {
        "format": "witness-v1",
        "case": "J6",
        "source": "sign-flip witness for J6: K4 = L4 = L6 = 0 and J6 != 0",
        "closed_form": J6_CLOSED_FORM,
        "printed_decimals": J6_DECIMALS,
        "tensor": {"format": "sym3-v1", "field": "float", "components": [as_float(c) for c in j6]},
        "expected": {"J6": 0.5112, "I2": 17.29, "J2": 1, "I4": 132.6, "J4": 2.547, "I6": 83.81,
                     "M6": 0.1687, "I10": -831},
        "vanishing": ["K4", "L4", "L6"],
        "tolerance": {"mode": "relative", "value": 5e-3, "vanishing": 5e-3},
    })

    l4, worst = polish(L4_DECIMALS, ["K4", "J6", "L6"])
    write(out_dir, "L4", {
        "format": "witness-v1",
        "case": "L4",
        "source": "sign-flip witness for L4: K4 = J6 = L6 = 0 and L4 != 0",
        "printed_decimals": L4_DECIMALS,
        "derivation": ("weighted minimum-norm Newton correction of the printed decimals onto "
                       f"K4 = J6 = L6 = 0; largest shift is {float(worst):.3f} of the rounding half-width"),
        "tensor": {"format": "sym3-v1", "field": "float", "components": [as_float(c) for c in l4]},
        "expected": {"L4": -0.3843, "I2": 32.2465, "J2": 1, "I4": 394.69, "J4": 9.1213, "I6": 509.67,
                     "M6": 3.2506, "I10": 17825.1},
        "vanishing": ["K4", "J6", "L6"],
        "tolerance": {"mode": "relative", "value": 5e-3, "vanishing": 5e-3},
    })

    half_sqrt2 = as_float(mp.sqrt(2) / 2)
    write(out_dir, "M6", {
        "format": "witness-v1",
        "case": "M6",
        "source": "family u = (5a, 5b, 5c), D123 = d, other deviator components zero",
        "instances": [
            {"parameters": {"a": "0", "b": "0", "c": "1", "d": "1"}, "field": "rational",
             "expected": {"I2": "6", "J2": "25", "I4": "12", "J4": "50", "K4": "0", "L4": "0", "I6": "0",
                          "J6": "0", "L6": "0", "I10": "0", "M6": "0"},
             "tolerance": {"mode": "exact"}},
            {"parameters": {"a": half_sqrt2, "b": half_sqrt2, "c": 0, "d": 1}, "field": "float",
             "expected": {"I2": "6", "J2": "25", "I4": "12", "J4": "50", "K4": "0", "L4": "0", "I6": "0",
                          "J6": "0", "L6": "0", "I10": "0", "M6": "625"},
             "tolerance": {"mode": "absolute", "value": 1e-9}},
        ],
        "shared": ["I2", "J2", "I4", "J4", "K4", "L4", "I6", "J6", "L6", "I10"],
    })

    write(out_dir, "J4", {
        "format": "witness-v1",
        "case": "J4",
        "source": "one-parameter family A(theta) with K4 = L4 = J6 = L6 = 0",
        "components": ["3/5 cos t", "1/5 sin t", "0", "1/5 cos t", "1", "1/5 cos t", "3/5 sin t", "1",
                       "1/5 sin t", "-1"],
        "constant": {"I2": "10", "J2": "1", "I4": "44", "I6": "16", "I10": "-64"},
        "vanishing": ["K4", "L4", "J6", "L6"],
        "tolerance": {"mode": "absolute", "value": 1e-9},
        "samples": 32,
        "printed_closed_forms": {"J4": "2 + 4 cos t sin t + 2 sin^2 t", "M6": "sin^2 t (2 cos t + sin^2 t)"},
        "stated_values": [
            {"invariant": "J4", "theta": "3pi/4", "value": "1"},
            {"invariant": "M6", "theta": "3pi/4", "value": "1/4"},
            {"invariant": "M6", "theta": "0", "value": "0"},
            {"invariant": "M6", "theta": "pi/4", "value": "9/4"},
            {"invariant": "J4", "theta": "0", "value": "2"},
        ],
    })


if __name__ == "__main__":
    main()
