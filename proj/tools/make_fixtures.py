#!/usr/bin/env python3
"""Generate arbitrary-precision reference fixtures for the special-function layer.

Every fixture entry has the shape {"input": {...}, "expected": "...", "source": "oracle"}.
Values are computed with mpmath at 50 significant digits and emitted with 25 digits,
far beyond double precision, so the C++ implementations can be validated against them.

Usage:  python3 tools/make_fixtures.py [output_dir]   (default: tests/fixtures)
"""

import json
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50

DIGITS = 25


def fmt(x):
    return mp.nstr(mp.mpf(x), DIGITS, strip_zeros=False)


def entry(inp, value):
    return {"input": inp, "expected": fmt(value), "source": "oracle"}


def airy_fixtures():
    xs = [0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.5, 8.0, 10.0, 12.0, 15.0]
    out = []
    for x in xs:
        out.append(entry({"function": "airy_ai", "x": x}, mp.airyai(x)))
        out.append(entry({"function": "airy_ai_prime", "x": x}, mp.airyai(x, 1)))
    # integral of Ai over [0, inf) = 1/3 (DLMF 9.10.17 with n = 0)
    out.append(entry({"function": "airy_ai_integral"}, mp.mpf(1) / 3))
    return out


def kummer_u_fixtures():
    out = []
    mus = ["-1/2", "0", "1", "2", "7/3"]
    rhos = ["1/2", "1", "3"]
    xs = [0.25, 0.5, 1.0, 1.5, 2.0, 3.0]
    abs_pairs = []
    for m in mus:
        mu = mp.mpf(mp.fraction(*map(int, m.split("/"))) if "/" in m else m)
        abs_pairs.append((mu / 3, mp.mpf(2) / 3))
        abs_pairs.append((mu / 3 + 1, mp.mpf(5) / 3))
    for r in rhos:
        rho = mp.mpf(mp.fraction(*map(int, r.split("/"))) if "/" in r else r)
        abs_pairs.append(((rho + 1) / 3, mp.mpf(2) / 3))
        abs_pairs.append(((rho + 1) / 3, mp.mpf(5) / 3))
    seen = set()
    for a, b in abs_pairs:
        key = (fmt(a), fmt(b))
        if key in seen:
            continue
        seen.add(key)
        for x in xs:
            arg = mp.mpf(x) ** 3
            out.append(
                entry(
                    {"function": "kummer_u", "a": fmt(a), "b": fmt(b), "x": fmt(arg)},
                    mp.hyperu(a, b, arg),
                )
            )
    return out


def mellin_fixtures():
    # integral_0^inf t^{b-1} U(a,c;t) e^{-t} dt = Gamma(b) Gamma(b-c+1) / Gamma(a+b-c+1)
    out = []
    triples = [
        (mp.mpf(1) / 3, mp.mpf(2) / 3, mp.mpf(4) / 3),
        (mp.mpf(1) / 2, mp.mpf(2) / 3, mp.mpf(5) / 3),
        (mp.mpf(2) / 3, mp.mpf(5) / 3, mp.mpf(7) / 3),
    ]
    for a, c, b in triples:
        val = mp.gamma(b) * mp.gamma(b - c + 1) / mp.gamma(a + b - c + 1)
        out.append(
            entry(
                {"function": "mellin_kummer", "a": fmt(a), "c": fmt(c), "b": fmt(b)},
                val,
            )
        )
    return out


def gauss_2f1_fixtures():
    out = []
    param_sets = []
    for mu, rho in [
        (mp.mpf(1), mp.mpf(3) / 2),
        (mp.mpf(-1) / 2, mp.mpf(1) / 10),
        (mp.mpf(2), mp.mpf(3)),
        (mp.mpf(-1) / 2, mp.mpf(0)),
    ]:
        c = (mu + rho + 2) / 3
        param_sets.append((mu / 3, (rho + 1) / 3, c))
        param_sets.append((mu / 3 + 1, (rho + 1) / 3, c))
    zs = [0.05, 0.2, 0.5, 0.7, 0.8, 0.95, 0.99]
    for a, b, c in param_sets:
        for z in zs:
            out.append(
                entry(
                    {"function": "gauss_2f1", "a": fmt(a), "b": fmt(b), "c": fmt(c), "z": z},
                    mp.hyp2f1(a, b, c, z),
                )
            )
    return out


def bessel_k_fixtures():
    out = []
    nus = [mp.mpf(1) / 6, mp.mpf(1) / 3, mp.mpf(2) / 3]
    zs = [0.0078125, 0.0625, 0.5, 1.8856180831641267, 4.0, 13.5, 38.729833462074168852]
    for nu in nus:
        for z in zs:
            out.append(
                entry(
                    {"function": "bessel_k", "nu": fmt(nu), "z": fmt(mp.mpf(z))},
                    mp.besselk(nu, mp.mpf(z)),
                )
            )
    return out


def incomplete_gamma_fixtures():
    out = []
    alphas = [mp.mpf(1) / 3, mp.mpf(2) / 3]
    xs = [0.25, 1.0, 2.0]
    for alpha in alphas:
        for x in xs:
            z = mp.mpf(x) ** 3
            out.append(
                entry(
                    {"function": "upper_incomplete_gamma", "alpha": fmt(alpha), "z": fmt(z)},
                    mp.gammainc(alpha, z, mp.inf),
                )
            )
    return out


def weight_fixtures():
    """End-to-end oracle values of the family weights U0, U1."""
    out = []
    g13 = mp.gamma(mp.mpf(1) / 3)
    g23 = mp.gamma(mp.mpf(2) / 3)

    def b_weights(p, x):
        """Kummer-U weight pair with Kummer parameter offset p = mu (B1) or rho+1 (B2)."""
        x3 = x**3
        u0 = 3 * mp.gamma((p + 2) / 3) / (g13 * g23) * mp.e ** (-x3) * mp.hyperu(p / 3, mp.mpf(2) / 3, x3)
        u1 = (
            9
            * mp.gamma((p + 5) / 3)
            / (g13 * g23)
            * x**2
            * mp.e ** (-x3)
            * mp.hyperu(p / 3 + 1, mp.mpf(5) / 3, x3)
        )
        return u0, u1

    for x in [0.25, 1.0, 2.0, 3.5]:
        x = mp.mpf(x)
        out.append(entry({"case": "A", "k": 0, "x": fmt(x)}, 3 * mp.airyai(x)))
        out.append(entry({"case": "A", "k": 1, "x": fmt(x)}, -3 * mp.airyai(x, 1)))

    for mu_s, mu in [("-1/2", mp.mpf(-1) / 2), ("0", mp.mpf(0)), ("1", mp.mpf(1)), ("2", mp.mpf(2)), ("7/3", mp.mpf(7) / 3)]:
        for x in [0.25, 1.0, 2.0]:
            x = mp.mpf(x)
            u0, u1 = b_weights(mu, x)
            out.append(entry({"case": "B1", "mu": mu_s, "k": 0, "x": fmt(x)}, u0))
            out.append(entry({"case": "B1", "mu": mu_s, "k": 1, "x": fmt(x)}, u1))

    for rho_s, rho in [("1/2", mp.mpf(1) / 2), ("1", mp.mpf(1)), ("3", mp.mpf(3))]:
        for x in [0.25, 1.0, 2.0]:
            x = mp.mpf(x)
            # U0 is the B1 form at parameter rho + 1; U1 at parameter rho - 2
            # (the pair whose moments reproduce the dual functionals exactly).
            u0, _ = b_weights(rho + 1, x)
            _, u1 = b_weights(rho - 2, x)
            out.append(entry({"case": "B2", "rho": rho_s, "k": 0, "x": fmt(x)}, u0))
            out.append(entry({"case": "B2", "rho": rho_s, "k": 1, "x": fmt(x)}, u1))

    for (mu_s, rho_s, mu, rho) in [
        ("1", "3/2", mp.mpf(1), mp.mpf(3) / 2),
        ("-1/2", "1/10", mp.mpf(-1) / 2, mp.mpf(1) / 10),
        ("2", "3", mp.mpf(2), mp.mpf(3)),
        ("-1/2", "0", mp.mpf(-1) / 2, mp.mpf(0)),
    ]:
        c = (mu + rho + 2) / 3
        for x in [0.1, 0.5, 0.9]:
            x = mp.mpf(x)
            z = 1 - x**3
            u0 = (
                3
                * mp.gamma((mu + 2) / 3)
                * mp.gamma(rho / 3 + 1)
                / (g13 * g23 * mp.gamma(c))
                * z ** ((mu + rho - 1) / 3)
                * mp.hyp2f1(mu / 3, (rho + 1) / 3, c, z)
            )
            u1 = (
                3
                * mp.gamma((mu + 5) / 3)
                * mp.gamma(rho / 3 + 1)
                / (g23 * mp.gamma(mp.mpf(4) / 3) * mp.gamma(c))
                * x**2
                * z ** ((mu + rho - 1) / 3)
                * mp.hyp2f1(mu / 3 + 1, (rho + 1) / 3, c, z)
            )
            out.append(entry({"case": "C", "mu": mu_s, "rho": rho_s, "k": 0, "x": fmt(x)}, u0))
            out.append(entry({"case": "C", "mu": mu_s, "rho": rho_s, "k": 1, "x": fmt(x)}, u1))
    return out


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    outdir.mkdir(parents=True, exist_ok=True)
    files = {
        "airy.json": airy_fixtures(),
        "kummer_u.json": kummer_u_fixtures(),
        "mellin_kummer.json": mellin_fixtures(),
        "gauss_2f1.json": gauss_2f1_fixtures(),
        "bessel_k.json": bessel_k_fixtures(),
        "incomplete_gamma.json": incomplete_gamma_fixtures(),
        "weights.json": weight_fixtures(),
    }
    for name, data in files.items():
        path = outdir / name
        with path.open("w") as fh:
            json.dump(data, fh, indent=1)
            fh.write("\n")
        print(f"wrote {path} ({len(data)} entries)")


if __name__ == "__main__":
    main()
