"""Regenerate src/wallis_series/data/reference_constants.json.

Every value comes from mpmath special functions at 50 significant
digits, never from the series or quadrature code in the package:

    app 1   (pi/2) H_0(1)          Struve function
    app 2   (pi/2) J_0(1)          Bessel function
    app 3   (pi/2) L_0(1)          modified Struve function
    app 4   (pi/2) I_0(1)          modified Bessel function
    app 5   pi^2/8 and pi^2/6
    app 8   2 G                    G = Catalan's constant
    app 9   G

Run:  python scripts/derive_constants.py
"""

import json
import pathlib

import mpmath

mpmath.mp.dps = 50

SCRIPT = "scripts/derive_constants.py"
OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "wallis_series" / "data" / "reference_constants.json"


def entry(app, label, value, expr):
    return {
        "application": app,
        "label": label,
        "value": mpmath.nstr(value, 30),
        "expression": expr,
        "source": f"{SCRIPT}: mpmath {mpmath.__version__}, {mpmath.mp.dps} digits",
    }


def main():
    half_pi = mpmath.pi / 2
    constants = [
        entry(1, "(pi/2) H0(1)", half_pi * mpmath.struveh(0, 1), "pi/2 * struveh(0, 1)"),
        entry(2, "(pi/2) J0(1)", half_pi * mpmath.besselj(0, 1), "pi/2 * besselj(0, 1)"),
        entry(3, "(pi/2) L0(1)", half_pi * mpmath.struvel(0, 1), "pi/2 * struvel(0, 1)"),
        entry(4, "(pi/2) I0(1)", half_pi * mpmath.besseli(0, 1), "pi/2 * besseli(0, 1)"),
        entry(5, "pi^2/8", mpmath.pi**2 / 8, "pi**2 / 8"),
        entry(5, "pi^2/6", mpmath.pi**2 / 6, "pi**2 / 6"),
        entry(8, "2 G (twice Catalan's constant)", 2 * mpmath.catalan, "2 * catalan"),
        entry(9, "G (Catalan's constant)", mpmath.catalan, "catalan"),
    ]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"constants": constants}, indent=2) + "\n")
    print(f"wrote {len(constants)} constants to {OUT}")


if __name__ == "__main__":
    main()
