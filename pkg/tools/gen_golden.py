"""Write the golden file for the af_1 representation tower, p <= 3.

The matrices are transcribed by hand below, entry by entry; nothing here calls
the af1 module.  ``theta`` entries are lists of ``(coeff, j, shift)`` meaning
``coeff * f_j(lambda + shift * kappa)``, expanded with generic quadratic
``f_j(x) = mu_{j,0} + mu_{j,1} x + mu_{j,2} x^2``.

    python3 tools/gen_golden.py > src/ncverify/data/golden_af1.json
"""
import json
import sys
from fractions import Fraction

from ncverify.scalars import HBAR, SIGMA, ONE, ParamPoly, lam, mu

DEGREE = 2
H = ParamPoly.var(HBAR)
KAPPA = H * ParamPoly.var(SIGMA)
LAM = ParamPoly.var(lam(1))
TWELFTH = H * H * Fraction(1, 12)

PI_E1_DIAG = {0: [0], 1: [1, 0], 2: [2, 1, 0], 3: [3, 2, 1, 0]}  # times kappa
PI_E2 = {
    0: [[0]],
    1: [[0, 1], [0, 0]],
    2: [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
    3: [[0, 1, 0, TWELFTH], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
}
THETA = {
    0: [[[(ONE, 0, 0)]]],
    1: [
        [[(ONE, 0, 1)], [(ONE, 1, 1)]],
        [[], [(ONE, 0, 0)]],
    ],
    2: [
        [[(ONE, 0, 2)], [(ONE, 1, 2)], [(ONE, 2, 2)]],
        [[], [(ONE, 0, 1)], [(ONE, 1, 1)]],
        [[], [], [(ONE, 0, 0)]],
    ],
    3: [
        [[(ONE, 0, 3)], [(ONE, 1, 3)], [(ONE, 2, 3)], [(TWELFTH, 1, 3), (ONE, 3, 3)]],
        [[], [(ONE, 0, 2)], [(ONE, 1, 2)], [(ONE, 2, 2)]],
        [[], [], [(ONE, 0, 1)], [(ONE, 1, 1)]],
        [[], [], [], [(ONE, 0, 0)]],
    ],
}


def f_at(j, shift):
    x = LAM + KAPPA * shift
    return ParamPoly.sum(ParamPoly.var(mu(j, d)) * x ** d for d in range(DEGREE + 1))


def expand(entry):
    return ParamPoly.sum(c * f_at(j, s) for c, j, s in entry)


def main():
    out = {"degree": DEGREE, "pi": {}, "theta": {}}
    for p in range(4):
        n = p + 1
        e1 = [[KAPPA * PI_E1_DIAG[p][i] if i == j else ParamPoly() for j in range(n)] for i in range(n)]
        e2 = [[ParamPoly.coerce(x) for x in row] for row in PI_E2[p]]
        out["pi"][str(p)] = {
            "e1": [[x.to_json() for x in r] for r in e1],
            "e2": [[x.to_json() for x in r] for r in e2],
        }
        out["theta"][str(p)] = {
            "display": [[[[c.to_json(), j, s] for c, j, s in e] for e in row] for row in THETA[p]],
            "expanded": [[expand(e).to_json() for e in row] for row in THETA[p]],
        }
    json.dump(out, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
