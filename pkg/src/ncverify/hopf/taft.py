"""The 4-dimensional Taft algebra: ``a^2 = 1``, ``x^2 = 0``, ``xa = -ax``.

Basis index ``i + 2j`` for ``a^i x^j``: 0 -> 1, 1 -> a, 2 -> x, 3 -> ax.
Coalgebra data: ``Delta(a) = a(x)a``, ``Delta(x) = x(x)a + 1(x)x``, ``eps(a) = 1``,
``eps(x) = 0``, ``S(a) = a``, ``S(x) = ax``.  Delta and eps are extended
multiplicatively and S anti-multiplicatively from the generators, then every
axiom is checked on the whole basis, which also checks that the extensions are
well defined.
"""
from __future__ import annotations

from fractions import Fraction

from .. import linalg
from ..pgrowth import FDAlgebra, decide_growth
from ..scalars import rational_to_json
from .core import HopfReport, t_add, t_map, t_mul, t_sub

NAMES = ("1", "a", "x", "ax")
ONE, A, X, AX = range(4)


def basis_mul(k1: int, k2: int) -> dict:
    i, j = k1 % 2, k1 // 2
    k, l = k2 % 2, k2 // 2
    if j + l >= 2:
        return {}
    return {(i + k) % 2 + 2 * (j + l): Fraction((-1) ** (j * k))}


def table() -> list:
    out = []
    for p in range(4):
        row = []
        for q in range(4):
            v = [Fraction(0)] * 4
            for k, c in basis_mul(p, q).items():
                v[k] += c
            row.append(v)
        out.append(row)
    return out


def algebra() -> FDAlgebra:
    return FDAlgebra(4, table(), [1, 0, 0, 0], name="taft")


DELTA_GEN = {A: {(A, A): Fraction(1)}, X: {(X, A): Fraction(1), (ONE, X): Fraction(1)}}
EPS_GEN = {A: Fraction(1), X: Fraction(0)}
S_GEN = {A: {A: Fraction(1)}, X: {AX: Fraction(1)}}

_M1 = [basis_mul]
_M2 = [basis_mul, basis_mul]


def _word(k: int) -> list:
    return [A] * (k % 2) + [X] * (k // 2)


def delta(k: int) -> dict:
    out = {(ONE, ONE): Fraction(1)}
    for g in _word(k):
        out = t_mul(out, DELTA_GEN[g], _M2)
    return out


def counit(k: int) -> Fraction:
    c = Fraction(1)
    for g in _word(k):
        c *= EPS_GEN[g]
    return c


def antipode(k: int) -> dict:
    out = {(ONE,): Fraction(1)}
    for g in _word(k):
        out = t_mul({(kk,): v for kk, v in S_GEN[g].items()}, out, _M1)
    return {kk[0]: v for kk, v in out.items()}


def _mul1(x: dict, y: dict) -> dict:
    out = t_mul({(k,): v for k, v in x.items()}, {(k,): v for k, v in y.items()}, _M1)
    return {k[0]: v for k, v in out.items()}


def pi(lam, twisted: bool = False) -> list:
    """2x2 images of 1, a, x, ax; the twisted version sends a to -a."""
    lam = Fraction(lam)
    s = -1 if twisted else 1
    pa = [[Fraction(s), Fraction(0)], [Fraction(0), Fraction(-s)]]
    px = [[Fraction(0), lam], [Fraction(0), Fraction(0)]]
    one = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    return [one, pa, px, linalg.matmul(pa, px)]


def direct_sum(r1: list, r2: list) -> list:
    out = []
    for m1, m2 in zip(r1, r2):
        n1, n2 = len(m1), len(m2)
        m = [[Fraction(0)] * (n1 + n2) for _ in range(n1 + n2)]
        for i in range(n1):
            m[i][:n1] = m1[i]
        for i in range(n2):
            m[n1 + i][n1:] = m2[i]
        out.append(m)
    return out


def _is_rep(mats: list) -> bool:
    for p in range(4):
        for q in range(4):
            want = [[Fraction(0)] * len(mats[0]) for _ in mats[0]]
            for k, c in basis_mul(p, q).items():
                want = [[w + c * y for w, y in zip(wr, yr)] for wr, yr in zip(want, mats[k])]
            if linalg.matmul(mats[p], mats[q]) != want:
                return False
    return True


def _flat(mats: list) -> list:
    return [[x for r in m for x in r] for m in mats]


def taft_check(lam1=1, lam2=2) -> tuple[HopfReport, dict]:
    """Axioms on the full basis, the two-point representations and a growth certificate."""
    lam1, lam2 = Fraction(lam1), Fraction(lam2)
    rep = HopfReport("taft", {"lambda1": rational_to_json(lam1), "lambda2": rational_to_json(lam2)})
    basis = range(4)

    try:
        algebra()
        rep.add("presentation", "associative with unit", True)
    except Exception as e:  # InvalidTable
        rep.add("presentation", "associative with unit", False, {"error": str(e)})
    rep.add("presentation", "a^2=1", basis_mul(A, A) == {ONE: 1})
    rep.add("presentation", "x^2=0", basis_mul(X, X) == {})
    rep.add("presentation", "xa=-ax", basis_mul(X, A) == {AX: -1})

    for p in basis:
        for q in basis:
            lhs = t_map({(k,): v for k, v in basis_mul(p, q).items()}, [delta])
            rhs = t_mul(delta(p), delta(q), _M2)
            rep.add("delta_homomorphism", f"{NAMES[p]}*{NAMES[q]}", not t_sub(lhs, rhs))
    for p in basis:
        for q in basis:
            lhs = sum((v * counit(k) for k, v in basis_mul(p, q).items()), Fraction(0))
            rep.add("counit", f"eps({NAMES[p]}*{NAMES[q]})", lhs == counit(p) * counit(q))

    for p in basis:
        d = delta(p)
        left = t_map(d, [delta, None])
        right = t_map(d, [None, delta])
        rep.add("coassociativity", NAMES[p], not t_sub(left, right))

    for p in basis:
        d = delta(p)
        left = t_map(d, [lambda k: {(): counit(k)}, None])
        right = t_map(d, [None, lambda k: {(): counit(k)}])
        rep.add("counit", f"(eps x 1)Delta({NAMES[p]})", left == {(p,): 1})
        rep.add("counit", f"(1 x eps)Delta({NAMES[p]})", right == {(p,): 1})

    for p in basis:
        want = {ONE: counit(p)} if counit(p) else {}
        for side in ("S x 1", "1 x S"):
            val: dict = {}
            for (k1, k2), c in delta(p).items():
                l, r = (antipode(k1), {k2: 1}) if side == "S x 1" else ({k1: 1}, antipode(k2))
                val = t_add(val, {k: c * v for k, v in _mul1(l, r).items()})
            rep.add("antipode", f"m({side})Delta({NAMES[p]})", val == want)

    for p in basis:
        for q in basis:
            lhs: dict = {}
            for k, v in basis_mul(p, q).items():
                lhs = t_add(lhs, {kk: v * vv for kk, vv in antipode(k).items()})
            rhs = _mul1(antipode(q), antipode(p))
            rep.add("antipode_antihomomorphism", f"S({NAMES[p]}*{NAMES[q]})", not t_sub(lhs, rhs))

    # the displayed representations
    p1, p2 = pi(lam1), pi(lam2)
    rep.add("representations", "pi_lambda1 respects the relations", _is_rep(p1))
    rep.add("representations", "pi_lambda2 respects the relations", _is_rep(p2))
    rep.add("representations", "pi(x)*pi(x)=0", linalg.matmul(p1[X], p1[X]) == [[0, 0], [0, 0]])
    plain = direct_sum(p1, p2)
    r_plain = linalg.rank(_flat(plain), 16)
    kernel = [[rational_to_json(x) for x in v] for v in linalg.nullspace(linalg.transpose(_flat(plain)), 4)]
    rep.add(
        "representations",
        "pi_lambda1+pi_lambda2 injective",
        r_plain == 4,
        {"rank": r_plain, "kernel_basis_1_a_x_ax": kernel, "note": "pi_lambda(ax) = pi_lambda(x) for every lambda"},
    )
    twisted = direct_sum(p1, pi(lam2, twisted=True))
    r_tw = linalg.rank(_flat(twisted), 16)
    rep.add("representations", "twisted sum respects the relations", _is_rep(twisted))
    rep.add("representations", "pi_lambda1+pi'_lambda2 injective", r_tw == 4, {"rank": r_tw})

    growth: dict = {}
    if r_tw == 4 and lam1 != 0 and lam2 != 0:
        image = FDAlgebra.from_matrices(twisted, name="taft image in T_4")
        cert = decide_growth(image)
        growth["embedded_image"] = cert.to_json()
        rep.add("growth", "embedded image", cert.verdict == "POLY_GROWTH" and cert.embedding is not None)
    abstract = decide_growth(algebra())
    growth["abstract"] = abstract.to_json()
    rep.add("growth", "abstract algebra", abstract.verdict == "POLY_GROWTH")
    return rep, growth
