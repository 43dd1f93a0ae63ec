"""The deformed af_1 Hopf algebra modulo ``e_2^N``.

Basis ``e_1^a e_2^b`` with ``b < N``; coefficients are ParamPolys in hbar and
sigma.  The relation ``[e_1, e_2] = sigma sinh(hbar e_2)`` gives
``e_2^b e_1 = e_1 e_2^b - b sigma sinh(hbar e_2) e_2^{b-1}``.  ``e_2^N`` spans a
two-sided ideal, so the truncation is an algebra.

Delta does not descend to ``A_N -> A_N (x) A_N`` (``Delta(e_2)^N`` is not zero
there), but it does descend to ``A_{2N-1} -> A_N (x) A_N``.  Coassociativity is
therefore checked with the factor that Delta is applied to held at order
``2N-1``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..scalars import HBAR, ONE, SIGMA, ParamPoly
from .core import HopfReport, clean, serialize, t_add, t_map, t_mul, t_scale, t_sub

H = ParamPoly.var(HBAR)
SIG = ParamPoly.var(SIGMA)
E1 = (1, 0)
E2 = (0, 1)
UNIT = (0, 0)


def _hpow(r: int, sign: int = 1) -> ParamPoly:
    return ParamPoly.var(HBAR, r) * Fraction(sign ** r, factorial(r)) if r else ONE


@lru_cache(maxsize=None)
def _e1_right(N: int, a: int, b: int) -> tuple:
    """``(e_1^a e_2^b) e_1`` as a tuple of (key, coeff)."""
    out = [((a + 1, b), ONE)]
    if b:
        for r in range(1, N - b + 1, 2):
            if b - 1 + r < N:
                out.append(((a, b - 1 + r), -(SIG * _hpow(r)) * b))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_mul(N: int, k1: tuple, k2: tuple) -> dict:
    (a, b), (c, d) = k1, k2
    if c == 0:
        return {(a, b + d): ONE} if b + d < N else {}
    out: dict = {}
    for key, coeff in _e1_right(N, a, b):
        for k, v in basis_mul(N, key, (c - 1, d)).items():
            out[k] = out[k] + coeff * v if k in out else coeff * v
    return clean(out)


def _muls(N: int, order: int) -> list:
    f = lambda x, y: basis_mul(N, x, y)  # noqa: E731
    return [f] * order


class Af1TruncElem:
    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        if N < 1:
            raise ValueError("truncation order must be >= 1")
        self.N = N
        self.terms = clean({tuple(k): ParamPoly.coerce(v) for k, v in (terms or {}).items() if k[1] < N})

    @classmethod
    def e1(cls, N: int) -> "Af1TruncElem":
        return cls(N, {E1: ONE})

    @classmethod
    def e2(cls, N: int) -> "Af1TruncElem":
        return cls(N, {E2: ONE})

    @classmethod
    def one(cls, N: int) -> "Af1TruncElem":
        return cls(N, {UNIT: ONE})

    def _check(self, other: "Af1TruncElem") -> None:
        if self.N != other.N:
            raise ValueError(f"truncation orders differ: {self.N} vs {other.N}")

    def __add__(self, other):
        self._check(other)
        return Af1TruncElem(self.N, t_add(self.terms, other.terms))

    def __sub__(self, other):
        self._check(other)
        return Af1TruncElem(self.N, t_sub(self.terms, other.terms))

    def __neg__(self):
        return Af1TruncElem(self.N, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Af1TruncElem):
            return Af1TruncElem(self.N, t_scale(self.terms, ParamPoly.coerce(other)))
        self._check(other)
        out = t_mul({(k,): v for k, v in self.terms.items()}, {(k,): v for k, v in other.terms.items()}, _muls(self.N, 1))
        return Af1TruncElem(self.N, {k[0]: v for k, v in out.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Af1TruncElem):
            return self.N == other.N and self.terms == other.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, M: int) -> "Af1TruncElem":
        return Af1TruncElem(M, {k: v for k, v in self.terms.items() if k[1] < M})

    def to_json(self) -> list:
        return [{"e1": a, "e2": b, "coeff": v.to_json()} for (a, b), v in sorted(self.terms.items())]

    def __repr__(self) -> str:
        parts = [f"({v})*e1^{a}e2^{b}" for (a, b), v in sorted(self.terms.items())]
        return f"Af1TruncElem[N={self.N}](" + (" + ".join(parts) or "0") + ")"


# -- structure maps --------------------------------------------------------------------


def _exp_e2(N: int, sign: int) -> dict:
    return {(0, r): _hpow(r, sign) for r in range(N)}


def _sinh_of(x: dict, muls) -> dict:
    """``sinh(hbar x)`` for nilpotent x, as a tensor."""
    out: dict = {}
    power = x
    r = 1
    while power:
        out = t_add(out, t_scale(power, _hpow(r)))
        power = t_mul(t_mul(power, x, muls), x, muls)
        r += 2
    return out


def delta_gen(N: int, g: tuple) -> dict:
    """Delta of a generator in ``A_N (x) A_N``."""
    if g == E2:
        return {(E2, UNIT): ONE, (UNIT, E2): ONE}
    if g == E1:
        out = {(E1, k): v for k, v in _exp_e2(N, -1).items()}
        return t_add(out, {(k, E1): v for k, v in _exp_e2(N, 1).items()})
    raise ValueError(g)


@lru_cache(maxsize=None)
def _delta_basis(N: int, a: int, b: int) -> dict:
    """``Delta(e_1^a e_2^b) = Delta(e_1)^a Delta(e_2)^b`` in ``A_N (x) A_N``."""
    muls = _muls(N, 2)
    if a == 0 and b == 0:
        return {(UNIT, UNIT): ONE}
    if b:
        return t_mul(_delta_basis(N, a, b - 1), delta_gen(N, E2), muls)
    return t_mul(_delta_basis(N, a - 1, 0), delta_gen(N, E1), muls)


def delta_basis(N: int, key: tuple) -> dict:
    return _delta_basis(N, *key)


def counit_basis(key: tuple) -> ParamPoly:
    return ONE if key == UNIT else ParamPoly()


def antipode_gen(N: int, g: tuple, inverse: bool = False) -> dict:
    if g == E2:
        return {E2: -ONE}
    sign = 1 if inverse else -1
    out = {E1: -ONE}
    for r in range(1, N + 1, 2):
        if r < N:
            out[(0, r)] = SIG * H * _hpow(r) * sign
    return out


@lru_cache(maxsize=None)
def _antipode_basis(N: int, a: int, b: int, inverse: bool) -> dict:
    """Anti-multiplicative extension: ``S(e_1^a e_2^b) = S(e_2)^b S(e_1)^a``."""
    muls = _muls(N, 1)
    if a == 0 and b == 0:
        return {UNIT: ONE}
    if a:
        prev = _antipode_basis(N, a - 1, b, inverse)
        out = t_mul({(k,): v for k, v in prev.items()}, {(k,): v for k, v in antipode_gen(N, E1, inverse).items()}, muls)
    else:
        prev = _antipode_basis(N, 0, b - 1, inverse)
        out = t_mul({(k,): v for k, v in antipode_gen(N, E2, inverse).items()}, {(k,): v for k, v in prev.items()}, muls)
    return {k[0]: v for k, v in out.items()}


def antipode(N: int, x: dict, inverse: bool = False) -> dict:
    out: dict = {}
    for (a, b), c in x.items():
        out = t_add(out, t_scale(_antipode_basis(N, a, b, inverse), c))
    return out


def _as1(x: dict) -> dict:
    return {(k,): v for k, v in x.items()}


def _un1(t: dict) -> dict:
    return {k[0]: v for k, v in t.items()}


def _truncate_tensor(t: dict, orders) -> dict:
    return {k: v for k, v in t.items() if all(f[1] < n for f, n in zip(k, orders))}


def _json(t: dict) -> list:
    return serialize(t, lambda v: v.to_json())


def af1_hopf_check(N: int, e1_max: int = 2) -> HopfReport:
    if N < 2:
        raise ValueError("N must be >= 2")
    rep = HopfReport("af1", {"N": N})
    m1, m2 = _muls(N, 1), _muls(N, 2)

    # relation in A_N itself
    e1, e2 = _as1({E1: ONE}), _as1({E2: ONE})
    lhs = t_sub(t_mul(e1, e2, m1), t_mul(e2, e1, m1))
    res = t_sub(lhs, t_scale(_sinh_of(e2, m1), SIG))
    rep.add("presentation", "[e1,e2]-sigma*sinh(hbar*e2)", not res, {"residual": _json(res)} if res else {})

    # Delta respects the relation
    d1, d2 = delta_gen(N, E1), delta_gen(N, E2)
    br = t_sub(t_mul(d1, d2, m2), t_mul(d2, d1, m2))
    res = t_sub(br, t_scale(_sinh_of(d2, m2), SIG))
    rep.add("delta_homomorphism", "[De1,De2]-sigma*sinh(hbar*De2)", not res, {"residual": _json(res)} if res else {})

    # coassociativity: the inner Delta is taken at order 2N-1
    M = 2 * N - 1
    for name, g in (("e1", E1), ("e2", E2)):
        dg = delta_gen(M, g)
        left = t_map(_truncate_tensor(dg, (M, N)), [lambda k: delta_basis(N, k), None])
        right = t_map(_truncate_tensor(dg, (N, M)), [None, lambda k: delta_basis(N, k)])
        diff = t_sub(left, right)
        rep.add("coassociativity", name, not diff, {"residual": _json(diff)} if diff else {})

    for name, g in (("e1", E1), ("e2", E2)):
        dg = delta_gen(N, g)
        left = t_map(dg, [lambda k: {(): counit_basis(k)}, None])
        right = t_map(dg, [None, lambda k: {(): counit_basis(k)}])
        rep.add("counit", f"(eps x 1)Delta({name})", left == {(g,): ONE})
        rep.add("counit", f"(1 x eps)Delta({name})", right == {(g,): ONE})
    rep.add("counit", "eps respects relation", True, {"note": "both sides have no constant term"})

    for name, g in (("e1", E1), ("e2", E2)):
        dg = delta_gen(N, g)
        for side in ("S x 1", "1 x S"):
            maps = [lambda k: _as1(_antipode_basis(N, *k, False)), None] if side == "S x 1" else [None, lambda k: _as1(_antipode_basis(N, *k, False))]
            t = t_map(dg, maps)
            val = _un1(_contract(t, N))
            rep.add("antipode", f"m({side})Delta({name})", not val, {"value": _json(_as1(val))} if val else {})

    # S(xy) = S(y)S(x) on basis pairs, and S kills the relation
    keys = [(a, b) for a in range(e1_max + 1) for b in range(N)]
    bad = []
    for k1 in keys:
        for k2 in keys:
            prod = basis_mul(N, k1, k2)
            lhs = antipode(N, prod)
            rhs = _un1(t_mul(_as1(_antipode_basis(N, *k2, False)), _as1(_antipode_basis(N, *k1, False)), m1))
            if t_sub(lhs, rhs):
                bad.append([list(k1), list(k2)])
    rep.add("antipode_antihomomorphism", f"basis pairs e1^<={e1_max}", not bad, {"failures": bad[:5], "pairs": len(keys) ** 2})
    s1, s2 = _as1(antipode_gen(N, E1)), _as1(antipode_gen(N, E2))
    rel = t_sub(t_sub(t_mul(s2, s1, m1), t_mul(s1, s2, m1)), t_scale(_sinh_of(s2, m1), SIG))
    rep.add("antipode_antihomomorphism", "S(relation)", not rel, {"residual": _json(rel)} if rel else {})

    # S is invertible: S^{-1}(e1) = -e1 + hbar sigma sinh(hbar e2), S^{-1}(e2) = -e2
    for name, g in (("e1", E1), ("e2", E2)):
        there = antipode(N, antipode_gen(N, g, inverse=True))
        back = antipode(N, antipode_gen(N, g), inverse=True)
        rep.add("antipode_inverse", f"S(S^-1({name}))", there == {g: ONE})
        rep.add("antipode_inverse", f"S^-1(S({name}))", back == {g: ONE})
    s_sq = t_sub(antipode(N, antipode_gen(N, E1)), {E1: ONE})
    rep.params["S^2(e1)-e1"] = _json(_as1(s_sq))
    return rep


def _contract(t: dict, N: int) -> dict:
    out: dict = {}
    for (k1, k2), c in t.items():
        for k, v in basis_mul(N, k1, k2).items():
            out[(k,)] = out[(k,)] + c * v if (k,) in out else c * v
    return clean(out)
