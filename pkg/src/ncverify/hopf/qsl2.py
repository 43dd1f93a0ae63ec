"""Quantum SL_2 with rational q in the normal form ``a^n b^j c^k`` (n in Z).

Relations: ``ab = qba``, ``ac = qca``, ``bc = cb``, ``a`` invertible, and
``d = a^{-1}(1 + qbc)`` is eliminated.  Moving ``b^j c^k`` past ``a^n`` gives
``b^j c^k a^n = q^{-n(j+k)} a^n b^j c^k``.

Coproduct, counit and antipode are given on the letters a, b, c, d and
extended to words; words are normalized only at the end, so ``d`` never needs
an inverse of ``Delta(a)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import BadParameter, ParameterMismatch
from ..scalars import as_fraction, rational_to_json
from .core import HopfReport, clean, t_add, t_map, t_mul, t_scale, t_sub

Key = tuple  # (n, j, k)


def _check_q(q) -> Fraction:
    q = as_fraction(q)
    if q in (0, 1, -1):
        raise BadParameter("q must not be 0, 1 or -1")
    return q


@lru_cache(maxsize=None)
def _mul_fn(q: Fraction):
    def mul(k1: Key, k2: Key) -> dict:
        n1, j1, c1 = k1
        n2, j2, c2 = k2
        return {(n1 + n2, j1 + j2, c1 + c2): q ** (-n2 * (j1 + c1))}

    return mul


class QSL2Elem:
    __slots__ = ("q", "terms")

    def __init__(self, q, terms: dict | None = None):
        self.q = _check_q(q)
        self.terms = clean({tuple(k): as_fraction(v) for k, v in (terms or {}).items()})

    @classmethod
    def gen(cls, q, name: str) -> "QSL2Elem":
        q = _check_q(q)
        return cls(q, _letter(q, name))

    @classmethod
    def one(cls, q) -> "QSL2Elem":
        return cls(q, {(0, 0, 0): 1})

    def _check(self, other: "QSL2Elem") -> None:
        if self.q != other.q:
            raise ParameterMismatch(f"q = {self.q} vs q = {other.q}")

    def __add__(self, other: "QSL2Elem") -> "QSL2Elem":
        self._check(other)
        return QSL2Elem(self.q, t_add(self.terms, other.terms))

    def __sub__(self, other: "QSL2Elem") -> "QSL2Elem":
        self._check(other)
        return QSL2Elem(self.q, t_sub(self.terms, other.terms))

    def __mul__(self, other) -> "QSL2Elem":
        if not isinstance(other, QSL2Elem):
            return QSL2Elem(self.q, t_scale(self.terms, as_fraction(other)))
        return qsl2_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, QSL2Elem):
            return self.q == other.q and self.terms == other.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, N: int) -> "QSL2Elem":
        return QSL2Elem(self.q, {k: v for k, v in self.terms.items() if k[1] < N and k[2] < N})

    def to_json(self) -> list:
        return [{"a": n, "b": j, "c": k, "coeff": rational_to_json(v)} for (n, j, k), v in sorted(self.terms.items())]

    def __repr__(self) -> str:
        parts = [f"{v}*a^{n}b^{j}c^{k}" for (n, j, k), v in sorted(self.terms.items())]
        return "QSL2Elem(" + (" + ".join(parts) or "0") + ")"


def qsl2_mul(x: QSL2Elem, y: QSL2Elem) -> QSL2Elem:
    x._check(y)
    mul = _mul_fn(x.q)
    out: dict = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            for k, v in mul(k1, k2).items():
                out[k] = out.get(k, 0) + c1 * c2 * v
    return QSL2Elem(x.q, out)


def _letter(q: Fraction, name: str) -> dict:
    if name == "a":
        return {(1, 0, 0): Fraction(1)}
    if name == "A":  # a^{-1}
        return {(-1, 0, 0): Fraction(1)}
    if name == "b":
        return {(0, 1, 0): Fraction(1)}
    if name == "c":
        return {(0, 0, 1): Fraction(1)}
    if name == "d":
        return {(-1, 0, 0): Fraction(1), (-1, 1, 1): q}
    raise ValueError(f"unknown generator {name!r}")


# -- the word layer ------------------------------------------------------------------


def _concat(u: tuple, v: tuple) -> dict:
    return {u + v: 1}


def _normalize_word(q: Fraction, w: tuple) -> dict:
    mul = _mul_fn(q)
    out: dict = {(0, 0, 0): Fraction(1)}
    for letter in w:
        out = t_mul({(k,): v for k, v in out.items()}, {(k,): v for k, v in _letter(q, letter).items()}, [mul])
        out = {k[0]: v for k, v in out.items()}
    return out


def normalize(q: Fraction, t: dict) -> dict:
    """Word tensor -> normal-form tensor, factor by factor."""
    return t_map(t, [lambda w: {(k,): v for k, v in _normalize_word(q, w).items()}] * _order(t))


def _order(t: dict) -> int:
    return len(next(iter(t))) if t else 1


def structure(q: Fraction):
    """Delta, S, eps on letters as word tensors / word combinations / scalars."""
    qi = 1 / q
    delta = {
        "a": {(("a",), ("a",)): 1, (("b",), ("c",)): 1},
        "b": {(("a",), ("b",)): 1, (("b",), ("d",)): 1},
        "c": {(("c",), ("a",)): 1, (("d",), ("c",)): 1},
        "d": {(("c",), ("b",)): 1, (("d",), ("d",)): 1},
    }
    antipode = {
        "a": {("d",): Fraction(1)},
        "b": {("b",): -qi},
        "c": {("c",): -q},
        "d": {("a",): Fraction(1)},
    }
    counit = {"a": Fraction(1), "b": Fraction(0), "c": Fraction(0), "d": Fraction(1)}
    return delta, antipode, counit


def relations(q: Fraction) -> dict[str, dict]:
    qi = 1 / q
    return {
        "ab-qba": {("a", "b"): 1, ("b", "a"): -q},
        "ac-qca": {("a", "c"): 1, ("c", "a"): -q},
        "bc-cb": {("b", "c"): 1, ("c", "b"): -1},
        "bd-qdb": {("b", "d"): 1, ("d", "b"): -q},
        "cd-qdc": {("c", "d"): 1, ("d", "c"): -q},
        "ad-qbc-1": {("a", "d"): 1, ("b", "c"): -q, (): -1},
        "da-q^-1bc-1": {("d", "a"): 1, ("b", "c"): -qi, (): -1},
    }


def _delta_word(delta: dict, w: tuple) -> dict:
    out = {((), ()): 1}
    for letter in w:
        out = t_mul(out, delta[letter], [_concat, _concat])
    return out


def _antipode_word(antipode: dict, w: tuple) -> dict:
    out = {(): Fraction(1)}
    for letter in w:  # S(uv) = S(v) S(u)
        img = antipode[letter]
        nxt: dict = {}
        for u, cu in out.items():
            for v, cv in img.items():
                nxt[v + u] = nxt.get(v + u, 0) + cu * cv
        out = clean(nxt)
    return out


def _counit_word(counit: dict, w: tuple) -> Fraction:
    c = Fraction(1)
    for letter in w:
        c *= counit[letter]
    return c


def _json_tensor(t: dict) -> list:
    return [{"key": [list(k) for k in key], "coeff": rational_to_json(v)} for key, v in sorted(t.items())]


def qsl2_hopf_check(q) -> HopfReport:
    q = _check_q(q)
    delta, antipode, counit = structure(q)
    rels = relations(q)
    rep = HopfReport("qsl2", {"q": rational_to_json(q)})

    # the relations hold in the normal form itself (sanity of the presentation)
    for name, r in rels.items():
        val = normalize(q, {(w,): c for w, c in r.items()})
        rep.add("presentation", name, not val, {"residual": _json_tensor(val)} if val else {})

    for name, r in rels.items():
        img: dict = {}
        for w, c in r.items():
            img = t_add(img, t_scale(_delta_word(delta, w), c))
        val = normalize(q, img)
        rep.add("delta_homomorphism", name, not val, {"residual": _json_tensor(val)} if val else {})

    for g in "abcd":
        d1 = delta[g]
        left = t_map(d1, [lambda w: _delta_word(delta, w), None])
        right = t_map(d1, [None, lambda w: _delta_word(delta, w)])
        diff = normalize(q, t_sub(left, right))
        rep.add("coassociativity", g, not diff, {"residual": _json_tensor(diff)} if diff else {})

    target = {g: normalize(q, {((g,),): 1}) for g in "abcd"}
    for g in "abcd":
        left = normalize(q, {(w2,): c * _counit_word(counit, w1) for (w1, w2), c in delta[g].items()})
        right = normalize(q, {(w1,): c * _counit_word(counit, w2) for (w1, w2), c in delta[g].items()})
        rep.add("counit", f"(eps x 1)Delta({g})", left == target[g])
        rep.add("counit", f"(1 x eps)Delta({g})", right == target[g])
    for name, r in rels.items():
        val = sum((c * _counit_word(counit, w) for w, c in r.items()), Fraction(0))
        rep.add("counit", f"eps respects {name}", val == 0, {"value": rational_to_json(val)})

    for g in "abcd":
        want = {((0, 0, 0),): counit[g]} if counit[g] else {}
        for side in ("S x 1", "1 x S"):
            words: dict = {}
            for (w1, w2), c in delta[g].items():
                if side == "S x 1":
                    for s, cs in _antipode_word(antipode, w1).items():
                        words[(s + w2,)] = words.get((s + w2,), 0) + c * cs
                else:
                    for s, cs in _antipode_word(antipode, w2).items():
                        words[(w1 + s,)] = words.get((w1 + s,), 0) + c * cs
            val = normalize(q, clean(words))
            rep.add("antipode", f"m({side})Delta({g})", val == want, {"value": _json_tensor(val)})

    for name, r in rels.items():
        img: dict = {}
        for w, c in r.items():
            for s, cs in _antipode_word(antipode, w).items():
                img[(s,)] = img.get((s,), 0) + c * cs
        val = normalize(q, clean(img))
        rep.add("antipode_antihomomorphism", name, not val, {"residual": _json_tensor(val)} if val else {})
    return rep


def qsl2_trunc_invert(q, N: int) -> HopfReport:
    """In the truncation ``b^N = c^N = 0``: the geometric series inverts ``1 + a^{-1}b (x) a^{-1}c``."""
    q = _check_q(q)
    if N < 1:
        raise ValueError("N must be >= 1")
    mul = _mul_fn(q)

    def tmul(x, y):
        out = t_mul(x, y, [mul, mul])
        return {k: v for k, v in out.items() if all(f[1] < N and f[2] < N for f in k)}

    one = {((0, 0, 0), (0, 0, 0)): Fraction(1)}
    u = {((-1, 1, 0), (-1, 0, 1)): Fraction(1)}  # a^{-1}b (x) a^{-1}c
    X = t_add(one, u)
    Y: dict = {}
    power = one
    for n in range(N):
        Y = t_add(Y, t_scale(power, (-1) ** n))
        power = tmul(power, u)
    rep = HopfReport("qsl2_trunc", {"q": rational_to_json(q), "N": N})
    rep.add("inverse", "X*Y", tmul(X, Y) == one)
    rep.add("inverse", "Y*X", tmul(Y, X) == one)
    delta_a = {((1, 0, 0), (1, 0, 0)): Fraction(1), ((0, 1, 0), (0, 0, 1)): Fraction(1)}
    ainv = {((-1, 0, 0), (-1, 0, 0)): Fraction(1)}
    W = tmul(Y, ainv)
    rep.add("inverse", "Delta(a)*W", tmul(delta_a, W) == one)
    rep.add("inverse", "W*Delta(a)", tmul(W, delta_a) == one)
    rep.params["inverse"] = _json_tensor(W)
    return rep
