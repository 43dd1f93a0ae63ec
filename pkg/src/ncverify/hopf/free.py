"""Primitive Hopf structure on the free algebra, checked on words of length <= L.

Words are tuples of generator indices 1..k.  Delta(e_i) = e_i(x)1 + 1(x)e_i
extends to the unshuffle coproduct; S(w) = (-1)^|w| reversed(w).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ..freealg import all_words
from .core import HopfReport, t_add, t_map, t_mul, t_sub


def _concat(u: tuple, v: tuple) -> dict:
    return {u + v: Fraction(1)}


_M2 = [_concat, _concat]


def unshuffle(w: tuple) -> dict:
    """Sum over position subsets I of ``w_I (x) w_{not I}``."""
    out: dict = {}
    n = len(w)
    for r in range(n + 1):
        for idx in combinations(range(n), r):
            s = set(idx)
            key = (tuple(w[i] for i in idx), tuple(w[i] for i in range(n) if i not in s))
            out[key] = out.get(key, 0) + 1
    return out


def delta_by_product(w: tuple) -> dict:
    out = {((), ()): Fraction(1)}
    for g in w:
        out = t_mul(out, {((g,), ()): Fraction(1), ((), (g,)): Fraction(1)}, _M2)
    return out


def counit(w: tuple) -> Fraction:
    return Fraction(0 if w else 1)


def antipode(w: tuple) -> dict:
    return {tuple(reversed(w)): Fraction((-1) ** len(w))}


def free_primitive_check(k: int, L: int) -> HopfReport:
    if k < 1 or L < 1:
        raise ValueError("need k >= 1 and L >= 1")
    rep = HopfReport("free", {"k": k, "L": L})
    words = [tuple(w) for w in all_words(k, L)]

    for w in words:
        rep.add("delta_homomorphism", f"unshuffle{list(w)}", unshuffle(w) == delta_by_product(w))
    bad = []
    for u in words:
        for v in words:
            if len(u) + len(v) <= L and t_sub(unshuffle(u + v), t_mul(unshuffle(u), unshuffle(v), _M2)):
                bad.append([list(u), list(v)])
    rep.add("delta_homomorphism", "Delta(uv)=Delta(u)Delta(v)", not bad, {"failures": bad[:5]})

    for w in words:
        d = unshuffle(w)
        left = t_map(d, [lambda x: unshuffle(x), None])
        right = t_map(d, [None, lambda x: unshuffle(x)])
        rep.add("coassociativity", str(list(w)), not t_sub(left, right))

    for w in words:
        d = unshuffle(w)
        left = t_map(d, [lambda x: {(): counit(x)}, None])
        right = t_map(d, [None, lambda x: {(): counit(x)}])
        rep.add("counit", f"(eps x 1)Delta{list(w)}", left == {(w,): 1})
        rep.add("counit", f"(1 x eps)Delta{list(w)}", right == {(w,): 1})
    rep.add("counit", "eps multiplicative", all(counit(u + v) == counit(u) * counit(v) for u in words for v in words))

    for w in words:
        want = {(): counit(w)} if counit(w) else {}
        for side in ("S x 1", "1 x S"):
            val: dict = {}
            for (x, y), c in unshuffle(w).items():
                img = antipode(x) if side == "S x 1" else antipode(y)
                for s, cs in img.items():
                    key = s + y if side == "S x 1" else x + s
                    val = t_add(val, {key: c * cs})
            rep.add("antipode", f"m({side})Delta{list(w)}", val == want)

    bad = []
    for u in words:
        for v in words:
            if len(u) + len(v) <= L:
                (su, cu), = antipode(u).items()
                (sv, cv), = antipode(v).items()
                if antipode(u + v) != {sv + su: cu * cv}:
                    bad.append([list(u), list(v)])
    rep.add("antipode_antihomomorphism", "S(uv)=S(v)S(u)", not bad, {"failures": bad[:5]})
    return rep
