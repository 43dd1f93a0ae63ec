"""Parametrized representations of the free algebra into the path algebras of Q_m.

``ThetaFamily(k, m)`` sends ``e_i`` to ``sum_{delta,p} t_{delta,p,i} q_{delta,p} + v``
(``v`` the sum of all arrows), optionally shifted by ``lambda_i``.  All
parameters are formal, so every check below is an exact polynomial identity.

Label tuples indexing the paths ``v_{delta'}`` have length ``m + 1``: a path
through layers ``1..m+1`` visits ``m + 1`` vertices.
"""
from __future__ import annotations

import gc
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Sequence

from . import linalg
from .errors import BadShape, GeneratorMismatch
from .freealg import DeltaIndex, NCPoly, betas_up_to, delta_set, g_expand, phi_expand
from .quiver import PathElem, Quiver, build_qm, ideal_power_membership, qm_arrow, qm_label_path, qm_vertex, Q0_VERTEX
from .scalars import K_LAMBDA, K_MU, ONE, ParamPoly, Var, lam, mu, tvar


class ThetaFamily:
    """The homomorphism family ``theta_t`` (or ``theta~_{lambda,t}``) into ``RQ_m``."""

    def __init__(self, k: int, m: int, with_lambda: bool = False):
        if k < 1 or m < 0:
            raise ValueError("need k >= 1 and m >= 0")
        self.k = k
        self.m = m
        self.with_lambda = with_lambda or m == 0
        self.quiver: Quiver = build_qm(k, m)
        self.deltas = delta_set(k)
        self._word_cache: dict[tuple, PathElem] = {}
        self._g_cache: dict[tuple, PathElem] = {}
        self.unit = PathElem.unit(self.quiver)
        self.v = PathElem.zero(self.quiver)
        for a in self.quiver.arrows:
            self.v = self.v + PathElem.arrow(self.quiver, a.label)
        self.gens = [self._generator_image(i) for i in range(1, k + 1)]
        self._word_cache[()] = self.unit

    def _generator_image(self, i: int) -> PathElem:
        q = self.quiver
        if self.m == 0:
            return self.unit * ParamPoly.var(lam(i))
        terms = {}
        for p in range(1, self.m + 2):
            for d in self.deltas:
                terms[q.vertex_path(qm_vertex(d, p))] = ParamPoly.var(tvar(d, p, i))
        x = PathElem(q, terms) + self.v
        if self.with_lambda:
            x = x + self.unit * ParamPoly.var(lam(i))
        return x

    # -- derived parameters --------------------------------------------------
    def t(self, delta, p: int, i: int) -> ParamPoly:
        return ParamPoly.var(tvar(delta, p, i))

    def s(self, delta, delta2, p: int, i: int) -> ParamPoly:
        """``t_{delta,p,i} - t_{delta',p+1,i}``."""
        return self.t(delta, p, i) - self.t(delta2, p + 1, i)

    def y(self, delta0, delta, delta2, p: int) -> ParamPoly:
        l0, j0 = delta0
        return self.s(delta, delta2, p, l0) - self.s(delta, delta2, p, j0)

    def arrow(self, delta, delta2, p: int) -> PathElem:
        return PathElem.arrow(self.quiver, qm_arrow(delta, delta2, p))

    def label_path(self, labels: Sequence) -> PathElem:
        return PathElem.basis(self.quiver, qm_label_path(self.quiver, labels))

    def label_tuples(self) -> list[tuple]:
        return list(itertools.product(self.deltas, repeat=self.m + 1))

    # -- evaluation ------------------------------------------------------------
    def word_image(self, w: tuple) -> PathElem:
        cache = self._word_cache
        if w in cache:
            return cache[w]
        # longest cached prefix
        n = len(w) - 1
        while w[:n] not in cache:
            n -= 1
        x = cache[w[:n]]
        for j in range(n, len(w)):
            if not x.is_zero():
                x = x * self.gens[w[j] - 1]
            cache[w[: j + 1]] = x
        return x

    def image(self, x: NCPoly) -> PathElem:
        if x.k > self.k:
            for w in x.terms:
                if any(a > self.k for a in w):
                    raise GeneratorMismatch(f"word {w} uses a generator beyond e_{self.k}")
        return PathElem.lincomb(self.quiver, [(self.word_image(w), c) for w, c in x.terms.items()])

    def g_image(self, delta, beta) -> PathElem:
        key = (tuple(delta), tuple(beta))
        if key not in self._g_cache:
            self._g_cache[key] = self.image(g_expand(delta, beta, self.k))
        return self._g_cache[key]

    def power_image(self, alpha: Sequence[int]) -> PathElem:
        word = tuple(i + 1 for i, a in enumerate(alpha) for _ in range(a))
        return self.word_image(word)


@lru_cache(maxsize=16)
def family(k: int, m: int, with_lambda: bool = False) -> ThetaFamily:
    return ThetaFamily(k, m, with_lambda)


def theta_eval(fam: ThetaFamily, x: NCPoly) -> PathElem:
    return fam.image(x)


# -- lemma checks ----------------------------------------------------------------


@dataclass
class CaseResult:
    id: str
    passed: bool
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        return {"id": self.id, "status": self.status, "detail": self.detail}


def _fmt(seq) -> str:
    return "(" + ",".join(str(x) for x in seq) + ")"


def _factors_id(factors) -> str:
    return "[" + ";".join(f"{_fmt(d)}{_fmt(b)}" for d, b in factors) + "]"


def gbete_expected(fam: ThetaFamily, delta0, beta) -> PathElem:
    """``sum_{delta,delta',p} y_{delta0 delta delta' p} s^beta v_{delta delta' p}``."""
    out = PathElem.zero(fam.quiver)
    l0 = DeltaIndex(*delta0).l
    for p in range(1, fam.m + 1):
        for d in fam.deltas:
            for d2 in fam.deltas:
                c = fam.y(delta0, d, d2, p)
                for i in range(1, l0 + 1):
                    if beta[i - 1]:
                        c = c * fam.s(d, d2, p, i) ** beta[i - 1]
                out = out + fam.arrow(d, d2, p) * c
    return out


def verify_teofg(k: int, m: int, delta0, beta) -> CaseResult:
    """theta_t(g) lies in I and agrees with the closed form modulo I^2."""
    delta0 = DeltaIndex(*delta0).check(k)
    beta = tuple(beta)
    if len(beta) != delta0.l:
        raise BadShape("beta has the wrong length")
    fam = family(k, m)
    img = fam.g_image(delta0, beta)
    residual = img - gbete_expected(fam, delta0, beta)
    in_i = ideal_power_membership(img, 1)
    in_i2 = ideal_power_membership(residual, 2)
    detail: dict[str, Any] = {
        "in_I": in_i,
        "residual_in_I2": in_i2,
        "residual_zero": residual.is_zero(),
    }
    if not (in_i and in_i2):
        detail["residual"] = residual.to_json()
    return CaseResult(f"teofg/k={k}/m={m}/d={_fmt(delta0)}/b={_fmt(beta)}", in_i and in_i2, detail)


def wtelawn_rhs(fam: ThetaFamily, factors) -> PathElem:
    out = PathElem.zero(fam.quiver)
    m = len(factors)
    for labels in fam.label_tuples():
        c = ONE
        for p in range(1, m + 1):
            delta, beta = factors[p - 1]
            a, b = labels[p - 1], labels[p]
            c = c * fam.y(delta, a, b, p)
            for i, e in enumerate(beta, start=1):
                if e:
                    c = c * fam.s(a, b, p, i) ** e
            if c.is_zero():
                break
        if not c.is_zero():
            out = out + fam.label_path(labels) * c
    return out


def product_image(fam: ThetaFamily, factors, route: str = "factors") -> PathElem:
    """theta_t(g_1 ... g_m), by multiplying factor images or by expanding into words."""
    if route == "words":
        return fam.image(phi_expand((), [(d, b) for d, b in factors], fam.k))
    x = fam.unit
    for d, b in factors:
        x = x * fam.g_image(d, b)
        if x.is_zero():
            break
    return x


def verify_wtelawn(k: int, m: int, factors, route: str = "factors") -> CaseResult:
    factors = [(DeltaIndex(*d).check(k), tuple(b)) for d, b in factors]
    if len(factors) != m:
        raise BadShape("need exactly m factors")
    fam = family(k, m)
    lhs = product_image(fam, factors, route)
    rhs = wtelawn_rhs(fam, factors)
    diff = lhs - rhs
    detail: dict[str, Any] = {"terms": len(rhs.terms), "route": route}
    if not diff.is_zero():
        detail["difference"] = diff.to_json()
    return CaseResult(f"wtelawn/k={k}/m={m}/f={_factors_id(factors)}", diff.is_zero(), detail)


def _split_monomial(mono) -> tuple[dict, dict, list]:
    lam_exp: dict[int, int] = {}
    mu_exp: dict[tuple[int, int], int] = {}
    other = []
    for v, e in mono:
        if v.kind == K_LAMBDA:
            lam_exp[v.idx[0]] = e
        elif v.kind == K_MU:
            mu_exp[v.idx] = e
        else:
            other.append((v, e))
    return lam_exp, mu_exp, other


def _phim_tree(fam: ThetaFamily, deltas, h: ParamPoly) -> dict:
    """Nest the monomials of h as alpha -> beta^1 -> ... -> beta^m -> coefficient."""
    k = fam.k
    tree: dict = {}
    for mono, c in h.terms.items():
        lam_exp, mu_exp, other = _split_monomial(mono)
        if other:
            raise BadShape(f"h may only involve lambda and mu variables, found {other}")
        if any(i > k for i in lam_exp):
            raise BadShape("lambda index beyond k")
        keys = [tuple(lam_exp.get(i, 0) for i in range(1, k + 1))]
        for p, d in enumerate(deltas, start=1):
            keys.append(tuple(mu_exp.pop((p, i), 0) for i in range(1, d.l + 1)))
        if mu_exp:
            raise BadShape(f"mu variables {sorted(mu_exp)} do not match the factor shapes")
        node = tree
        for key in keys[:-1]:
            node = node.setdefault(key, {})
        node[keys[-1]] = c
    return tree


def phim_lhs(fam: ThetaFamily, deltas, h: ParamPoly, route: str = "factors") -> PathElem:
    """theta~_{lambda,t}(Phi_delta(h)).

    The factor route groups h Horner-style so each factor image multiplies a
    partial sum; the word route expands every PBW monomial into words.
    """
    k, q = fam.k, fam.quiver
    tree = _phim_tree(fam, deltas, h)
    if route == "words":
        items = []

        def walk(node, keys):
            for key, sub in node.items():
                if isinstance(sub, dict):
                    walk(sub, keys + [key])
                else:
                    alpha, betas = (keys + [key])[0], (keys + [key])[1:]
                    items.append((fam.image(phi_expand(alpha, list(zip(deltas, betas)), k)), sub))

        walk(tree, [])
        return PathElem.lincomb(q, items)

    def level(node, p: int) -> PathElem:
        # p = 0 is the commutative part, p >= 1 the p-th commutator factor
        items = []
        for key, sub in node.items():
            img = fam.power_image(key) if p == 0 else fam.g_image(deltas[p - 1], key)
            if isinstance(sub, dict):
                rest = level(sub, p + 1)
                if not rest.is_zero() and not img.is_zero():
                    items.append((img * rest, 1))
            else:
                items.append((img, sub))
        return PathElem.lincomb(q, items)

    return level(tree, 0)


def phim_rhs(fam: ThetaFamily, deltas, h: ParamPoly) -> PathElem:
    k, m = fam.k, fam.m
    if m == 0:
        return fam.unit * h
    items = []
    for labels in fam.label_tuples():
        weight = ONE
        for p in range(1, m + 1):
            weight = weight * fam.y(deltas[p - 1], labels[p - 1], labels[p], p)
        if weight.is_zero():
            continue
        sub: dict[Var, ParamPoly] = {
            lam(i): ParamPoly.var(lam(i)) + fam.t(labels[0], 1, i) for i in range(1, k + 1)
        }
        for p in range(1, m + 1):
            for i in range(1, deltas[p - 1].l + 1):
                sub[mu(p, i)] = fam.s(labels[p - 1], labels[p], p, i)
        items.append((fam.label_path(labels), weight * h.subs(sub)))
    return PathElem.lincomb(fam.quiver, items)


def verify_phim(k: int, m: int, deltas, h: ParamPoly, route: str = "factors") -> CaseResult:
    deltas = [DeltaIndex(*d).check(k) for d in deltas]
    if len(deltas) != m:
        raise BadShape("need exactly m labels")
    fam = family(k, m, True)
    lhs = phim_lhs(fam, deltas, h, route)
    rhs = phim_rhs(fam, deltas, h)
    diff = lhs - rhs
    detail: dict[str, Any] = {"monomials": len(h.terms)}
    if not diff.is_zero():
        detail["difference"] = diff.to_json()
    return CaseResult(f"phim/k={k}/m={m}/d={_factors_id([(d, ()) for d in deltas])}", diff.is_zero(), detail)


def split_h_parts(k: int, deltas: Sequence[DeltaIndex], beta_max: int, alpha_max: int = 1) -> list[ParamPoly]:
    """Factors a(lambda), b_1(mu_1), ..., b_m(mu_m) whose product uses every small exponent shape."""
    parts = []
    coeff = 1
    a = ParamPoly()
    for alpha in betas_up_to(k, alpha_max):
        mono = ONE
        for i, e in enumerate(alpha, start=1):
            if e:
                mono = mono * ParamPoly.var(lam(i), e)
        a = a + mono * coeff
        coeff += 1
    parts.append(a)
    for p, d in enumerate(deltas, start=1):
        b = ParamPoly()
        for beta in betas_up_to(d.l, beta_max):
            mono = ONE
            for i, e in enumerate(beta, start=1):
                if e:
                    mono = mono * ParamPoly.var(mu(p, i), e)
            b = b + mono * coeff
            coeff += 1
        parts.append(b)
    return parts


def verify_phim_split(k: int, m: int, deltas, parts: Sequence[ParamPoly]) -> CaseResult:
    """The substitution identity for ``h = a(lambda) b_1(mu_1) ... b_m(mu_m)``.

    Phi_delta is multiplicative over the separated variable groups, so the
    left side is a product of m + 1 images and the right side a product of
    substituted factors; no full expansion of h is needed.
    """
    deltas = [DeltaIndex(*d).check(k) for d in deltas]
    if len(deltas) != m or len(parts) != m + 1:
        raise BadShape("need m labels and m + 1 factors")
    fam = family(k, m, True)
    lhs = _phim_part(fam, 0, None, parts[0])
    for p in range(1, m + 1):
        if lhs.is_zero():
            break
        lhs = lhs * _phim_part(fam, p, deltas[p - 1], parts[p])
    items = []
    if m == 0:
        rhs = fam.unit * parts[0]
    else:
        for labels in fam.label_tuples():
            weight = ONE
            for p in range(1, m + 1):
                weight = weight * fam.y(deltas[p - 1], labels[p - 1], labels[p], p)
            if weight.is_zero():
                continue
            coeff = weight * parts[0].subs(
                {lam(i): ParamPoly.var(lam(i)) + fam.t(labels[0], 1, i) for i in range(1, k + 1)}
            )
            for p in range(1, m + 1):
                sub = {mu(p, i): fam.s(labels[p - 1], labels[p], p, i) for i in range(1, deltas[p - 1].l + 1)}
                coeff = coeff * parts[p].subs(sub)
            items.append((fam.label_path(labels), coeff))
        rhs = PathElem.lincomb(fam.quiver, items)
    diff = lhs - rhs
    detail: dict[str, Any] = {"split": True, "factor_terms": [len(x.terms) for x in parts]}
    if not diff.is_zero():
        detail["difference"] = diff.to_json()
    return CaseResult(f"phim/k={k}/m={m}/d={_factors_id([(d, ()) for d in deltas])}", diff.is_zero(), detail)


def _phim_part(fam: ThetaFamily, p: int, delta, part: ParamPoly) -> PathElem:
    items = []
    for mono, c in part.terms.items():
        lam_exp, mu_exp, other = _split_monomial(mono)
        if p == 0:
            if mu_exp or other or any(i > fam.k for i in lam_exp):
                raise BadShape("the first factor must be a polynomial in lambda")
            items.append((fam.power_image(tuple(lam_exp.get(i, 0) for i in range(1, fam.k + 1))), c))
        else:
            if lam_exp or other or any(q != p or i > delta.l for q, i in mu_exp):
                raise BadShape(f"factor {p} must be a polynomial in mu_{p},1..mu_{p},{delta.l}")
            beta = tuple(mu_exp.get((p, i), 0) for i in range(1, delta.l + 1))
            items.append((fam.g_image(delta, beta), c))
    return PathElem.lincomb(fam.quiver, items)


def verify_annihilation(k: int, m: int, alpha, factors) -> CaseResult:
    """theta~ of a PBW product with more than m commutator factors vanishes in RQ_m."""
    factors = [(DeltaIndex(*d).check(k), tuple(b)) for d, b in factors]
    if len(factors) <= m:
        raise BadShape("annihilation needs more than m factors")
    fam = family(k, m, True)
    img = fam.image(phi_expand(alpha, factors, k))
    detail: dict[str, Any] = {}
    if not img.is_zero():
        detail["image"] = img.to_json()
    return CaseResult(
        f"annhn/k={k}/m={m}/a={_fmt(alpha)}/f={_factors_id(factors)}", img.is_zero(), detail
    )


# -- injectivity apparatus -----------------------------------------------------------


@dataclass
class FMatrix:
    rows: list  # label tuples of length m+1
    cols: list  # label tuples of length m
    entries: list  # list[list[ParamPoly]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def evaluate(self, assignment) -> list[list[Fraction]]:
        return [[e.eval(assignment) for e in row] for row in self.entries]


def f_matrix(k: int, m: int) -> FMatrix:
    """``F = (prod_p y_{delta_p delta'_p delta'_{p+1} p})`` indexed by (delta', delta)."""
    if k < 2 or m < 1:
        raise ValueError("f_matrix needs k >= 2 and m >= 1")
    fam = family(k, m)
    rows = fam.label_tuples()
    cols = list(itertools.product(fam.deltas, repeat=m))
    entries = []
    for labels in rows:
        row = []
        for deltas in cols:
            c = ONE
            for p in range(1, m + 1):
                c = c * fam.y(deltas[p - 1], labels[p - 1], labels[p], p)
            row.append(c)
        entries.append(row)
    return FMatrix(rows, cols, entries)


def random_t_point(k: int, m: int, rng: random.Random) -> dict[Var, Fraction]:
    pt = {}
    for d in delta_set(k):
        for p in range(1, m + 2):
            for i in range(1, k + 1):
                pt[tvar(d, p, i)] = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
    return pt


def f_matrix_witness(k: int, m: int, seed: int = 0) -> CaseResult:
    """Nonvanishing witness: full column rank (and det != 0 when square) at a random point.

    For k >= 3 the columns are dependent (y for (3,1) is the sum of those for
    (2,1) and (3,2)), so this reports FAIL there; only k = 2 gives a square F.
    """
    rng = random.Random(seed)
    fm = f_matrix(k, m)
    vals = fm.evaluate(random_t_point(k, m, rng))
    nrows, ncols = fm.shape
    r = linalg.rank(vals, ncols)
    detail: dict[str, Any] = {"shape": [nrows, ncols], "rank": r, "seed": seed}
    ok = r == ncols
    if nrows == ncols:
        d = linalg.det(vals)
        detail["det"] = f"{d.numerator}/{d.denominator}"
        ok = ok and d != 0
    return CaseResult(f"fmatrix/k={k}/m={m}", ok, detail)


def _linear_row(form: ParamPoly, coords: list[Var]) -> list[Fraction]:
    row = [Fraction(0)] * len(coords)
    pos = {v: i for i, v in enumerate(coords)}
    for mono, c in form.terms.items():
        if len(mono) != 1 or mono[0][1] != 1:
            raise ValueError("not a linear form")
        row[pos[mono[0][0]]] = Fraction(c)
    return row


def reparam_rank(k: int, m: int) -> CaseResult:
    """Surjectivity of ``(lambda, t) -> (lambda + t_{delta'_1,1}, t_{delta'_p,p} - t_{delta'_{p+1},p+1})``."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1, m >= 0")
    coords = [lam(i) for i in range(1, k + 1)]
    deltas = delta_set(k)
    if m == 0 or not deltas:
        ident = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
        r = linalg.rank(ident, k)
        return CaseResult(f"reparam/k={k}/m={m}", r == k, {"checked": 1, "rank": r, "outputs": k})
    coords += [tvar(d, p, i) for d in deltas for p in range(1, m + 2) for i in range(1, k + 1)]
    fam = family(k, m)
    failures = []
    checked = 0
    for labels in fam.label_tuples():
        for ds in itertools.product(deltas, repeat=m):
            forms = [ParamPoly.var(lam(i)) + fam.t(labels[0], 1, i) for i in range(1, k + 1)]
            for p in range(1, m + 1):
                for i in range(1, ds[p - 1].l + 1):
                    forms.append(fam.s(labels[p - 1], labels[p], p, i))
            rows = [_linear_row(f, coords) for f in forms]
            r = linalg.rank(rows, len(coords))
            checked += 1
            if r != len(forms):
                failures.append({"labels": [list(x) for x in labels], "deltas": [list(x) for x in ds], "rank": r})
    detail: dict[str, Any] = {"checked": checked, "inputs": len(coords)}
    if failures:
        detail["failures"] = failures[:10]
    return CaseResult(f"reparam/k={k}/m={m}", not failures, detail)


# -- suite ---------------------------------------------------------------------------


def sample_h(k: int, deltas: Sequence[DeltaIndex], beta_max: int, alpha_max: int = 1) -> ParamPoly:
    """Deterministic test polynomial in lambda and mu covering all small exponent shapes."""
    h = ParamPoly()
    coeff = 1
    alphas = betas_up_to(k, alpha_max)
    beta_lists = [betas_up_to(d.l, beta_max) for d in deltas]
    for alpha in alphas:
        for betas in itertools.product(*beta_lists):
            mono = ONE
            for i, a in enumerate(alpha, start=1):
                if a:
                    mono = mono * ParamPoly.var(lam(i), a)
            for p, b in enumerate(betas, start=1):
                for i, e in enumerate(b, start=1):
                    if e:
                        mono = mono * ParamPoly.var(mu(p, i), e)
            h = h + mono * Fraction(coeff, 1 + coeff % 3)
            coeff += 1
    return h


def appendix_cases(k: int, m: int, beta_max: int) -> list[tuple[str, tuple]]:
    """Case descriptors for the appendix suite, in a fixed order."""
    cases: list[tuple[str, tuple]] = []
    deltas = delta_set(k)
    if m >= 1:
        for d in deltas:
            for b in betas_up_to(d.l, beta_max):
                cases.append(("teofg", (k, m, tuple(d), b)))
        per_factor = [(tuple(d), b) for d in deltas for b in betas_up_to(d.l, beta_max)]
        for fs in itertools.product(per_factor, repeat=m):
            cases.append(("wtelawn", (k, m, fs)))
    for ds in itertools.product(deltas, repeat=m):
        cases.append(("phim", (k, m, tuple(tuple(d) for d in ds), beta_max)))
    for ds in itertools.product(deltas, repeat=m + 1):
        cases.append(("annhn", (k, m, (0,) * k, tuple((tuple(d), (0,) * d.l) for d in ds))))
    if deltas:
        d0 = deltas[-1]
        cases.append(("annhn", (k, m, (1,) + (0,) * (k - 1), tuple((tuple(d0), (1,) + (0,) * (d0.l - 1)) for _ in range(m + 1)))))
    if m >= 1 and k == 2:
        cases.append(("fmatrix", (k, m)))
    if m >= 1 or k >= 1:
        cases.append(("reparam", (k, m)))
    return cases


def run_case(kind: str, args: tuple) -> dict:
    if kind == "teofg":
        res = verify_teofg(*args)
    elif kind == "wtelawn":
        k, m, fs = args
        res = verify_wtelawn(k, m, fs)
    elif kind == "phim":
        k, m, ds, beta_max = args
        ds = [DeltaIndex(*d) for d in ds]
        res = verify_phim_split(k, m, ds, split_h_parts(k, ds, beta_max))
    elif kind == "annhn":
        res = verify_annihilation(*args)
    elif kind == "fmatrix":
        res = f_matrix_witness(*args)
    elif kind == "reparam":
        res = reparam_rank(*args)
    else:
        raise ValueError(f"unknown case kind {kind}")
    return res.to_json()


@contextmanager
def _gc_paused():
    # the term maps are acyclic, so refcounting frees them; generational
    # passes over millions of live coefficients cost a third of the runtime
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def _run_chunk(chunk: list[tuple[str, tuple]]) -> list[dict]:
    with _gc_paused():
        return [run_case(kind, args) for kind, args in chunk]


def run_appendix(k: int, m: int, beta_max: int, workers: int = 1) -> list[dict]:
    """Run every appendix case; results come back in case order regardless of workers."""
    cases = appendix_cases(k, m, beta_max)
    if workers <= 1 or len(cases) < 2:
        return _run_chunk(cases)
    # contiguous chunks keep each worker's family caches warm
    n = min(workers * 4, len(cases))
    size = -(-len(cases) // n)
    chunks = [cases[i : i + size] for i in range(0, len(cases), size)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        results = list(ex.map(_run_chunk, chunks))
    return [r for chunk in results for r in chunk]
