"""Triangular representations of the deformed af_1 relation.

The algebra has generators e_1, e_2 with ``[e_1, e_2] = sinh(hbar e_2) / sinh(hbar)``.
With ``sigma`` standing for ``1/sinh(hbar)`` and ``kappa = hbar * sigma`` the
relation reads ``[e_1, e_2] = sigma * sinh(hbar e_2)``, which is polynomial.

``pi_p`` sends e_1 to ``kappa X_p`` and e_2 to ``Z_p = E_p + alpha_2 E_p^2 + ...``
in ``T_{p+1}``, with the alphas fixed by ``[X_p, Z_p] = sinh(hbar Z_p) / hbar``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .errors import BadShape, NotNilpotent
from .scalars import HBAR, ONE, SIGMA, ParamPoly, Var, lam, mu

LAMBDA = lam(1)
KAPPA = ParamPoly.var(HBAR) * ParamPoly.var(SIGMA)


class UTMatrix:
    """Square upper triangular matrix over ParamPoly."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        self.n = n
        self.rows = [[ParamPoly.coerce(x) for x in r] for r in rows]
        if any(len(r) != n for r in self.rows):
            raise BadShape("matrix must be square")
        for i in range(n):
            for j in range(i):
                if not self.rows[i][j].is_zero():
                    raise BadShape(f"entry ({i},{j}) below the diagonal is nonzero")

    @classmethod
    def _raw(cls, rows) -> "UTMatrix":
        m = object.__new__(cls)
        m.n = len(rows)
        m.rows = rows
        return m

    @classmethod
    def zero(cls, n: int) -> "UTMatrix":
        return cls._raw([[ParamPoly() for _ in range(n)] for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "UTMatrix":
        m = cls.zero(n)
        for i in range(n):
            m.rows[i][i] = ONE
        return m

    @classmethod
    def diag(cls, entries: Sequence) -> "UTMatrix":
        m = cls.zero(len(entries))
        for i, x in enumerate(entries):
            m.rows[i][i] = ParamPoly.coerce(x)
        return m

    @classmethod
    def jordan(cls, n: int) -> "UTMatrix":
        """The nilpotent cell with ones on the superdiagonal."""
        m = cls.zero(n)
        for i in range(n - 1):
            m.rows[i][i + 1] = ONE
        return m

    def __getitem__(self, ij) -> ParamPoly:
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "UTMatrix"):
        if not isinstance(other, UTMatrix) or other.n != self.n:
            raise BadShape("matrix size mismatch")

    def __add__(self, other) -> "UTMatrix":
        self._check(other)
        n = self.n
        return UTMatrix._raw([[self.rows[i][j] + other.rows[i][j] for j in range(n)] for i in range(n)])

    def __neg__(self) -> "UTMatrix":
        return UTMatrix._raw([[-x for x in r] for r in self.rows])

    def __sub__(self, other) -> "UTMatrix":
        return self + (-other)

    def __mul__(self, other) -> "UTMatrix":
        n = self.n
        if not isinstance(other, UTMatrix):
            c = ParamPoly.coerce(other)
            return UTMatrix._raw([[x * c for x in r] for r in self.rows])
        self._check(other)
        a, b = self.rows, other.rows
        out = [[ParamPoly() for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                out[i][j] = ParamPoly.sum(a[i][k] * b[k][j] for k in range(i, j + 1) if a[i][k] and b[k][j])
        return UTMatrix._raw(out)

    def __rmul__(self, other) -> "UTMatrix":
        return self * other

    def __pow__(self, e: int) -> "UTMatrix":
        out = UTMatrix.identity(self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, UTMatrix):
            return self.n == other.n and self.rows == other.rows
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def is_strictly_upper(self) -> bool:
        return all(self.rows[i][i].is_zero() for i in range(self.n))

    def subs(self, mapping) -> "UTMatrix":
        return UTMatrix._raw([[x.subs(mapping) for x in r] for r in self.rows])

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "UTMatrix":
        return cls([[ParamPoly.from_json(x) for x in r] for r in data])

    def __repr__(self) -> str:
        return "UTMatrix(" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + ")"


def commutator(a: UTMatrix, b: UTMatrix) -> UTMatrix:
    return a * b - b * a


# -- formal series -------------------------------------------------------------


class FormalSeries:
    """``sum c_i x^i`` with coefficients produced on demand and cached."""

    def __init__(self, coeff: Callable[[int], object] | Sequence, name: str = "series"):
        self.name = name
        self._cache: dict[int, ParamPoly] = {}
        if callable(coeff):
            self._fn = coeff
        else:
            data = [ParamPoly.coerce(c) for c in coeff]
            self._fn = lambda i: data[i] if i < len(data) else ParamPoly()

    def coeff(self, i: int) -> ParamPoly:
        if i not in self._cache:
            self._cache[i] = ParamPoly.coerce(self._fn(i))
        return self._cache[i]

    def coefficients(self, n: int) -> list[ParamPoly]:
        return [self.coeff(i) for i in range(n)]

    @classmethod
    def sinh(cls, scale=None) -> "FormalSeries":
        """``sinh(scale * x)``; scale defaults to hbar."""
        s = ParamPoly.var(HBAR) if scale is None else ParamPoly.coerce(scale)
        return cls(lambda i: s ** i * Fraction(1, factorial(i)) if i % 2 else 0, "sinh")

    @classmethod
    def exp(cls, scale=1) -> "FormalSeries":
        s = ParamPoly.coerce(scale)
        return cls(lambda i: s ** i * Fraction(1, factorial(i)), "exp")

    @classmethod
    def arcsinh(cls) -> "FormalSeries":
        def c(i: int):
            if i % 2 == 0:
                return 0
            n = (i - 1) // 2
            return Fraction((-1) ** n * factorial(2 * n), 4 ** n * factorial(n) ** 2 * (2 * n + 1))

        return cls(c, "arcsinh")

    @classmethod
    def identity(cls) -> "FormalSeries":
        return cls(lambda i: 1 if i == 1 else 0, "x")

    def compose(self, inner: "FormalSeries", order: int) -> "FormalSeries":
        """``self(inner(x))`` through ``x^order``; ``inner`` must have no constant term."""
        if not inner.coeff(0).is_zero():
            raise ValueError("inner series must have zero constant term")
        inner_c = inner.coefficients(order + 1)
        result = [ParamPoly() for _ in range(order + 1)]
        power = [ONE] + [ParamPoly()] * order  # inner^0
        for k in range(order + 1):
            ck = self.coeff(k)
            if not ck.is_zero():
                for d in range(order + 1):
                    if power[d]:
                        result[d] = result[d] + ck * power[d]
            nxt = [ParamPoly()] * (order + 1)
            for a in range(order + 1):
                if power[a]:
                    for b in range(1, order + 1 - a):
                        if inner_c[b]:
                            nxt[a + b] = nxt[a + b] + power[a] * inner_c[b]
            power = nxt
        return FormalSeries(result, f"{self.name}o{inner.name}")


def apply_series(s: FormalSeries, N: UTMatrix) -> UTMatrix:
    """``sum c_i N^i`` for strictly upper triangular N; the sum stops at nilpotency."""
    if not N.is_strictly_upper():
        raise NotNilpotent("functional calculus needs a strictly upper triangular matrix")
    out = UTMatrix.identity(N.n) * s.coeff(0)
    power = UTMatrix.identity(N.n)
    i = 0
    while True:
        i += 1
        power = power * N
        if power.is_zero():
            return out
        c = s.coeff(i)
        if c:
            out = out + power * c


# -- coefficients of Z_p ----------------------------------------------------------


@dataclass
class AlphaTable:
    p: int
    alphas: dict  # j -> ParamPoly in hbar, for 2 <= j <= p

    def __getitem__(self, j: int) -> ParamPoly:
        if j == 1:
            return ONE
        return self.alphas[j]

    def odd(self) -> dict:
        return {j: a for j, a in self.alphas.items() if j % 2}

    def to_json(self) -> dict:
        return {"p": self.p, "alphas": {str(j): a.to_json() for j, a in sorted(self.alphas.items())}}


def x_matrix(p: int) -> UTMatrix:
    return UTMatrix.diag([p - i for i in range(p + 1)])


def z_matrix(p: int, alphas: dict) -> UTMatrix:
    E = UTMatrix.jordan(p + 1)
    Z = E
    power = E
    for j in range(2, p + 1):
        power = power * E
        a = alphas.get(j)
        if a:
            Z = Z + power * a
    return Z


def solve_alphas(p: int) -> AlphaTable:
    """Solve ``[X_p, Z_p] = sinh(hbar Z_p) / hbar`` order by order in (p+1)x(p+1) matrices.

    Entry (0, j) of both sides involves alpha_j linearly (as ``j alpha_j`` and
    ``alpha_j``) plus terms in alpha_i, i < j; the difference gives alpha_j.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    X = x_matrix(p)
    sinh = FormalSeries.sinh()
    hbar = ParamPoly.var(HBAR)
    alphas: dict[int, ParamPoly] = {}
    for j in range(2, p + 1):
        Z = z_matrix(p, alphas)  # alpha_j still 0
        lhs = commutator(X, Z)[0, j]
        rhs = _div_hbar(apply_series(sinh, Z)[0, j], hbar)
        # with alpha_j included: lhs + j a = rhs + a
        alphas[j] = (rhs - lhs) * Fraction(1, j - 1)
    return AlphaTable(p, alphas)


def _div_hbar(x: ParamPoly, hbar: ParamPoly) -> ParamPoly:
    out = {}
    for mono, c in x.terms.items():
        d = dict(mono)
        if d.get(HBAR, 0) < 1:
            raise ValueError("expected a multiple of hbar")
        d[HBAR] -= 1
        out[tuple((v, e) for v, e in sorted(d.items()) if e)] = c
    return ParamPoly(out)


def alphas_by_series(n: int) -> dict[int, ParamPoly]:
    """Same alphas from truncated power series in E alone (no matrices)."""
    hbar = ParamPoly.var(HBAR)
    alphas: dict[int, ParamPoly] = {1: ONE}
    for j in range(2, n + 1):
        z = [ParamPoly()] + [alphas.get(i, ParamPoly()) for i in range(1, j + 1)]
        total = ParamPoly()
        power = z
        for k in range(2, j + 1):
            nxt = [ParamPoly()] * (j + 1)
            for a in range(j + 1):
                if power[a]:
                    for b in range(1, j + 1 - a):
                        if z[b]:
                            nxt[a + b] = nxt[a + b] + power[a] * z[b]
            power = nxt
            if k % 2:
                total = total + power[j] * hbar ** (k - 1) * Fraction(1, factorial(k))
        alphas[j] = total * Fraction(1, j - 1)
    del alphas[1]
    return alphas


# -- the representations -------------------------------------------------------------


@dataclass
class PiRep:
    p: int
    e1: UTMatrix
    e2: UTMatrix
    alphas: AlphaTable | None = None
    with_lambda: bool = False

    def to_json(self) -> dict:
        return {"p": self.p, "with_lambda": self.with_lambda, "e1": self.e1.to_json(), "e2": self.e2.to_json()}


_ALPHA_CACHE: dict[int, AlphaTable] = {}


def _alphas(p: int) -> AlphaTable:
    if p not in _ALPHA_CACHE:
        _ALPHA_CACHE[p] = solve_alphas(p)
    return _ALPHA_CACHE[p]


def build_pi(p: int, with_lambda: bool = False) -> PiRep:
    """``e_1 -> kappa X_p (+ lambda)``, ``e_2 -> Z_p`` in ``T_{p+1}``."""
    if p < 0:
        raise ValueError("p must be >= 0")
    lam_term = ParamPoly.var(LAMBDA) if with_lambda else ParamPoly()
    if p == 0:
        return PiRep(0, UTMatrix.diag([lam_term]), UTMatrix.zero(1), None, with_lambda)
    table = _alphas(p)
    e1 = x_matrix(p) * KAPPA + UTMatrix.identity(p + 1) * lam_term
    e2 = z_matrix(p, table.alphas)
    return PiRep(p, e1, e2, table, with_lambda)


def relation_residual(p: int, with_lambda: bool = False) -> UTMatrix:
    """``[pi(e_1), pi(e_2)] - sigma sinh(hbar pi(e_2))``; zero iff the relation holds."""
    pi = build_pi(p, with_lambda)
    return commutator(pi.e1, pi.e2) - apply_series(FormalSeries.sinh(), pi.e2) * ParamPoly.var(SIGMA)


def verify_relation(p: int, with_lambda: bool = False) -> bool:
    return relation_residual(p, with_lambda).is_zero()


# -- rho'' ----------------------------------------------------------------------------


def _poly_of_matrix(f: ParamPoly, M: UTMatrix) -> UTMatrix:
    """``f(M)`` where f is a polynomial in lambda (other variables are coefficients)."""
    coeffs = f.coeffs_in(LAMBDA)
    out = UTMatrix.zero(M.n)
    for c in reversed(coeffs):  # Horner
        out = out * M + UTMatrix.identity(M.n) * c
    return out


def theta_pi(p: int, f: Sequence[ParamPoly]) -> UTMatrix:
    """``theta~pi_p(sum_j f_j(e_1) e_2^j)``, evaluating each ``f_j`` at the matrix ``pi~(e_1)``."""
    f = [ParamPoly.coerce(x) for x in f]
    pi = build_pi(p, with_lambda=True)
    out = UTMatrix.zero(p + 1)
    zpow = UTMatrix.identity(p + 1)
    for j, fj in enumerate(f):
        if j > p:
            break  # Z_p^j = 0
        if fj:
            out = out + _poly_of_matrix(fj, pi.e1) * zpow
        zpow = zpow * pi.e2
    return out


def rho_pp(p: int, f: Sequence[ParamPoly]) -> ParamPoly:
    """Upper right entry of ``theta~pi_p(sum_j f_j(e_1) e_2^j)`` for ``f = (f_0, ..., f_p)``."""
    if len(f) != p + 1:
        raise BadShape("need f_0, ..., f_p")
    return theta_pi(p, f)[0, p]


def shift_coefficients(p: int) -> list[ParamPoly]:
    """``c_j = (Z_p^j)[0, p]``: rho''_p(f) = sum_j c_j f_j(lambda + p kappa)."""
    if p == 0:
        return [ONE]
    Z = build_pi(p).e2
    out = []
    power = UTMatrix.identity(p + 1)
    for _ in range(p + 1):
        out.append(power[0, p])
        power = power * Z
    return out


def rho_pp_closed(p: int, f: Sequence[ParamPoly]) -> ParamPoly:
    """The shift formula for rho''_p, without matrix evaluation of the f_j."""
    if len(f) != p + 1:
        raise BadShape("need f_0, ..., f_p")
    shift = {LAMBDA: ParamPoly.var(LAMBDA) + KAPPA * p}
    return ParamPoly.sum(c * ParamPoly.coerce(fj).subs(shift) for c, fj in zip(shift_coefficients(p), f) if c)


def generic_f(p: int, degree: int) -> list[ParamPoly]:
    """``f_j(lambda) = sum_{d <= degree} mu_{j,d} lambda^d`` with formal ``mu``."""
    return [
        ParamPoly.sum(ParamPoly.var(mu(j, d)) * ParamPoly.var(LAMBDA, d) for d in range(degree + 1))
        for j in range(p + 1)
    ]


@dataclass
class RhoReport:
    p_max: int
    degree: int
    per_p: list = field(default_factory=list)
    induction: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["top_coefficient_one"] and r["shift_form"] for r in self.per_p) and all(
            r["injective"] for r in self.induction
        )

    def to_json(self) -> dict:
        return {"p_max": self.p_max, "degree": self.degree, "per_p": self.per_p, "induction": self.induction, "passed": self.passed}


def verify_rho_triangular(p_max: int, degree: int = 3) -> RhoReport:
    """Coefficient extraction for rho''_p and a replay of the zero-propagation induction.

    With generic ``f_j`` the coefficient of ``mu_{j,d}`` in rho''_p must be
    ``c_j (lambda + p kappa)^d`` with ``c_p = 1``.  The induction step at p
    sets ``f_j = 0`` for ``j < p`` and checks that ``mu_{p,.} -> rho''_p`` is
    injective: its matrix in powers of lambda is unit upper triangular.
    """
    report = RhoReport(p_max, degree)
    for p in range(0, p_max + 1):
        f = generic_f(p, degree)
        rho = rho_pp(p, f)
        shifted = ParamPoly.var(LAMBDA) + KAPPA * p
        shift_form = True
        cs = []
        for j in range(p + 1):
            c0 = _mu_coefficient(rho, mu(j, 0))
            cs.append(c0)
            for d in range(degree + 1):
                got = _mu_coefficient(rho, mu(j, d))
                if got != c0 * shifted ** d:
                    shift_form = False
        report.per_p.append(
            {
                "p": p,
                "top_coefficient_one": cs[p] == 1,
                "shift_form": shift_form,
                "coefficients": [c.to_json() for c in cs],
                "prev_coefficient_zero": p == 0 or cs[p - 1].is_zero(),
            }
        )
        # induction step
        zero_lower = {mu(j, d): 0 for j in range(p) for d in range(degree + 1)}
        reduced = rho.subs(zero_lower)
        unit_upper = True
        for d in range(degree + 1):
            col = _mu_coefficient(reduced, mu(p, d)).coeffs_in(LAMBDA)
            col = col + [ParamPoly()] * (degree + 1 - len(col))
            if col[d] != 1 or any(not col[a].is_zero() for a in range(d + 1, len(col))):
                unit_upper = False
        only_fp = reduced == ParamPoly.sum(
            _mu_coefficient(reduced, mu(p, d)) * ParamPoly.var(mu(p, d)) for d in range(degree + 1)
        )
        report.induction.append({"p": p, "injective": unit_upper and only_fp})
    return report


def _mu_coefficient(x: ParamPoly, v: Var) -> ParamPoly:
    coeffs = x.coeffs_in(v)
    return coeffs[1] if len(coeffs) > 1 else ParamPoly()
