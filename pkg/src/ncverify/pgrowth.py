"""Polynomial growth of finite-dimensional algebras given by structure constants.

Over a field of characteristic zero a finite-dimensional real algebra is of
polynomial growth iff it embeds into upper triangular matrices, iff its
semisimple quotient is commutative with only real spectrum.  Everything here
works over Q: the radical is the kernel of the trace form, reality of the
spectrum is positive definiteness of the trace form on ``A/Rad A``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from sympy import Poly, QQ, Symbol, factor_list, gcdex

from . import linalg
from .errors import InvalidTable
from .scalars import as_fraction, rational_from_json, rational_to_json

POLY_GROWTH = "POLY_GROWTH"
NOT_POLY_GROWTH = "NOT_POLY_GROWTH"
QUOTIENT_NONCOMMUTATIVE = "QUOTIENT_NONCOMMUTATIVE"
SPECTRUM_NOT_REAL = "SPECTRUM_NOT_REAL"
NOT_SPLIT_OVER_Q = "NOT_SPLIT_OVER_Q"

Vec = list  # list[Fraction]


def _zero_matrix(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _is_upper(m) -> bool:
    return all(m[i][j] == 0 for i in range(len(m)) for j in range(i))


class FDAlgebra:
    """A unital associative algebra ``x_i x_j = sum_k c_ij^k x_k`` over Q.

    ``table[i][j]`` may be a dense list of length ``dim`` or a sparse
    ``{k: c}`` dict.  ``rep``, if given, is a list of square matrices (one per
    basis element) claimed to form a faithful representation; it is checked.
    """

    def __init__(self, dim: int, table, unit: Sequence, rep=None, name: str | None = None, check: bool = True):
        if not isinstance(dim, int) or dim < 1:
            raise InvalidTable("dim must be a positive integer")
        self.dim = dim
        self.name = name
        if len(table) != dim or any(len(row) != dim for row in table):
            raise InvalidTable("table must be dim x dim")
        sparse: list[list[dict]] = []
        for i in range(dim):
            srow = []
            for j in range(dim):
                entry = table[i][j]
                if isinstance(entry, Mapping):
                    items = ((int(k), v) for k, v in entry.items())
                else:
                    if len(entry) != dim:
                        raise InvalidTable(f"table[{i}][{j}] must have {dim} coefficients")
                    items = enumerate(entry)
                d = {}
                for k, v in items:
                    if not 0 <= k < dim:
                        raise InvalidTable(f"index {k} out of range in table[{i}][{j}]")
                    v = as_fraction(v)
                    if v:
                        d[k] = v
                srow.append(d)
            sparse.append(srow)
        self.table = sparse
        if len(unit) != dim:
            raise InvalidTable("unit must have dim coordinates")
        self.unit = [as_fraction(u) for u in unit]
        self.rep = None
        if rep is not None:
            self.rep = [[[as_fraction(x) for x in row] for row in mat] for mat in rep]
        if check:
            self.validate()

    # -- arithmetic -------------------------------------------------------
    def basis_vec(self, i: int) -> Vec:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def mul(self, a: Sequence, b: Sequence) -> Vec:
        out = [Fraction(0)] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = self.table[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                for k, v in row[j].items():
                    out[k] += c * v
        return out

    def left_matrix(self, a: Sequence) -> list[list[Fraction]]:
        """Matrix of ``L_a`` in the basis: column j is ``a * x_j``."""
        m = _zero_matrix(self.dim)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(self.dim):
                for k, v in self.table[i][j].items():
                    m[k][j] += ai * v
        return m

    def trace_vector(self) -> Vec:
        """``t_k = tr L_{x_k}``."""
        return [sum((self.table[k][j].get(j, 0) for j in range(self.dim)), Fraction(0)) for k in range(self.dim)]

    def trace_form(self) -> list[list[Fraction]]:
        t = self.trace_vector()
        n = self.dim
        return [[sum((v * t[k] for k, v in self.table[i][j].items()), Fraction(0)) for j in range(n)] for i in range(n)]

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i + 1, n))

    # -- validation -------------------------------------------------------
    def validate(self) -> None:
        n = self.dim
        t = self.table
        # unit
        for j in range(n):
            e = self.basis_vec(j)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise InvalidTable(f"unit does not act as identity on x_{j}")
        # associativity on all basis triples, using sparse products
        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    left: dict = {}
                    for a, c in ij.items():
                        for b, d in t[a][k].items():
                            left[b] = left.get(b, 0) + c * d
                    right: dict = {}
                    for a, c in t[j][k].items():
                        for b, d in t[i][a].items():
                            right[b] = right.get(b, 0) + c * d
                    left = {x: v for x, v in left.items() if v}
                    right = {x: v for x, v in right.items() if v}
                    if left != right:
                        raise InvalidTable(f"not associative on (x_{i}, x_{j}, x_{k})")
        if self.rep is not None:
            self._validate_rep()

    def _validate_rep(self) -> None:
        if len(self.rep) != self.dim:
            raise InvalidTable("rep needs one matrix per basis element")
        d = len(self.rep[0])
        if any(len(m) != d or any(len(r) != d for r in m) for m in self.rep):
            raise InvalidTable("rep matrices must be square of one size")
        if not self.rep_is_homomorphism(self.rep):
            raise InvalidTable("rep does not respect the structure constants")
        if linalg.rank([[x for r in m for x in r] for m in self.rep], d * d) != self.dim:
            raise InvalidTable("rep is not faithful")

    def rep_is_homomorphism(self, mats) -> bool:
        d = len(mats[0])
        ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        unit_img = _zero_matrix(d)
        for k, u in enumerate(self.unit):
            if u:
                for r in range(d):
                    for c in range(d):
                        unit_img[r][c] += u * mats[k][r][c]
        if unit_img != ident:
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                prod = linalg.matmul(mats[i], mats[j])
                want = _zero_matrix(d)
                for k, v in self.table[i][j].items():
                    mk = mats[k]
                    for r in range(d):
                        for c in range(d):
                            if mk[r][c]:
                                want[r][c] += v * mk[r][c]
                if prod != want:
                    return False
        return True

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        n = self.dim
        out: dict = {
            "dim": n,
            "unit": [rational_to_json(u) for u in self.unit],
            "table": [
                [[rational_to_json(self.table[i][j].get(k, 0)) for k in range(n)] for j in range(n)]
                for i in range(n)
            ],
        }
        if self.rep is not None:
            out["rep"] = [[[rational_to_json(x) for x in r] for r in m] for m in self.rep]
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FDAlgebra":
        try:
            dim = data["dim"]
            unit = [rational_from_json(u) for u in data["unit"]]
            table = [[[rational_from_json(c) for c in entry] for entry in row] for row in data["table"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidTable(f"malformed algebra: {exc}") from None
        rep = None
        if "rep" in data:
            try:
                rep = [[[rational_from_json(x) for x in r] for r in m] for m in data["rep"]]
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise InvalidTable(f"malformed rep: {exc}") from None
        return cls(dim, table, unit, rep=rep, name=data.get("name"))

    # -- standard examples ------------------------------------------------
    @classmethod
    def from_matrices(cls, mats: Sequence, name: str | None = None, keep_rep: bool = True) -> "FDAlgebra":
        """The algebra spanned by linearly independent matrices closed under product, containing 1."""
        mats = [[[as_fraction(x) for x in r] for r in m] for m in mats]
        d = len(mats[0])
        flat = [[x for r in m for x in r] for m in mats]
        n = len(mats)
        if linalg.rank(flat, d * d) != n:
            raise InvalidTable("matrices are not linearly independent")
        cols = linalg.transpose(flat)  # d*d x n

        def coords(m) -> Vec:
            sol = linalg.solve(cols, [x for r in m for x in r])
            if sol is None:
                raise InvalidTable("span of matrices is not closed under product")
            return sol

        table = [[coords(linalg.matmul(mats[i], mats[j])) for j in range(n)] for i in range(n)]
        ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        unit = coords(ident)
        return cls(n, table, unit, rep=mats if keep_rep else None, name=name)

    @classmethod
    def upper_triangular(cls, p: int) -> "FDAlgebra":
        """``T_p`` on the matrix units ``E_ij``, ``i <= j``, with its defining representation."""
        units = []
        for i in range(p):
            for j in range(i, p):
                m = [[0] * p for _ in range(p)]
                m[i][j] = 1
                units.append(m)
        return cls.from_matrices(units, name=f"T_{p}")

    @classmethod
    def full_matrix(cls, p: int) -> "FDAlgebra":
        units = []
        for i in range(p):
            for j in range(p):
                m = [[0] * p for _ in range(p)]
                m[i][j] = 1
                units.append(m)
        return cls.from_matrices(units, name=f"M_{p}")

    @classmethod
    def polynomial_quotient(cls, coeffs: Sequence, name: str | None = None) -> "FDAlgebra":
        """``Q[x]/(f)`` for monic ``f = x^n + c_{n-1} x^{n-1} + ... + c_0``; pass ``[c_0, ..., c_{n-1}]``."""
        c = [as_fraction(x) for x in coeffs]
        n = len(c)
        if n < 1:
            raise InvalidTable("need a polynomial of degree >= 1")

        def reduce(e: int) -> Vec:
            # coordinates of x^e in the basis 1, x, ..., x^{n-1}
            v = [Fraction(0)] * (2 * n)
            v[e] = Fraction(1)
            for d in range(2 * n - 1, n - 1, -1):
                if v[d]:
                    lead = v[d]
                    v[d] = Fraction(0)
                    for i in range(n):
                        v[d - n + i] -= lead * c[i]
            return v[:n]

        table = [[reduce(i + j) for j in range(n)] for i in range(n)]
        unit = [Fraction(int(i == 0)) for i in range(n)]
        return cls(n, table, unit, name=name)

    @classmethod
    def scalars(cls) -> "FDAlgebra":
        return cls(1, [[[1]]], [1], rep=[[[1]]], name="Q")


# -- radical and quotient ------------------------------------------------------


def radical(A: FDAlgebra) -> list[Vec]:
    """Basis (reduced echelon form) of the Jacobson radical: the kernel of the trace form."""
    ns = linalg.nullspace(A.trace_form(), A.dim)
    basis = linalg.row_basis(ns, A.dim) if ns else []
    if nilpotency_index(A, basis) is None:
        raise AssertionError("trace-form kernel is not nilpotent")
    return basis


def _span_products(A: FDAlgebra, U: list[Vec], V: list[Vec]) -> list[Vec]:
    prods = [A.mul(u, v) for u in U for v in V]
    prods = [p for p in prods if any(p)]
    return linalg.row_basis(prods, A.dim) if prods else []


def nilpotency_index(A: FDAlgebra, basis: list[Vec]) -> int | None:
    """Least ``n`` with ``R^n = 0`` for ``R`` the span of ``basis``; ``None`` if never."""
    if not basis:
        return 1
    power = basis
    for n in range(1, A.dim + 2):
        if not power:
            return n
        power = _span_products(A, power, basis)
    return None


def is_ideal(A: FDAlgebra, basis: list[Vec]) -> bool:
    if not basis:
        return True
    r = len(basis)
    for i in range(A.dim):
        e = A.basis_vec(i)
        for v in basis:
            for w in (A.mul(e, v), A.mul(v, e)):
                if any(w) and linalg.rank(basis + [w], A.dim) != r:
                    return False
    return True


@dataclass
class Quotient:
    algebra: FDAlgebra
    complement: list[int]  # indices of basis vectors representing A/R
    reducer: list[Vec]  # rref basis of R
    pivots: tuple

    def reduce(self, v: Sequence) -> Vec:
        """Coordinates of ``v + R`` in the complement basis."""
        v = [as_fraction(x) for x in v]
        for row, piv in zip(self.reducer, self.pivots):
            if v[piv]:
                c = v[piv]
                v = [a - c * b for a, b in zip(v, row)]
        return [v[i] for i in self.complement]


def quotient(A: FDAlgebra, basis: list[Vec]) -> Quotient:
    """``A / span(basis)`` for an ideal, on the non-pivot standard vectors."""
    red, pivots = linalg.rref(basis, A.dim) if basis else ([], ())
    comp = [i for i in range(A.dim) if i not in set(pivots)]
    q = Quotient(None, comp, red, pivots)  # type: ignore[arg-type]
    n = len(comp)
    table = [[q.reduce(A.mul(A.basis_vec(comp[i]), A.basis_vec(comp[j]))) for j in range(n)] for i in range(n)]
    unit = q.reduce(A.unit)
    q.algebra = FDAlgebra(n, table, unit, name=f"{A.name or 'A'}/Rad", check=False)
    return q


def leading_minors(m: list[list[Fraction]]) -> list[Fraction]:
    return [linalg.det([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


# -- triangularization --------------------------------------------------------------


def rational_roots(charpoly: Sequence[Fraction]) -> list[Fraction]:
    x = Symbol("x")
    poly = Poly([QQ(int(c.numerator), int(c.denominator)) for c in charpoly], x, domain=QQ)
    roots = []
    for fac, _ in factor_list(poly)[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -b / a
            roots.append(Fraction(int(r.numerator), int(r.denominator)))
    return sorted(set(roots))


def _restrict(op, basis: list[Vec], n: int) -> list[list[Fraction]] | None:
    """Matrix of ``op`` on the span of ``basis`` (assumed invariant)."""
    cols = linalg.transpose(basis)
    out = []
    for v in basis:
        w = [sum((op[i][j] * v[j] for j in range(n)), Fraction(0)) for i in range(n)]
        sol = linalg.solve(cols, w)
        if sol is None:
            return None
        out.append(sol)
    return linalg.transpose(out)


def common_eigenvector(ops: list, n: int) -> Vec | None:
    """A common eigenvector over Q of pairwise commuting operators on Q^n."""
    U = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for op in ops:
        r = _restrict(op, U, n)
        if r is None:
            return None
        if all(r[i][j] == (r[0][0] if i == j else 0) for i in range(len(U)) for j in range(len(U))):
            continue
        roots = rational_roots(linalg.charpoly(r))
        if not roots:
            return None
        lam = roots[0]
        shifted = [[r[i][j] - (lam if i == j else 0) for j in range(len(U))] for i in range(len(U))]
        ker = linalg.nullspace(shifted, len(U))
        # back to ambient coordinates
        U = [[sum((k[a] * U[a][j] for a in range(len(U))), Fraction(0)) for j in range(n)] for k in ker]
    return U[0] if U else None


@dataclass
class Embedding:
    """Upper triangular images of the basis under a faithful representation, in a flag basis."""

    source: str  # "rep" or "regular"
    change_of_basis: list  # columns are the flag vectors
    matrices: list  # one upper triangular matrix per basis element

    def verify(self, A: FDAlgebra) -> bool:
        d = len(self.matrices[0])
        return (
            all(_is_upper(m) for m in self.matrices)
            and A.rep_is_homomorphism(self.matrices)
            and linalg.rank([[x for r in m for x in r] for m in self.matrices], d * d) == A.dim
        )

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "size": len(self.matrices[0]),
            "change_of_basis": [[rational_to_json(x) for x in r] for r in self.change_of_basis],
            "matrices": [[[rational_to_json(x) for x in r] for r in m] for m in self.matrices],
        }


def triangularize(A: FDAlgebra, ops: list, R: list[Vec], source: str) -> Embedding | None:
    """Flag basis making every ``ops[i]`` upper triangular, by iterated common eigenvectors.

    At each step the quotient module ``V / F`` is cut down to ``U = ann_V/F(Rad A)``,
    an A-submodule on which A acts through the commutative ``A / Rad A``.
    """
    n = len(ops[0])
    rad_ops = []
    for r in R:
        m = _zero_matrix(n)
        for k, c in enumerate(r):
            if c:
                for i in range(n):
                    for j in range(n):
                        m[i][j] += c * ops[k][i][j]
        rad_ops.append(m)
    flag: list[Vec] = []
    for _ in range(n):
        red, pivots = linalg.rref(flag, n) if flag else ([], ())
        comp = [i for i in range(n) if i not in set(pivots)]
        q = Quotient(None, comp, red, pivots)  # type: ignore[arg-type]

        def on_quotient(op):
            cols = []
            for c in comp:
                cols.append(q.reduce([op[i][c] for i in range(n)]))
            return linalg.transpose(cols)

        qn = len(comp)
        rad_q = [on_quotient(m) for m in rad_ops]
        if rad_q:
            stacked = [row for m in rad_q for row in m]
            ann = linalg.nullspace(stacked, qn)
        else:
            ann = [[Fraction(int(i == j)) for j in range(qn)] for i in range(qn)]
        if not ann:
            return None
        # operators restricted to the annihilator (an invariant subspace)
        restricted = []
        for k in range(A.dim):
            r = _restrict(on_quotient(ops[k]), ann, qn)
            if r is None:
                return None
            restricted.append(r)
        u = common_eigenvector(restricted, len(ann))
        if u is None:
            return None
        in_q = [sum((u[a] * ann[a][j] for a in range(len(ann))), Fraction(0)) for j in range(qn)]
        lift = [Fraction(0)] * n
        for val, c in zip(in_q, comp):
            lift[c] = val
        flag.append(lift)
    P = linalg.transpose(flag)
    Pinv = linalg.inverse(P)
    mats = [linalg.matmul(linalg.matmul(Pinv, op), P) for op in ops]
    return Embedding(source, P, mats)


def regular_rep(A: FDAlgebra) -> list:
    return [A.left_matrix(A.basis_vec(k)) for k in range(A.dim)]


# -- decision ---------------------------------------------------------------------


@dataclass
class GrowthCertificate:
    verdict: str
    violation: str | None = None
    radical: list = field(default_factory=list)
    trace_minors: list = field(default_factory=list)
    embedding: Embedding | None = None
    note: str = ""

    def verify(self, A: FDAlgebra) -> bool:
        """Re-check the certificate against ``A`` from scratch."""
        R = radical(A)
        if linalg.rank(R, A.dim) != linalg.rank(self.radical, A.dim) or (
            R and linalg.rank(R + self.radical, A.dim) != len(R)
        ):
            return False
        Q = quotient(A, R).algebra
        if self.verdict == POLY_GROWTH:
            if not Q.is_commutative():
                return False
            if any(m <= 0 for m in leading_minors(Q.trace_form())):
                return False
            if self.embedding is not None and not self.embedding.verify(A):
                return False
            return True
        if self.violation == QUOTIENT_NONCOMMUTATIVE:
            return not Q.is_commutative()
        if self.violation == SPECTRUM_NOT_REAL:
            return Q.is_commutative() and any(m <= 0 for m in leading_minors(Q.trace_form()))
        return False

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "violation": self.violation,
            "radical": [[rational_to_json(x) for x in v] for v in self.radical],
            "trace_minors": [rational_to_json(x) for x in self.trace_minors],
            "embedding": self.embedding.to_json() if self.embedding else None,
            "note": self.note,
        }


def decide_growth(A: FDAlgebra, embed: bool = True) -> GrowthCertificate:
    R = radical(A)
    Q = quotient(A, R).algebra
    if not Q.is_commutative():
        return GrowthCertificate(NOT_POLY_GROWTH, QUOTIENT_NONCOMMUTATIVE, R, note="A/Rad A is not commutative")
    minors = leading_minors(Q.trace_form())
    if any(m <= 0 for m in minors):
        return GrowthCertificate(
            NOT_POLY_GROWTH, SPECTRUM_NOT_REAL, R, minors, note="trace form of A/Rad A is not positive definite"
        )
    cert = GrowthCertificate(POLY_GROWTH, None, R, minors)
    if not embed:
        return cert
    if A.rep is not None and all(_is_upper(m) for m in A.rep):
        d = len(A.rep[0])
        ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        cert.embedding = Embedding("rep", ident, A.rep)
        cert.note = "supplied representation is already upper triangular"
    else:
        source, ops = ("rep", A.rep) if A.rep is not None else ("regular", regular_rep(A))
        emb = triangularize(A, ops, R, source)
        if emb is None:
            cert.note = "eigenvalues do not split over Q; no explicit flag"
        else:
            cert.embedding = emb
            cert.note = "flag from iterated common eigenvectors"
    if cert.embedding is not None and not cert.embedding.verify(A):
        raise AssertionError("triangular embedding failed re-verification")
    return cert


# -- constructions ----------------------------------------------------------------


def _kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def tensor_fd(A: FDAlgebra, B: FDAlgebra) -> FDAlgebra:
    """``A (x) B`` on the basis ``x_i (x) y_j`` (index ``i * dim B + j``)."""
    n, m = A.dim, B.dim
    table = []
    for i in range(n):
        for j in range(m):
            row = []
            for i2 in range(n):
                for j2 in range(m):
                    d = {}
                    for k, a in A.table[i][i2].items():
                        for l, b in B.table[j][j2].items():
                            d[k * m + l] = a * b
                    row.append(d)
            table.append(row)
    unit = [a * b for a in A.unit for b in B.unit]
    rep = None
    if A.rep is not None and B.rep is not None:
        rep = [_kron(ra, rb) for ra in A.rep for rb in B.rep]
    name = f"{A.name or 'A'}(x){B.name or 'B'}"
    return FDAlgebra(n * m, table, unit, rep=rep, name=name)


@dataclass
class SplitReport:
    status: str  # "SPLIT" or NOT_SPLIT_OVER_Q
    semisimple_part: list  # basis of S
    radical: list
    nilpotency_index: int | None
    checks: dict
    note: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "semisimple_part": [[rational_to_json(x) for x in v] for v in self.semisimple_part],
            "radical": [[rational_to_json(x) for x in v] for v in self.radical],
            "nilpotency_index": self.nilpotency_index,
            "checks": self.checks,
            "note": self.note,
        }


def _minimal_polynomial(A: FDAlgebra, z: Vec) -> list[Fraction]:
    """Monic minimal polynomial of ``z`` (coefficients low degree first)."""
    powers = [list(A.unit)]
    while True:
        nxt = A.mul(powers[-1], z)
        sol = linalg.solve(linalg.transpose(powers), nxt)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        powers.append(nxt)


def _eval_poly(A: FDAlgebra, coeffs: Sequence[Fraction], z: Vec) -> Vec:
    out = [Fraction(0)] * A.dim
    for c in reversed(coeffs):
        out = A.mul(out, z)
        out = [o + c * u for o, u in zip(out, A.unit)]
    return out


def _check_split(A: FDAlgebra, S: list[Vec], R: list[Vec]) -> dict:
    n = A.dim
    closed = all(
        linalg.rank(S + [A.mul(a, b)], n) == len(S) for a in S for b in S if any(A.mul(a, b))
    ) if S else True
    direct = linalg.rank(S + R, n) == n and len(S) + len(R) == n
    unit_in_s = linalg.rank(S + [A.unit], n) == len(S) if S else False
    return {"subalgebra": closed, "direct_sum": direct, "contains_unit": unit_in_s}


def split_extension_check(A: FDAlgebra, seed: int = 0, tries: int = 8) -> SplitReport:
    """Look for ``A = S (+) Rad A`` with ``S`` a subalgebra, over Q.

    Works when ``A/Rad A`` is split commutative (a product of copies of Q):
    lift its primitive idempotents as CRT idempotents of ``Q[z]`` for a
    generic ``z``.
    """
    R = radical(A)
    idx = nilpotency_index(A, R)
    if not R:
        S = [A.basis_vec(i) for i in range(A.dim)]
        return SplitReport("SPLIT", S, R, idx, _check_split(A, S, R), "radical is zero")
    Q = quotient(A, R).algebra
    r = Q.dim
    if not Q.is_commutative():
        return SplitReport(NOT_SPLIT_OVER_Q, [], R, idx, {}, "semisimple quotient is not commutative")
    rng = random.Random(seed)
    x = Symbol("x")
    for _ in range(tries):
        z = [Fraction(rng.randint(-9, 9)) for _ in range(A.dim)]
        mp = _minimal_polynomial(A, z)
        poly = Poly([QQ(int(c.numerator), int(c.denominator)) for c in reversed(mp)], x, domain=QQ)
        factors = factor_list(poly)[1]
        if any(f.degree() != 1 for f, _ in factors):
            continue
        if len(factors) != r:
            continue  # z not generic enough to separate the simple factors
        powers = [f ** e for f, e in factors]
        idems = []
        for i, pi in enumerate(powers):
            rest = Poly(1, x, domain=QQ)
            for j, pj in enumerate(powers):
                if j != i:
                    rest = rest * pj
            # u * rest + v * pi = 1, idempotent = u * rest mod poly
            u, _, g = gcdex(rest, pi)
            e = (u * rest).rem(poly)
            coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(e.all_coeffs())]
            idems.append(_eval_poly(A, coeffs, z))
        S = linalg.row_basis(idems, A.dim)
        checks = _check_split(A, S, R)
        checks["orthogonal_idempotents"] = all(
            A.mul(idems[i], idems[j]) == (idems[i] if i == j else [0] * A.dim)
            for i in range(r)
            for j in range(r)
        )
        if all(checks.values()):
            return SplitReport("SPLIT", S, R, idx, checks, "CRT idempotents of a generic element")
    return SplitReport(NOT_SPLIT_OVER_Q, [], R, idx, {}, "no rational splitting found")
