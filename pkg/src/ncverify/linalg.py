"""Exact linear algebra over the rationals.

Thin wrappers around :class:`sympy.polys.matrices.DomainMatrix` over ``QQ``
that accept and return :class:`fractions.Fraction` data.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .scalars import as_fraction

Matrix = list  # list[list[Fraction]]


def _dm(rows: Sequence[Sequence], ncols: int | None = None) -> DomainMatrix:
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if nrows else 0
    data = []
    for r in rows:
        data.append([QQ(int(f.numerator), int(f.denominator)) for f in map(as_fraction, r)])
    return DomainMatrix(data, (nrows, ncols), QQ)


def _to_fractions(dm: DomainMatrix) -> Matrix:
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in dm.to_list()]


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return _dm(rows, ncols).rank()


def det(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    d = _dm(rows).det()
    return Fraction(int(d.numerator), int(d.denominator))


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis (as row vectors) of ``{x : rows @ x = 0}``."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ns = _dm(rows, ncols).nullspace()
    if ns.shape[0] == 0:
        return []
    return _to_fractions(ns)


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, tuple[int, ...]]:
    if not rows:
        return [], ()
    m, pivots = _dm(rows, ncols).rref()
    nonzero = [r for r in _to_fractions(m) if any(r)]
    return nonzero, tuple(pivots)


def row_basis(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """A basis of the row span in reduced echelon form."""
    return rref(rows, ncols)[0]


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of ``rows @ x = rhs`` or ``None`` if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [as_fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, piv in zip(red, pivots):
        x[piv] = row[n]
    return x


def inverse(rows: Sequence[Sequence]) -> Matrix:
    return _to_fractions(_dm(rows).inv())


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def charpoly(rows: Sequence[Sequence]) -> list[Fraction]:
    """Characteristic polynomial coefficients, leading coefficient first."""
    if not rows:
        return [Fraction(1)]
    return [Fraction(int(c.numerator), int(c.denominator)) for c in _dm(rows).charpoly()]
