from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import rationals
from ncverify.af1 import (
    KAPPA,
    LAMBDA,
    FormalSeries,
    UTMatrix,
    alphas_by_series,
    apply_series,
    build_pi,
    commutator,
    generic_f,
    relation_residual,
    rho_pp,
    rho_pp_closed,
    shift_coefficients,
    solve_alphas,
    theta_pi,
    verify_relation,
    verify_rho_triangular,
)
from ncverify.errors import BadShape, NotNilpotent
from ncverify.scalars import HBAR, SIGMA, ParamPoly

H = ParamPoly.var(HBAR)
LAM = ParamPoly.var(LAMBDA)


def closed_form_alphas(n):
    """Coefficients of (2/h) artanh(h E / 2), the solution of E z'(E) = sinh(h z)/h, via sympy."""
    h, E = sympy.symbols("h E")
    ser = sympy.series(2 / h * sympy.atanh(h * E / 2), E, 0, n + 1).removeO()
    out = {}
    for j in range(2, n + 1):
        c = sympy.Poly(sympy.expand(ser.coeff(E, j)), h) if ser.coeff(E, j) != 0 else None
        if c is None:
            out[j] = ParamPoly()
        else:
            out[j] = ParamPoly({((HBAR, e[0]),) if e[0] else (): Fraction(int(v.p), int(v.q)) for e, v in c.terms()})
    return out


def test_series_on_nilpotents():
    E = UTMatrix.jordan(2)
    assert apply_series(FormalSeries.sinh(), E) == E * H
    assert apply_series(FormalSeries.exp(), UTMatrix.zero(3)) == UTMatrix.identity(3)
    E4 = UTMatrix.jordan(4)
    inner = apply_series(FormalSeries.sinh(), E4)
    assert apply_series(FormalSeries.arcsinh(), inner) == E4 * H


def test_series_composition_matches_matrix_route():
    comp = FormalSeries.arcsinh().compose(FormalSeries.sinh(), 9)
    assert comp.coefficients(10) == [ParamPoly(), H] + [ParamPoly()] * 8


def test_not_nilpotent():
    with pytest.raises(NotNilpotent):
        apply_series(FormalSeries.sinh(), UTMatrix.identity(2))


def test_below_diagonal_rejected():
    with pytest.raises(BadShape):
        UTMatrix([[0, 0], [1, 0]])


def test_alpha_examples():
    t = solve_alphas(4)
    assert t[2].is_zero() and t[4].is_zero()
    assert t[3] == H * H * Fraction(1, 12)


def test_alphas_three_routes():
    frozen = {3: Fraction(1, 12), 5: Fraction(1, 80), 7: Fraction(1, 448), 9: Fraction(1, 2304), 11: Fraction(1, 11264)}
    matrix = solve_alphas(11).alphas
    series = alphas_by_series(11)
    closed = closed_form_alphas(11)
    for j in range(2, 12):
        assert matrix[j] == series[j] == closed[j]
        want = H ** (j - 1) * frozen[j] if j in frozen else ParamPoly()
        assert matrix[j] == want


def test_alphas_independent_of_size():
    a9, a12 = solve_alphas(9).alphas, solve_alphas(12).alphas
    for j in range(3, 10, 2):
        assert a9[j] == a12[j] and not a9[j].is_zero()


def test_pi_examples():
    assert build_pi(0).e1.is_zero() and build_pi(0).e2.is_zero()
    pi1 = build_pi(1)
    assert pi1.e1 == UTMatrix.diag([KAPPA, 0]) and pi1.e2 == UTMatrix.jordan(2)
    assert build_pi(3).e2[0, 3] == H * H * Fraction(1, 12)


def test_relation_holds():
    for p in range(0, 9):
        assert verify_relation(p)
    assert verify_relation(4, with_lambda=True)


def test_relation_fails_for_wrong_alpha():
    pi = build_pi(3)
    bad = pi.e2 + UTMatrix.jordan(4) ** 3 * H * H * Fraction(1, 100)
    residual = commutator(pi.e1, bad) - apply_series(FormalSeries.sinh(), bad) * ParamPoly.var(SIGMA)
    assert not residual.is_zero()
    assert relation_residual(3).is_zero()


def test_rho_examples():
    f0, f1, f2, f3 = generic_f(3, 2)
    shift = lambda f, c: f.subs({LAMBDA: LAM + KAPPA * c})  # noqa: E731
    assert rho_pp(0, [f0]) == f0
    assert rho_pp(1, [ParamPoly(), f1]) == shift(f1, 1)
    want = shift(f1, 3) * H * H * Fraction(1, 12) + shift(f3, 3)
    assert rho_pp(3, [ParamPoly(), f1, ParamPoly(), f3]) == want
    assert rho_pp(3, [ParamPoly()] * 4).is_zero()


def test_rho_triangular():
    rep = verify_rho_triangular(4, 3)
    assert rep.passed
    coeffs = shift_coefficients(3)
    assert coeffs[3] == 1 and coeffs[1] == H * H * Fraction(1, 12)
    assert all(shift_coefficients(p)[p] == 1 for p in range(5))


def test_theta_pi_entries():
    f = generic_f(3, 1)
    th = theta_pi(3, f)
    assert th[1, 3] == f[2].subs({LAMBDA: LAM + KAPPA * 2})
    assert th[3, 3] == f[0]


lam_polys = st.lists(rationals, min_size=1, max_size=5).map(
    lambda cs: ParamPoly.sum(ParamPoly.var(LAMBDA, d) * c for d, c in enumerate(cs))
)


@given(st.integers(0, 4), st.data())
def test_shift_coherence(p, data):
    f = [data.draw(lam_polys) for _ in range(p + 1)]
    assert rho_pp(p, f) == rho_pp_closed(p, f)


ut_entries = st.lists(rationals, min_size=6, max_size=6)


def _ut(vals, strict=False):
    it = iter(vals)
    return UTMatrix([[next(it) if (j > i or (j == i and not strict)) else 0 for j in range(3)] for i in range(3)])


@given(ut_entries, ut_entries, ut_entries)
def test_ut_closed_and_associative(a, b, c):
    A, B, C = _ut(a), _ut(b), _ut(c)
    assert (A * B) * C == A * (B * C)
    UTMatrix([[x for x in r] for r in (A * B).rows])  # still upper triangular


@given(st.lists(rationals, min_size=6, max_size=6))
def test_strictly_upper_nilpotent(v):
    N = UTMatrix([[0, v[0], v[1]], [0, 0, v[2]], [0, 0, 0]])
    assert (N ** 3).is_zero()


@given(st.integers(1, 6), st.integers(-3, 3))
def test_exp_of_nilpotent_is_multiplicative(n, c):
    E = UTMatrix.jordan(n) * c
    e = apply_series(FormalSeries.exp(), E)
    e_neg = apply_series(FormalSeries.exp(), E * -1)
    assert e * e_neg == UTMatrix.identity(n)
