import pickle
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import assignments, param_polys
from ncverify.errors import MissingVariable
from ncverify.scalars import (
    HBAR,
    SIGMA,
    ONE,
    ParamPoly,
    Var,
    lam,
    mu,
    poly_eval,
    poly_mul,
    rational_from_json,
    rational_to_json,
    tvar,
)

h = ParamPoly.var(HBAR)
s = ParamPoly.var(SIGMA)


def test_difference_of_squares():
    assert poly_mul(h + 1, h - 1) == h * h - 1


def test_zero_annihilates():
    p = h * s + 3
    assert poly_mul(ParamPoly(), p).is_zero()
    assert not ParamPoly().terms


def test_monomial_product():
    assert (h * s) * (h * s) == ParamPoly({((HBAR, 2), (SIGMA, 2)): 1})


def test_eval_examples():
    assert poly_eval(h * h - 1, {HBAR: 2}) == 3
    assert poly_eval(ParamPoly.const(Fraction(5, 7)), {}) == Fraction(5, 7)
    assert poly_eval(h * h * Fraction(1, 12), {HBAR: Fraction(1, 2)}) == Fraction(1, 48)


def test_eval_missing_variable():
    with pytest.raises(MissingVariable):
        poly_eval(h * s, {HBAR: 1})


def test_no_zero_coefficients_stored():
    p = ParamPoly({((HBAR, 1),): 1, ((SIGMA, 1),): 0})
    assert p == h
    assert (h - h).terms == {}


def test_var_order_and_names():
    order = [HBAR, SIGMA, lam(1), lam(2), tvar((2, 1), 1, 1), mu(0, 0)]
    assert sorted(reversed(order)) == order
    for v in order:
        assert Var.parse(v.name) == v


def test_rational_json():
    assert rational_to_json(Fraction(-3, 4)) == "-3/4"
    assert rational_from_json("-3/4") == Fraction(-3, 4)
    assert rational_from_json("5") == 5


def test_exponent_overflow_is_loud():
    with pytest.raises(OverflowError):
        ParamPoly.var(HBAR, 40000)
    big = ParamPoly.var(HBAR, 20000)
    with pytest.raises(OverflowError):
        big * big


def test_subs_with_polynomial():
    x = ParamPoly.var(lam(1))
    p = x * x + x
    assert p.subs({lam(1): x + h * s}) == (x + h * s) * (x + h * s) + x + h * s


def test_coeffs_in_and_degree():
    x = ParamPoly.var(lam(1))
    p = x * x * h + 3 * x + s
    assert p.coeffs_in(lam(1)) == [s, ParamPoly.const(3), h]
    assert p.degree_in(lam(1)) == 2
    assert p.degree() == 3


@given(param_polys(), param_polys(), assignments())
def test_eval_is_ring_homomorphism(p, q, pt):
    assert (p * q).eval(pt) == p.eval(pt) * q.eval(pt)
    assert (p + q).eval(pt) == p.eval(pt) + q.eval(pt)
    assert (p - q).eval(pt) == p.eval(pt) - q.eval(pt)


@given(param_polys(), param_polys(), param_polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p
    assert p * ONE == p


@given(param_polys())
def test_canonical_form_and_serialization(p):
    assert ParamPoly.from_json(p.to_json()) == p
    assert ParamPoly(dict(p.terms)) == p
    assert hash(ParamPoly(dict(p.terms))) == hash(p)
    assert pickle.loads(pickle.dumps(p)) == p
    assert all(c != 0 for c in p.terms.values())
