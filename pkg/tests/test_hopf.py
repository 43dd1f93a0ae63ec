from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncverify.errors import BadParameter, ParameterMismatch
from ncverify.hopf import (
    FAMILIES,
    Af1TruncElem,
    QSL2Elem,
    af1_hopf_check,
    free_primitive_check,
    qsl2_hopf_check,
    qsl2_mul,
    qsl2_trunc_invert,
    taft_check,
)
from ncverify.hopf import af1trunc, qsl2 as qsl2_mod, taft as taft_mod
from ncverify.hopf.free import antipode as free_antipode, delta_by_product, unshuffle
from ncverify.scalars import HBAR, SIGMA, ParamPoly

Q = Fraction(2, 3)


def gen(name, q=Q):
    return QSL2Elem.gen(q, name)


def test_qsl2_product_examples():
    a, b, c = gen("a"), gen("b"), gen("c")
    assert b * a == (a * b) * (1 / Q)
    assert a * gen("A") == QSL2Elem.one(Q)
    assert (b * c) * a == (a * b * c) * Q ** -2


def test_qsl2_d_is_eliminated():
    a, b, c, d = (gen(x) for x in "abcd")
    assert a * d - b * c * Q == QSL2Elem.one(Q)
    assert d * a - b * c * (1 / Q) == QSL2Elem.one(Q)


def test_qsl2_parameter_errors():
    with pytest.raises(ParameterMismatch):
        qsl2_mul(gen("a", 2), gen("a", 3))
    for bad in (0, 1, -1):
        with pytest.raises(BadParameter):
            qsl2_hopf_check(bad)


@pytest.mark.parametrize("q", [Fraction(2), Fraction(2, 3), Fraction(-3), Fraction(5, 7)])
def test_qsl2_axioms(q):
    r = qsl2_hopf_check(q)
    assert r.axioms_passed and r.passed
    ids = [c["id"] for c in r.cases()]
    assert "antipode/m(S x 1)Delta(a)" in ids and "antipode/m(1 x S)Delta(a)" in ids


def test_qsl2_outcome_independent_of_q():
    outcomes = [
        [(c["id"], c["status"]) for c in qsl2_hopf_check(q).cases()] for q in (Fraction(2), Fraction(2, 3), Fraction(-3))
    ]
    assert outcomes[0] == outcomes[1] == outcomes[2]


def test_qsl2_counit_example():
    delta, _, counit = qsl2_mod.structure(Q)
    left = {}
    for (w1, w2), c in delta["b"].items():
        e = qsl2_mod._counit_word(counit, w1)
        if e:
            left[w2] = left.get(w2, 0) + c * e
    assert left == {("b",): 1}


def test_qsl2_bad_antipode_detected(monkeypatch):
    orig = qsl2_mod.structure

    def broken(q):
        d, s, e = orig(q)
        s = dict(s)
        s["b"] = {("b",): -q}
        return d, s, e

    monkeypatch.setattr(qsl2_mod, "structure", broken)
    r = qsl2_hopf_check(Fraction(2))
    assert not r.family_passed("antipode")


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_trunc_inverse(N):
    for q in (Fraction(2), Fraction(2, 3)):
        assert qsl2_trunc_invert(q, N).passed


def test_trunc_inverse_n1_is_unit():
    r = qsl2_trunc_invert(Fraction(2), 1)
    (only,) = r.params["inverse"]
    assert only["key"] == [[-1, 0, 0], [-1, 0, 0]]  # W = a^-1 (x) a^-1 once b = c = 0


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_af1_axioms(N):
    r = af1_hopf_check(N)
    assert r.axioms_passed and r.passed
    assert r.family_passed("antipode_inverse")


def test_af1_square_of_antipode_is_not_identity():
    r = af1_hopf_check(4)
    assert r.params["S^2(e1)-e1"]  # nonzero: S is invertible but not an involution


def test_af1_bad_antipode_detected(monkeypatch):
    orig = af1trunc.antipode_gen

    def broken(N, g, inverse=False):
        out = dict(orig(N, g, inverse))
        if g == af1trunc.E1 and not inverse:
            out[(0, 1)] = -out[(0, 1)]
        return out

    monkeypatch.setattr(af1trunc, "antipode_gen", broken)
    af1trunc._antipode_basis.cache_clear()
    try:
        assert not af1_hopf_check(4).family_passed("antipode")
    finally:
        af1trunc._antipode_basis.cache_clear()


def test_af1_relation_in_truncation():
    N = 4
    e1, e2 = Af1TruncElem.e1(N), Af1TruncElem.e2(N)
    h, s = ParamPoly.var(HBAR), ParamPoly.var(SIGMA)
    sinh = e2 * h + e2 * e2 * e2 * (h ** 3 * Fraction(1, 6))
    assert e1 * e2 - e2 * e1 == sinh * s
    assert (e2 * e2 * e2 * e2).is_zero()


af1_elems = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 4), st.integers(-3, 3)), max_size=3
)


def _elem(N, items):
    return Af1TruncElem(N, {(a, b): c for a, b, c in items if b < N})


@given(af1_elems, af1_elems, af1_elems)
def test_af1_associative(x, y, z):
    X, Y, Z = (_elem(5, t) for t in (x, y, z))
    assert (X * Y) * Z == X * (Y * Z)


@given(af1_elems, af1_elems, st.integers(1, 4))
def test_af1_truncation_refines(x, y, M):
    X, Y = _elem(5, x), _elem(5, y)
    assert (X * Y).truncate(M) == X.truncate(M) * Y.truncate(M)


qsl2_elems = st.lists(st.tuples(st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), max_size=3)


@given(qsl2_elems, qsl2_elems, qsl2_elems, st.sampled_from([Fraction(2), Fraction(2, 3), Fraction(-3)]))
def test_qsl2_associative(x, y, z, q):
    X, Y, Z = (QSL2Elem(q, {(n, j, k): c for n, j, k, c in t}) for t in (x, y, z))
    assert (X * Y) * Z == X * (Y * Z)


def test_taft():
    r, growth = taft_check()
    for f in FAMILIES:
        assert r.family_passed(f), f
    failing = [c for c in r.cases() if c["status"] == "FAIL"]
    # pi_lambda(ax) = pi_lambda(x), so the plain direct sum has rank 3
    assert [c["id"] for c in failing] == ["representations/pi_lambda1+pi_lambda2 injective"]
    assert failing[0]["detail"]["rank"] == 3
    assert failing[0]["detail"]["kernel_basis_1_a_x_ax"] == [["0/1", "0/1", "-1/1", "1/1"]]
    assert growth["embedded_image"]["verdict"] == "POLY_GROWTH"
    assert growth["embedded_image"]["embedding"] is not None
    assert growth["abstract"]["verdict"] == "POLY_GROWTH"


def test_taft_pi_x_squared():
    p = taft_mod.pi(1)
    assert taft_mod.linalg.matmul(p[taft_mod.X], p[taft_mod.X]) == [[0, 0], [0, 0]]


def test_taft_wrong_convention_is_flagged(monkeypatch):
    monkeypatch.setattr(taft_mod, "S_GEN", {taft_mod.A: {taft_mod.A: Fraction(1)}, taft_mod.X: {taft_mod.X: Fraction(-1)}})
    r, _ = taft_check()
    assert not r.family_passed("antipode")


@pytest.mark.parametrize("k,L", [(1, 1), (1, 4), (2, 1), (2, 3), (2, 4)])
def test_free_primitive(k, L):
    r = free_primitive_check(k, L)
    assert r.axioms_passed and r.passed


def test_free_small_values():
    assert free_antipode((1,)) == {(1,): -1}
    assert unshuffle((1, 2)) == delta_by_product((1, 2))
    d = unshuffle((1, 2, 1))
    assert sum(d.values()) == 8 and d[((1,), (2, 1))] == 1 and d[((1,), (1, 2))] == 1
