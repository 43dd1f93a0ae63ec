from hypothesis import given, strategies as st

from ncverify.errors import BadShape
from ncverify.freealg import (
    NCPoly,
    bracket,
    commutator_independence,
    delta_set,
    g_expand,
    pbw_rank,
    phi_expand,
)

import pytest

e1, e2, e3 = (NCPoly.gen(i, 3) for i in (1, 2, 3))


def test_bracket_examples():
    assert bracket(e1, e1).is_zero()
    assert bracket(e2, e1) == e2 * e1 - e1 * e2


def test_jacobi_identity():
    total = bracket(e1, bracket(e2, e3)) + bracket(e2, bracket(e3, e1)) + bracket(e3, bracket(e1, e2))
    assert total.is_zero()


def test_g_expand_examples():
    a, b = NCPoly.gen(1, 2), NCPoly.gen(2, 2)
    assert g_expand((2, 1), (0, 0)) == b * a - a * b
    assert g_expand((2, 1), (1, 0)) == bracket(a, bracket(b, a))
    x = g_expand((3, 2), (0, 1, 0))
    assert not any(c for c in x.abelianize().values())


def test_g_expand_bad_shape():
    with pytest.raises(BadShape):
        g_expand((2, 1), (0, 0, 0))


def test_phi_expand_examples():
    assert phi_expand((2, 1), []) == NCPoly.word((1, 1, 2), 2)
    assert phi_expand((0, 0), [((2, 1), (0, 0))]) == g_expand((2, 1), (0, 0))
    b = NCPoly.gen(2, 2)
    assert phi_expand((0, 0), [((2, 1), (0, 1))]) == bracket(b, bracket(b, NCPoly.gen(1, 2)))


def test_delta_set():
    assert delta_set(1) == []
    assert [tuple(d) for d in delta_set(2)] == [(2, 1)]
    assert [tuple(d) for d in delta_set(3)] == [(2, 1), (3, 1), (3, 2)]


def test_small_degree_independence():
    count, rank = commutator_independence(2, 5)
    assert count == rank and count > 0


def test_pbw_monomials_span_words():
    for n in range(1, 5):
        count, rank = pbw_rank(2, n)
        assert count == rank == 2 ** n


factor = st.sampled_from([((2, 1), (0, 0)), ((2, 1), (1, 0)), ((2, 1), (0, 1)), ((3, 1), (0, 0, 0)), ((3, 2), (1, 0, 0))])


@given(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)), st.lists(factor, max_size=2), st.lists(factor, max_size=2))
def test_phi_multiplicative(alpha, f1, f2):
    lhs = phi_expand(alpha, f1 + f2, 3)
    assert lhs == phi_expand(alpha, f1, 3) * phi_expand((0, 0, 0), f2, 3)


words = st.lists(st.integers(1, 2), max_size=4).map(tuple)


@given(words, words)
def test_inclusion_into_more_generators_is_multiplicative(u, v):
    x, y = NCPoly.word(u, 2), NCPoly.word(v, 2)
    assert (x * y).embed(4) == x.embed(4) * y.embed(4)
    assert (x.embed(4) == y.embed(4)) == (u == v)


@given(words, words, words)
def test_associativity(u, v, w):
    x, y, z = (NCPoly.word(a, 2) + NCPoly.gen(1, 2) for a in (u, v, w))
    assert (x * y) * z == x * (y * z)


@given(words)
def test_json_roundtrip(u):
    x = NCPoly.word(u, 2) * 3 - NCPoly.gen(2, 2)
    assert NCPoly.from_json(x.to_json(), 2) == x
