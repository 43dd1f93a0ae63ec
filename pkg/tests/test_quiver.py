from hypothesis import given, strategies as st

import pytest

from ncverify.errors import CyclicQuiver, QuiverMismatch
from ncverify.linalg import rank
from ncverify.pgrowth import decide_growth
from ncverify.quiver import (
    PathElem,
    Quiver,
    acyclic_to_triangular,
    build_qm,
    ideal_power_membership,
    path_mul,
    qm_arrow,
    qm_vertex,
    split_nilpotent_check,
    to_fd_algebra,
)
from ncverify.scalars import HBAR, ParamPoly
from strategies import acyclic_quivers

D21 = (2, 1)


def test_build_qm_counts():
    q = build_qm(2, 1)
    assert (len(q.vertices), len(q.arrows)) == (2, 1)
    q = build_qm(3, 1)
    assert (len(q.vertices), len(q.arrows)) == (6, 9)
    q = build_qm(2, 0)
    assert (len(q.vertices), len(q.arrows)) == (1, 0)
    q = build_qm(3, 2)
    assert (len(q.vertices), len(q.arrows)) == (9, 18)


def test_path_mul_relations():
    q = build_qm(2, 2)
    q1 = PathElem.idempotent(q, qm_vertex(D21, 1))
    q2 = PathElem.idempotent(q, qm_vertex(D21, 2))
    v = PathElem.arrow(q, qm_arrow(D21, D21, 1))
    assert path_mul(q1, v) == v
    assert path_mul(v, q2) == v
    assert path_mul(v, q1).is_zero()
    assert path_mul(q1 + q2, q1 + q2) == q1 + q2


def test_path_mul_mismatch():
    with pytest.raises(QuiverMismatch):
        PathElem.unit(build_qm(2, 1)) * PathElem.unit(build_qm(2, 2))


def test_ideal_power_membership():
    q = build_qm(2, 2)
    v = PathElem.arrow(q, qm_arrow(D21, D21, 1))
    assert ideal_power_membership(v, 1)
    assert not ideal_power_membership(PathElem.idempotent(q, qm_vertex(D21, 1)), 1)
    x = PathElem.unit(q)
    for _ in range(3):
        x = x * (PathElem.unit(q) + v + PathElem.arrow(q, qm_arrow(D21, D21, 2)))
    longest = x - PathElem.unit(q)
    assert ideal_power_membership(longest, 1)
    assert not ideal_power_membership(longest, 3)  # I^3 = 0 on Q_2
    assert ideal_power_membership(PathElem.zero(q), 3)


def test_triangular_embedding_q1():
    q = build_qm(2, 1)
    emb = acyclic_to_triangular(q)
    assert emb.size == 2
    v = q.arrow_path(qm_arrow(D21, D21, 1))
    assert emb.matrix(v) == [[0, 1], [0, 0]]
    rep = emb.verify()
    assert rep["multiplicative"] and rep["injective"] and rep["dimension"] == 3


def test_one_vertex_embedding():
    emb = acyclic_to_triangular(Quiver(("pt",), ()))
    assert emb.matrix(emb.quiver.vertex_path("pt")) == [[1]]


def test_cycle_rejected():
    q = Quiver(("a", "b"), (("a", "b", "x"), ("b", "a", "y")))
    assert not q.is_acyclic()
    with pytest.raises(CyclicQuiver):
        acyclic_to_triangular(q)


def test_symbolic_apply():
    q = build_qm(2, 1)
    emb = acyclic_to_triangular(q)
    h = ParamPoly.var(HBAR)
    x = PathElem.arrow(q, qm_arrow(D21, D21, 1)) * h + PathElem.unit(q)
    m = emb.apply(x)
    assert m[0][1] == h and m[0][0] == 1 and m[1][0].is_zero()


def test_json_roundtrip():
    q = build_qm(3, 1)
    assert Quiver.from_json(q.to_json()) == q


def _random_elem(q, rng):
    paths = q.paths()
    return PathElem(q, {p: rng.randint(-3, 3) for p in rng.sample(paths, min(3, len(paths)))})


@given(acyclic_quivers, st.randoms(use_true_random=False))
def test_associativity_and_unit(q, rng):
    a, b, c = (_random_elem(q, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    one = PathElem.unit(q)
    assert one * a == a and a * one == a


@given(acyclic_quivers)
def test_embedding_certified(q):
    rep = acyclic_to_triangular(q).verify()
    assert rep["multiplicative"] and rep["upper_triangular"] and rep["ideal_strictly_upper"] and rep["injective"]


@given(acyclic_quivers)
def test_split_nilpotent_extension(q):
    rep = split_nilpotent_check(q)
    assert rep["direct_sum"] and rep["subalgebra"] and rep["is_ideal"] and rep["nilpotent"]


@given(acyclic_quivers)
def test_idempotents_orthogonal(q):
    es = [PathElem.idempotent(q, v) for v in q.vertices]
    for i, a in enumerate(es):
        for j, b in enumerate(es):
            assert a * b == (a if i == j else PathElem.zero(q))
    total = PathElem.zero(q)
    for e in es:
        total = total + e
    assert total == PathElem.unit(q)


def test_path_algebra_table_matches_rep():
    A = to_fd_algebra(build_qm(3, 1))
    A.validate()
    assert A.rep_is_homomorphism(A.rep)
    assert rank([[x for r in m for x in r] for m in A.rep], len(A.rep[0]) ** 2) == A.dim
    assert decide_growth(A).verdict == "POLY_GROWTH"
