"""Shared hypothesis strategies for quivers and algebras."""
import random
from fractions import Fraction

from hypothesis import strategies as st

from ncverify.pgrowth import FDAlgebra, tensor_fd
from ncverify.quiver import Quiver, to_fd_algebra


def random_acyclic_quiver(rng: random.Random, max_vertices: int = 6, max_arrows: int = 8) -> Quiver:
    n = rng.randint(1, max_vertices)
    perm = list(range(n))
    rng.shuffle(perm)  # labels do not follow the topological order
    arrows = []
    if n > 1:
        for a in range(rng.randint(0, max_arrows)):
            i, j = sorted(rng.sample(range(n), 2))
            arrows.append((f"v{perm[i]}", f"v{perm[j]}", f"a{a}"))
    return Quiver(tuple(f"v{x}" for x in range(n)), tuple(arrows))


acyclic_quivers = st.randoms(use_true_random=False).map(random_acyclic_quiver)


GAUSS = FDAlgebra.polynomial_quotient([1, 0])  # x^2 + 1
DUAL = FDAlgebra.polynomial_quotient([0, 0])  # x^2
QxQ = FDAlgebra(2, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1], name="QxQ")


def random_algebra(rng: random.Random) -> FDAlgebra:
    kind = rng.randrange(5)
    if kind == 0:
        return to_fd_algebra(random_acyclic_quiver(rng, 4, 4))
    if kind == 1:
        n = rng.randint(1, 4)
        return FDAlgebra.polynomial_quotient([Fraction(rng.randint(-3, 3)) for _ in range(n)])
    if kind == 2:
        return FDAlgebra.upper_triangular(rng.randint(1, 3))
    if kind == 3:
        A = rng.choice([GAUSS, DUAL, QxQ, FDAlgebra.upper_triangular(2)])
        B = rng.choice([DUAL, QxQ, FDAlgebra.polynomial_quotient([Fraction(rng.randint(-3, 3)), 0])])
        return tensor_fd(A, B)
    return FDAlgebra.full_matrix(rng.randint(1, 2))
