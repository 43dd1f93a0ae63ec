"""The free associative algebra on ``e_1..e_k`` with polynomial coefficients.

Words are tuples of generator indices (1-based).  :class:`NCPoly` elements are
finite maps from words to :class:`~ncverify.scalars.ParamPoly`.  The iterated
commutators ``g_{delta,beta}`` and PBW-shaped products are expanded into words
by :func:`g_expand` and :func:`phi_expand`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from . import linalg
from .errors import BadShape
from .scalars import ONE, ParamPoly

Word = tuple  # tuple[int, ...]


class DeltaIndex(NamedTuple):
    """A pair ``(l, j)`` with ``l > j >= 1``."""

    l: int
    j: int

    def check(self, k: int | None = None) -> "DeltaIndex":
        if not (self.l > self.j >= 1):
            raise BadShape(f"invalid pair {tuple(self)}: need l > j >= 1")
        if k is not None and self.l > k:
            raise BadShape(f"pair {tuple(self)} exceeds generator count {k}")
        return self


def delta_set(k: int) -> list[DeltaIndex]:
    """All pairs ``(l, j)`` with ``k >= l > j >= 1``, ordered by ``l`` then ``j``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return [DeltaIndex(l, j) for l in range(2, k + 1) for j in range(1, l)]


class NCPoly:
    """Noncommutative polynomial: finite map word -> ParamPoly.

    ``k`` is the number of generators.  Arithmetic between elements on
    different generator counts happens in the larger free algebra.
    """

    __slots__ = ("k", "_terms")

    def __init__(self, k: int, terms: Mapping[Word, object] | None = None):
        self.k = k
        clean: dict[Word, ParamPoly] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if any(not (1 <= a <= k) for a in w):
                raise BadShape(f"word {w} uses a letter outside 1..{k}")
            c = ParamPoly.coerce(c)
            if w in clean:
                c = clean[w] + c
            if c.is_zero():
                clean.pop(w, None)
            else:
                clean[w] = c
        self._terms = clean

    @classmethod
    def _raw(cls, k: int, terms: dict) -> "NCPoly":
        x = object.__new__(cls)
        x.k = k
        x._terms = terms
        return x

    @classmethod
    def gen(cls, i: int, k: int) -> "NCPoly":
        if not 1 <= i <= k:
            raise BadShape(f"generator e_{i} outside 1..{k}")
        return cls._raw(k, {(i,): ONE})

    @classmethod
    def one(cls, k: int) -> "NCPoly":
        return cls._raw(k, {(): ONE})

    @classmethod
    def zero(cls, k: int) -> "NCPoly":
        return cls._raw(k, {})

    @classmethod
    def word(cls, w: Sequence[int], k: int, coeff=1) -> "NCPoly":
        return cls(k, {tuple(w): coeff})

    @property
    def terms(self) -> Mapping[Word, ParamPoly]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def embed(self, k_new: int) -> "NCPoly":
        """Image under the inclusion of words on 1..k into words on 1..k_new."""
        if k_new < self.k:
            raise BadShape("cannot embed into fewer generators")
        return NCPoly._raw(k_new, dict(self._terms))

    def _lift(self, other) -> tuple["NCPoly", "NCPoly"]:
        if not isinstance(other, NCPoly):
            other = NCPoly._raw(self.k, {(): ParamPoly.coerce(other)} if other != 0 else {})
        k = max(self.k, other.k)
        return NCPoly._raw(k, self._terms), NCPoly._raw(k, other._terms)

    def __add__(self, other) -> "NCPoly":
        a, b = self._lift(other)
        out = dict(a._terms)
        for w, c in b._terms.items():
            s = out[w] + c if w in out else c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return NCPoly._raw(a.k, out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw(self.k, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NCPoly":
        a, b = self._lift(other)
        return a + (-b)

    def __rsub__(self, other) -> "NCPoly":
        a, b = self._lift(other)
        return b + (-a)

    def __mul__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            c = ParamPoly.coerce(other)
            if c.is_zero():
                return NCPoly._raw(self.k, {})
            return NCPoly._raw(self.k, {w: v * c for w, v in self._terms.items()})
        a, b = self._lift(other)
        out: dict[Word, ParamPoly] = {}
        for w1, c1 in a._terms.items():
            for w2, c2 in b._terms.items():
                w = w1 + w2
                s = c1 * c2
                if w in out:
                    s = out[w] + s
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return NCPoly._raw(a.k, out)

    def __rmul__(self, other) -> "NCPoly":
        # scalars commute with everything
        return self * other

    def __pow__(self, n: int) -> "NCPoly":
        out = NCPoly.one(self.k)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def abelianize(self) -> dict[tuple[int, ...], ParamPoly]:
        """Image in the commutative polynomial ring: exponent vector -> coefficient."""
        out: dict[tuple[int, ...], ParamPoly] = {}
        for w, c in self._terms.items():
            exps = [0] * self.k
            for a in w:
                exps[a - 1] += 1
            key = tuple(exps)
            s = out[key] + c if key in out else c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return out

    def to_json(self) -> list[dict]:
        return [{"word": list(w), "coeff": c.to_json()} for w, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Mapping], k: int) -> "NCPoly":
        return cls(k, {tuple(r["word"]): ParamPoly.from_json(r["coeff"]) for r in data})

    def __repr__(self) -> str:
        if not self._terms:
            return "NCPoly(0)"
        parts = []
        for w, c in sorted(self._terms.items()):
            mono = "".join(f"e{a}" for a in w) or "1"
            parts.append(mono if c == 1 else f"({c})*{mono}")
        return "NCPoly(" + " + ".join(parts) + ")"


def bracket(x: NCPoly, y: NCPoly) -> NCPoly:
    """Commutator ``xy - yx``."""
    return x * y - y * x


def _check_beta(delta: DeltaIndex, beta: Sequence[int]) -> tuple[int, ...]:
    beta = tuple(beta)
    if len(beta) != delta.l:
        raise BadShape(f"beta {beta} must have length l={delta.l} for pair {tuple(delta)}")
    if any(b < 0 for b in beta):
        raise BadShape(f"beta {beta} has a negative entry")
    return beta


def g_expand(delta: Sequence[int], beta: Sequence[int], k: int | None = None) -> NCPoly:
    """Expand ``(ad e_1)^b1 ... (ad e_{l-1})^b_{l-1} (ad e_l)^{b_l + 1} (e_j)`` into words."""
    delta = DeltaIndex(*delta).check(k)
    beta = _check_beta(delta, beta)
    k = delta.l if k is None else k
    x = NCPoly.gen(delta.j, k)
    # innermost operator first: e_l (b_l + 1 times), then e_{l-1}, ..., e_1
    for i in range(delta.l, 0, -1):
        times = beta[i - 1] + (1 if i == delta.l else 0)
        e = NCPoly.gen(i, k)
        for _ in range(times):
            x = bracket(e, x)
    return x


@dataclass(frozen=True)
class PBWMonomial:
    """``e_1^{alpha_1} ... e_k^{alpha_k} * g_{beta^1 delta_1} ... g_{beta^m delta_m}``."""

    alpha: tuple[int, ...]
    factors: tuple[tuple[DeltaIndex, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        for delta, beta in self.factors:
            _check_beta(DeltaIndex(*delta).check(), beta)

    @property
    def length(self) -> int:
        return sum(self.alpha) + sum(sum(b) + 2 for _, b in self.factors)

    def expand(self, k: int | None = None) -> NCPoly:
        return phi_expand(self.alpha, self.factors, k)


def phi_expand(
    alpha: Sequence[int],
    factors: Sequence[tuple[Sequence[int], Sequence[int]]],
    k: int | None = None,
) -> NCPoly:
    """Ordered product ``e^alpha * g_{beta^1 delta_1} * ... * g_{beta^m delta_m}``."""
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        raise BadShape("alpha has a negative entry")
    if k is None:
        k = max([len(alpha), 1] + [DeltaIndex(*d).l for d, _ in factors])
    if len(alpha) > k:
        raise BadShape(f"alpha {alpha} longer than generator count {k}")
    word = tuple(i + 1 for i, a in enumerate(alpha) for _ in range(a))
    x = NCPoly.word(word, k)
    for delta, beta in factors:
        x = x * g_expand(delta, beta, k)
    return x


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of length ``parts`` with entries summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def betas_up_to(l: int, max_total: int) -> list[tuple[int, ...]]:
    return [b for n in range(max_total + 1) for b in compositions(n, l)]


def g_elements(k: int, max_length: int) -> list[tuple[DeltaIndex, tuple[int, ...]]]:
    """All ``(delta, beta)`` whose commutator has word length ``<= max_length``."""
    return [(d, b) for d in delta_set(k) for b in betas_up_to(d.l, max_length - 2)]


def pbw_monomials(k: int, n: int) -> list[PBWMonomial]:
    """All PBW monomials whose expansion is homogeneous of word length ``n``."""
    deltas = delta_set(k)

    def factor_seqs(length: int):
        if length == 0:
            yield ()
            return
        for first in range(2, length + 1):
            for d in deltas:
                for b in compositions(first - 2, d.l):
                    for rest in factor_seqs(length - first):
                        yield ((d, b),) + rest

    out = []
    for a in range(n + 1):
        for alpha in compositions(a, k):
            for fs in factor_seqs(n - a):
                out.append(PBWMonomial(alpha, fs))
    return out


def _coefficient_rows(elems: Sequence[NCPoly]) -> tuple[list[list], int]:
    words = sorted({w for x in elems for w in x.terms})
    col = {w: i for i, w in enumerate(words)}
    rows = []
    for x in elems:
        row = [0] * len(words)
        for w, c in x.terms.items():
            if not c.is_constant():
                raise BadShape("rank check needs rational coefficients")
            row[col[w]] = c.constant_value()
        rows.append(row)
    return rows, len(words)


def words_rank(elems: Sequence[NCPoly]) -> int:
    """Rank of the given elements viewed as vectors over the word basis."""
    if not elems:
        return 0
    rows, n = _coefficient_rows(elems)
    if n == 0:
        return 0
    return linalg.rank(rows, n)


def commutator_independence(k: int, max_length: int) -> tuple[int, int]:
    """(count, rank) of the iterated commutators of word length <= max_length."""
    elems = [g_expand(d, b, k) for d, b in g_elements(k, max_length)]
    return len(elems), words_rank(elems)


def pbw_rank(k: int, n: int) -> tuple[int, int]:
    """(count, rank) of expanded PBW monomials of word length n; both should be k**n."""
    elems = [m.expand(k) for m in pbw_monomials(k, n)]
    return len(elems), words_rank(elems)


def all_words(k: int, max_len: int) -> list[Word]:
    return [w for n in range(max_len + 1) for w in itertools.product(range(1, k + 1), repeat=n)]
