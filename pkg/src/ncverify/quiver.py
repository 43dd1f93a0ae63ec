"""Quivers, path algebras with polynomial coefficients, and the layered quivers Q_m.

Paths compose left to right: ``a * b`` is nonzero only when ``a`` ends where
``b`` starts, so ``q_u * (arrow u->w) = arrow = arrow * q_w``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Hashable, Iterable, Mapping, NamedTuple, Sequence

from . import linalg
from .errors import BadShape, CyclicQuiver, QuiverMismatch
from .freealg import DeltaIndex, delta_set
from .scalars import ONE, ParamPoly, add_into, addmul_into, finalize_terms


class Arrow(NamedTuple):
    src: Hashable
    dst: Hashable
    label: Hashable


class Path(NamedTuple):
    """A path given by its start and end vertex and its arrow indices."""

    start: Hashable
    end: Hashable
    arrows: tuple = ()

    @property
    def length(self) -> int:
        return len(self.arrows)


def _label_key(x):
    return (type(x).__name__, x)


def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(y) for y in x)
    return x


def _listify(x):
    if isinstance(x, tuple):
        return [_listify(y) for y in x]
    return x


@dataclass(frozen=True, eq=True)
class Quiver:
    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(Arrow(*a) for a in self.arrows))
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise BadShape("duplicate vertex labels")
        for a in self.arrows:
            if a.src not in vs or a.dst not in vs:
                raise BadShape(f"arrow {a} uses an undeclared vertex")

    @cached_property
    def _arrow_index(self) -> dict:
        return {a.label: i for i, a in enumerate(self.arrows)}

    @cached_property
    def _out_arrows(self) -> dict:
        out = {v: [] for v in self.vertices}
        for i, a in enumerate(self.arrows):
            out[a.src].append(i)
        return out

    def arrow_index(self, label) -> int:
        try:
            return self._arrow_index[label]
        except KeyError:
            raise BadShape(f"no arrow labelled {label!r}") from None

    def sorted_vertices(self) -> list:
        try:
            return sorted(self.vertices)
        except TypeError:
            return sorted(self.vertices, key=_label_key)

    def topological_order(self) -> list:
        """Kahn's algorithm; ties broken by vertex label order."""
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.dst] += 1
        rank = {v: i for i, v in enumerate(self.sorted_vertices())}
        ready = sorted((v for v, d in indeg.items() if d == 0), key=rank.__getitem__)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for i in self._out_arrows[v]:
                w = self.arrows[i].dst
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
                    ready.sort(key=rank.__getitem__)
        if len(order) != len(self.vertices):
            raise CyclicQuiver("quiver has an oriented cycle")
        return order

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except CyclicQuiver:
            return False
        return True

    def sinks(self) -> list:
        return [v for v in self.sorted_vertices() if not self._out_arrows[v]]

    @cached_property
    def _all_paths(self) -> tuple:
        order = self.topological_order()
        pos = {v: i for i, v in enumerate(order)}
        paths = [Path(v, v, ()) for v in order]
        frontier = list(paths)
        while frontier:
            nxt = []
            for p in frontier:
                for i in self._out_arrows[p.end]:
                    nxt.append(Path(p.start, self.arrows[i].dst, p.arrows + (i,)))
            paths.extend(nxt)
            frontier = nxt
        paths.sort(key=lambda p: (len(p.arrows), pos[p.start], p.arrows))
        return tuple(paths)

    def paths(self) -> tuple:
        """All paths (requires acyclicity), ordered by length then start vertex."""
        return self._all_paths

    def max_path_length(self) -> int:
        return max((len(p.arrows) for p in self.paths()), default=0)

    def vertex_path(self, v) -> Path:
        if v not in set(self.vertices):
            raise BadShape(f"no vertex {v!r}")
        return Path(v, v, ())

    def arrow_path(self, label) -> Path:
        i = self.arrow_index(label)
        a = self.arrows[i]
        return Path(a.src, a.dst, (i,))

    def to_json(self) -> dict:
        return {
            "vertices": [_listify(v) for v in self.vertices],
            "arrows": [
                {"src": _listify(a.src), "dst": _listify(a.dst), "label": _listify(a.label)}
                for a in self.arrows
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Quiver":
        return cls(
            tuple(_tuplify(v) for v in data["vertices"]),
            tuple(
                Arrow(_tuplify(a["src"]), _tuplify(a["dst"]), _tuplify(a["label"]))
                for a in data["arrows"]
            ),
        )


def concat(q: Quiver, a: Path, b: Path) -> Path | None:
    if a.end != b.start:
        return None
    return Path(a.start, b.end, a.arrows + b.arrows)


class PathElem:
    """Element of the path algebra: finite map path -> ParamPoly."""

    __slots__ = ("quiver", "_terms", "_by_start")

    def __init__(self, quiver: Quiver, terms: Mapping[Path, object] | None = None):
        self.quiver = quiver
        clean: dict[Path, ParamPoly] = {}
        for p, c in (terms or {}).items():
            c = ParamPoly.coerce(c)
            if p in clean:
                c = clean[p] + c
            if c.is_zero():
                clean.pop(p, None)
            else:
                clean[p] = c
        self._terms = clean
        self._by_start = None

    @classmethod
    def _raw(cls, quiver: Quiver, terms: dict) -> "PathElem":
        x = object.__new__(cls)
        x.quiver = quiver
        x._terms = terms
        x._by_start = None
        return x

    @classmethod
    def zero(cls, q: Quiver) -> "PathElem":
        return cls._raw(q, {})

    @classmethod
    def unit(cls, q: Quiver) -> "PathElem":
        return cls._raw(q, {Path(v, v, ()): ONE for v in q.vertices})

    @classmethod
    def idempotent(cls, q: Quiver, v) -> "PathElem":
        return cls._raw(q, {q.vertex_path(v): ONE})

    @classmethod
    def arrow(cls, q: Quiver, label) -> "PathElem":
        return cls._raw(q, {q.arrow_path(label): ONE})

    @classmethod
    def basis(cls, q: Quiver, p: Path) -> "PathElem":
        return cls._raw(q, {p: ONE})

    @property
    def terms(self) -> Mapping[Path, ParamPoly]:
        return self._terms

    def coeff(self, p: Path) -> ParamPoly:
        return self._terms.get(p, ParamPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "PathElem"):
        if other.quiver is not self.quiver and other.quiver != self.quiver:
            raise QuiverMismatch("path algebra elements over different quivers")

    def __add__(self, other) -> "PathElem":
        if not isinstance(other, PathElem):
            other = PathElem.unit(self.quiver) * ParamPoly.coerce(other)
        self._check(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            s = out[p] + c if p in out else c
            if s.is_zero():
                out.pop(p, None)
            else:
                out[p] = s
        return PathElem._raw(self.quiver, out)

    __radd__ = __add__

    def __neg__(self) -> "PathElem":
        return PathElem._raw(self.quiver, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other) -> "PathElem":
        if not isinstance(other, PathElem):
            other = PathElem.unit(self.quiver) * ParamPoly.coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "PathElem":
        return (-self) + other

    def _starts(self) -> dict:
        if self._by_start is None:
            d: dict = {}
            for p, c in self._terms.items():
                d.setdefault(p.start, []).append((p, c))
            self._by_start = d
        return self._by_start

    def __mul__(self, other) -> "PathElem":
        if not isinstance(other, PathElem):
            c = ParamPoly.coerce(other)
            if c.is_zero():
                return PathElem._raw(self.quiver, {})
            return PathElem._raw(self.quiver, {p: v * c for p, v in self._terms.items()})
        self._check(other)
        starts = other._starts()
        acc: dict[Path, dict] = {}
        for p1, c1 in self._terms.items():
            for p2, c2 in starts.get(p1.end, ()):
                p = Path(p1.start, p2.end, p1.arrows + p2.arrows)
                addmul_into(acc.setdefault(p, {}), c1._terms, c2._terms)
        return PathElem._from_acc(self.quiver, acc)

    @classmethod
    def _from_acc(cls, quiver: Quiver, acc: dict) -> "PathElem":
        out = {}
        for p, terms in acc.items():
            t = finalize_terms(terms)
            if t:
                out[p] = ParamPoly._raw(t)
        return cls._raw(quiver, out)

    @classmethod
    def lincomb(cls, quiver: Quiver, items: Iterable[tuple["PathElem", object]]) -> "PathElem":
        """``sum c_i x_i`` for rational or ParamPoly ``c_i``, accumulated in place."""
        acc: dict[Path, dict] = {}
        for x, c in items:
            if x.quiver is not quiver and x.quiver != quiver:
                raise QuiverMismatch("path algebra elements over different quivers")
            if isinstance(c, ParamPoly):
                for p, cp in x._terms.items():
                    addmul_into(acc.setdefault(p, {}), cp._terms, c._terms)
            else:
                for p, cp in x._terms.items():
                    add_into(acc.setdefault(p, {}), cp._terms, c)
        return cls._from_acc(quiver, acc)

    def __rmul__(self, other) -> "PathElem":
        return self * other

    def __eq__(self, other) -> bool:
        if isinstance(other, PathElem):
            return self.quiver == other.quiver and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def min_length(self) -> int:
        return min((len(p.arrows) for p in self._terms), default=-1)

    def subs(self, mapping) -> "PathElem":
        return PathElem(self.quiver, {p: c.subs(mapping) for p, c in self._terms.items()})

    def eval(self, assignment) -> dict[Path, Any]:
        return {p: c.eval(assignment) for p, c in self._terms.items()}

    def to_json(self) -> list[dict]:
        q = self.quiver
        out = []
        for p, c in sorted(self._terms.items(), key=lambda t: (len(t[0].arrows), t[0].arrows, repr(t[0].start))):
            out.append(
                {
                    "start": _listify(p.start),
                    "arrows": [_listify(q.arrows[i].label) for i in p.arrows],
                    "coeff": c.to_json(),
                }
            )
        return out

    def __repr__(self) -> str:
        q = self.quiver
        parts = []
        for p, c in self._terms.items():
            name = "q" + repr(p.start) if not p.arrows else "*".join(
                "v" + repr(q.arrows[i].label) for i in p.arrows
            )
            parts.append(f"({c}){name}")
        return "PathElem(" + (" + ".join(parts) or "0") + ")"


def path_mul(a: PathElem, b: PathElem) -> PathElem:
    if not isinstance(a, PathElem) or not isinstance(b, PathElem):
        raise TypeError("path_mul expects PathElem operands")
    return a * b


def ideal_power_membership(x: PathElem, n: int) -> bool:
    """Is ``x`` in the n-th power of the arrow ideal (every path has >= n arrows)?"""
    if n < 1:
        raise ValueError("n must be >= 1")
    return all(len(p.arrows) >= n for p in x.terms)


# -- the layered quivers Q_m ------------------------------------------------

Q0_VERTEX = "pt"


def qm_vertex(delta, p: int) -> tuple:
    return (DeltaIndex(*delta), p)


def qm_arrow(delta, delta2, p: int) -> tuple:
    return (DeltaIndex(*delta), DeltaIndex(*delta2), p)


def build_qm(k: int, m: int) -> Quiver:
    """Vertices ``(delta, p)``, p = 1..m+1; one arrow ``(delta,p) -> (delta',p+1)`` for all pairs.

    ``m = 0`` gives the one-vertex quiver.
    """
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    if m == 0:
        return Quiver((Q0_VERTEX,), ())
    deltas = delta_set(k)
    vertices = tuple(qm_vertex(d, p) for p in range(1, m + 2) for d in deltas)
    arrows = tuple(
        Arrow(qm_vertex(d, p), qm_vertex(d2, p + 1), qm_arrow(d, d2, p))
        for p in range(1, m + 1)
        for d in deltas
        for d2 in deltas
    )
    return Quiver(vertices, arrows)


def qm_label_path(q: Quiver, labels: Sequence) -> Path:
    """The path ``v_{d1 d2 1} v_{d2 d3 2} ... v_{dm d(m+1) m}`` through the given labels."""
    labels = [DeltaIndex(*d) for d in labels]
    if len(labels) == 1:
        return Path((labels[0], 1), (labels[0], 1), ())
    arrows = tuple(q.arrow_index(qm_arrow(labels[p], labels[p + 1], p + 1)) for p in range(len(labels) - 1))
    return Path((labels[0], 1), (labels[-1], len(labels)), arrows)


# -- triangular embedding ----------------------------------------------------


@dataclass
class TriangularEmbedding:
    """Faithful representation of an acyclic path algebra by upper triangular matrices.

    The module is spanned by the paths ending at sinks, ordered by decreasing
    length; left multiplication by a path of positive length strictly
    increases length, so it is strictly upper triangular in this order.
    """

    quiver: Quiver
    module_basis: tuple

    @cached_property
    def _pos(self) -> dict:
        return {p: i for i, p in enumerate(self.module_basis)}

    @property
    def size(self) -> int:
        return len(self.module_basis)

    def matrix(self, path: Path) -> list[list[int]]:
        n = self.size
        m = [[0] * n for _ in range(n)]
        for col, b in enumerate(self.module_basis):
            c = concat(self.quiver, path, b)
            if c is not None:
                m[self._pos[c]][col] = 1
        return m

    def apply(self, x: PathElem) -> list[list[ParamPoly]]:
        if x.quiver != self.quiver:
            raise QuiverMismatch("element over a different quiver")
        n = self.size
        m = [[ParamPoly() for _ in range(n)] for _ in range(n)]
        for p, c in x.terms.items():
            for col, b in enumerate(self.module_basis):
                r = concat(self.quiver, p, b)
                if r is not None:
                    i = self._pos[r]
                    m[i][col] = m[i][col] + c
        return m

    def verify(self) -> dict:
        """Multiplicativity on all basis pairs, triangularity, and injectivity by rank."""
        paths = self.quiver.paths()
        mats = {p: self.matrix(p) for p in paths}
        n = self.size
        multiplicative = True
        for a, b in itertools.product(paths, repeat=2):
            c = concat(self.quiver, a, b)
            prod = linalg.matmul(mats[a], mats[b])
            want = mats[c] if c is not None else [[0] * n for _ in range(n)]
            if any(prod[i][j] != want[i][j] for i in range(n) for j in range(n)):
                multiplicative = False
                break
        upper = all(
            mats[p][i][j] == 0 for p in paths for i in range(n) for j in range(i)
        )
        strict_on_ideal = all(
            mats[p][i][i] == 0 for p in paths if p.arrows for i in range(n)
        )
        flat = [[x for row in mats[p] for x in row] for p in paths]
        r = linalg.rank(flat, n * n) if paths else 0
        return {
            "multiplicative": multiplicative,
            "upper_triangular": upper,
            "ideal_strictly_upper": strict_on_ideal,
            "rank": r,
            "dimension": len(paths),
            "injective": r == len(paths),
        }


def acyclic_to_triangular(q: Quiver) -> TriangularEmbedding:
    order = q.topological_order()  # raises CyclicQuiver
    pos = {v: i for i, v in enumerate(order)}
    sinks = set(q.sinks())
    module = [p for p in q.paths() if p.end in sinks]
    module.sort(key=lambda p: (-len(p.arrows), pos[p.start], p.arrows))
    return TriangularEmbedding(q, tuple(module))


def split_nilpotent_check(q: Quiver) -> dict:
    """Check ``RQ = A (+) I`` with A the idempotent span (a subalgebra) and I nilpotent."""
    paths = q.paths()
    idem = [p for p in paths if not p.arrows]
    arrows_ideal = [p for p in paths if p.arrows]
    a_closed = all(
        (concat(q, a, b) is None) == (a != b) for a in idem for b in idem
    )
    # I^n is spanned by paths of length >= n, so I^n = 0 once n exceeds the longest path
    nil_index = q.max_path_length() + 1
    ideal = all(
        c is None or c.arrows
        for a in arrows_ideal
        for b in paths
        for c in (concat(q, a, b), concat(q, b, a))
    )
    nilpotent = ideal and not any(len(p.arrows) >= nil_index for p in paths)
    return {
        "dim_algebra": len(paths),
        "dim_idempotent_span": len(idem),
        "dim_arrow_ideal": len(arrows_ideal),
        "direct_sum": len(idem) + len(arrows_ideal) == len(paths),
        "subalgebra": a_closed,
        "nilpotency_index": nil_index,
        "is_ideal": ideal,
        "nilpotent": nilpotent,
    }


def to_fd_algebra(q: Quiver, with_rep: bool = True):
    """Structure constants of the path algebra on the path basis."""
    from .pgrowth import FDAlgebra

    paths = q.paths()
    idx = {p: i for i, p in enumerate(paths)}
    n = len(paths)
    table = [[{} for _ in range(n)] for _ in range(n)]
    for a in paths:
        for b in paths:
            c = concat(q, a, b)
            if c is not None:
                table[idx[a]][idx[b]] = {idx[c]: 1}
    unit = [1 if not p.arrows else 0 for p in paths]
    rep = None
    if with_rep:
        emb = acyclic_to_triangular(q)
        rep = [emb.matrix(p) for p in paths]
    return FDAlgebra(n, table, unit, rep=rep, name="path algebra")
