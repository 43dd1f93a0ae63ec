"""Exact scalars: rationals and sparse polynomials in named formal parameters.

Rationals are :class:`fractions.Fraction` (plain ``int`` is accepted wherever a
rational is expected).  :class:`ParamPoly` is a sparse multivariate polynomial
over the rationals whose variables are drawn from a fixed namespace:

* ``hbar`` -- the deformation parameter,
* ``sigma`` -- a free formal stand-in for ``1/sinh(hbar)``,
* ``lambda_i`` -- spectral parameters,
* ``t_{l}.{j}_{p}_{i}`` -- quiver-family parameters indexed by a pair ``(l, j)``,
  a layer ``p`` and a generator ``i``,
* ``mu_{p}_{i}`` -- auxiliary commutative variables.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import MissingVariable

__all__ = [
    "Var",
    "ParamPoly",
    "Scalar",
    "HBAR",
    "SIGMA",
    "lam",
    "tvar",
    "mu",
    "poly_mul",
    "poly_eval",
    "as_fraction",
    "rational_to_json",
    "rational_from_json",
]

Scalar = Union[int, Fraction]

# variable kinds, in canonical order
K_HBAR, K_SIGMA, K_LAMBDA, K_T, K_MU = range(5)


class Var(NamedTuple):
    """A formal parameter.  Ordering is by kind, then indices lexicographically."""

    kind: int
    idx: tuple = ()

    @property
    def name(self) -> str:
        if self.kind == K_HBAR:
            return "hbar"
        if self.kind == K_SIGMA:
            return "sigma"
        if self.kind == K_LAMBDA:
            return f"lambda_{self.idx[0]}"
        if self.kind == K_T:
            l, j, p, i = self.idx
            return f"t_{l}.{j}_{p}_{i}"
        if self.kind == K_MU:
            return f"mu_{self.idx[0]}_{self.idx[1]}"
        raise ValueError(f"unknown variable kind {self.kind}")

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Var({self.name})"

    @classmethod
    def parse(cls, name: str) -> "Var":
        if name == "hbar":
            return HBAR
        if name == "sigma":
            return SIGMA
        m = re.fullmatch(r"lambda_(\d+)", name)
        if m:
            return lam(int(m.group(1)))
        m = re.fullmatch(r"t_(\d+)\.(\d+)_(\d+)_(\d+)", name)
        if m:
            l, j, p, i = map(int, m.groups())
            return tvar((l, j), p, i)
        m = re.fullmatch(r"mu_(\d+)_(\d+)", name)
        if m:
            return mu(int(m.group(1)), int(m.group(2)))
        raise ValueError(f"not a variable name: {name!r}")


HBAR = Var(K_HBAR)
SIGMA = Var(K_SIGMA)


def lam(i: int) -> Var:
    return Var(K_LAMBDA, (i,))


def tvar(delta: tuple[int, int], p: int, i: int) -> Var:
    return Var(K_T, (delta[0], delta[1], p, i))


def mu(p: int, i: int) -> Var:
    return Var(K_MU, (p, i))


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _norm(c):
    # keep integers as int; Fraction with denominator 1 collapses to int
    # type() rather than isinstance: Fraction's ABCMeta check dominates hot loops
    if type(c) is Fraction and c._denominator == 1:
        return c._numerator
    return c


def rational_to_json(x) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_json(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise TypeError(f"rational must be a 'num/den' string, got {s!r}")
    return Fraction(s)


Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by Var

# Internally a monomial is packed into one int: each variable owns a 16-bit
# field (slots are handed out on first use), so multiplying monomials is
# integer addition.  Bit 15 of every field is a guard: operands keep it clear,
# and a product with the guard set means an exponent overflowed.
_FIELD = 16
_FMASK = (1 << _FIELD) - 1
_MAX_EXP = (1 << (_FIELD - 1)) - 1
_slot: dict[Var, int] = {}
_slot_vars: list[Var] = []
_guard = 0


def _slot_of(v: Var) -> int:
    global _guard
    s = _slot.get(v)
    if s is None:
        s = len(_slot_vars)
        _slot[v] = s
        _slot_vars.append(v)
        _guard |= 1 << (s * _FIELD + _FIELD - 1)
    return s


def encode_monomial(mono: Iterable[tuple[Var, int]]) -> int:
    key = 0
    for v, e in mono:
        if e < 0 or e > _MAX_EXP:
            raise OverflowError(f"exponent {e} of {v.name} out of range")
        key += e << (_slot_of(v) * _FIELD)
    return key


def decode_monomial(key: int) -> Monomial:
    out = []
    s = 0
    while key:
        e = key & _FMASK
        if e:
            out.append((_slot_vars[s], e))
        key >>= _FIELD
        s += 1
    out.sort()
    return tuple(out)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of two decoded monomials."""
    return decode_monomial(encode_monomial(a) + encode_monomial(b))


def addmul_into(out: dict, a: Mapping, b: Mapping, scale=1) -> None:
    """``out += scale * a * b`` on packed term maps; zeros are left for finalize_terms."""
    if len(a) < len(b):
        a, b = b, a
    get = out.get
    for m2, c2 in b.items():
        if scale != 1:
            c2 = c2 * scale
        for m1, c1 in a.items():
            key = m1 + m2
            out[key] = get(key, 0) + c1 * c2


def add_into(out: dict, a: Mapping, scale=1) -> None:
    get = out.get
    if scale == 1:
        for m, c in a.items():
            out[m] = get(m, 0) + c
    else:
        for m, c in a.items():
            out[m] = get(m, 0) + c * scale


def finalize_terms(out: dict) -> dict:
    g = _guard
    res = {}
    for m, c in out.items():
        if c:
            if m & g:
                raise OverflowError("exponent overflow in polynomial product")
            if type(c) is Fraction and c._denominator == 1:
                c = c._numerator
            res[m] = c
    return res


class ParamPoly:
    """Immutable sparse polynomial with rational coefficients.

    Two polynomials are equal iff their term maps are identical; no zero
    coefficient is ever stored.  ``terms`` exposes monomials as sorted
    ``((Var, exp), ...)`` tuples.
    """

    __slots__ = ("_terms", "_hash", "_decoded")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict = {}
        if terms:
            for mono, c in terms.items():
                if c != 0:
                    key = encode_monomial(mono)
                    clean[key] = clean.get(key, 0) + as_fraction(c)
        self._terms = finalize_terms(clean)
        self._hash = None
        self._decoded = None

    @classmethod
    def _raw(cls, terms: dict) -> "ParamPoly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        p._decoded = None
        return p

    def __reduce__(self):
        return (ParamPoly, (dict(self.terms),))

    # -- construction -----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "ParamPoly":
        c = _norm(as_fraction(c)) if not isinstance(c, int) else c
        return cls._raw({0: c} if c != 0 else {})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "ParamPoly":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls._raw({encode_monomial(((v, exp),)): 1})

    @classmethod
    def coerce(cls, x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, Var):
            return cls.var(x)
        return cls.const(x)

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        if self._decoded is None:
            self._decoded = {decode_monomial(k): c for k, c in self._terms.items()}
        return self._decoded

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> Fraction:
        """Constant term (as a Fraction)."""
        return as_fraction(self._terms.get(0, 0))

    def variables(self) -> list[Var]:
        return sorted({v for mono in self.terms for v, _ in mono})

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e for _, e in mono) for mono in self.terms)

    def degree_in(self, v: Var) -> int:
        if not self._terms:
            return -1
        shift = _slot_of(v) * _FIELD
        return max((k >> shift) & _FMASK for k in self._terms)

    def coeffs_in(self, v: Var) -> list["ParamPoly"]:
        """Coefficients ``[c_0, c_1, ...]`` with ``self = sum c_d * v**d``."""
        shift = _slot_of(v) * _FIELD
        buckets: dict[int, dict] = {}
        for k, c in self._terms.items():
            d = (k >> shift) & _FMASK
            buckets.setdefault(d, {})[k - (d << shift)] = c
        if not buckets:
            return []
        return [ParamPoly._raw(buckets.get(d, {})) for d in range(max(buckets) + 1)]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            try:
                other = ParamPoly.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = _norm(s)
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            try:
                other = ParamPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ParamPoly":
        return ParamPoly.coerce(other) - self

    def __mul__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return ParamPoly._raw({})
                return ParamPoly._raw({m: _norm(c * other) for m, c in self._terms.items()})
            try:
                other = ParamPoly.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ParamPoly._raw({})
        out: dict = {}
        addmul_into(out, a, b)
        return ParamPoly._raw(finalize_terms(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ParamPoly":
        d = as_fraction(other)
        if d == 0:
            raise ZeroDivisionError("division of ParamPoly by zero")
        return self * (1 / d)

    def __pow__(self, n: int) -> "ParamPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("ParamPoly powers must be non-negative integers")
        result = ParamPoly._raw({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {0: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- evaluation -------------------------------------------------------
    def eval(self, assignment: Mapping[Var, Scalar]) -> Fraction:
        """Exact value at a rational point covering every variable."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = as_fraction(c)
            for v, e in mono:
                try:
                    x = assignment[v]
                except KeyError:
                    raise MissingVariable(f"no value assigned to {v.name}") from None
                term *= as_fraction(x) ** e
            total += term
        return total

    def subs(self, mapping: Mapping[Var, object]) -> "ParamPoly":
        """Simultaneous substitution of variables by polynomials or rationals."""
        images = {v: ParamPoly.coerce(x) for v, x in mapping.items()}
        powers: dict[tuple[Var, int], dict] = {}
        out: dict = {}
        for mono, c in self.terms.items():
            term = {0: c}
            kept = 0
            for v, e in mono:
                if v in images:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = (images[v] ** e)._terms
                    nxt: dict = {}
                    addmul_into(nxt, term, powers[key])
                    term = nxt
                else:
                    kept += e << (_slot_of(v) * _FIELD)
            addmul_into(out, term, {kept: 1})
        return ParamPoly._raw(finalize_terms(out))

    @staticmethod
    def sum(items: Iterable["ParamPoly"]) -> "ParamPoly":
        out: dict = {}
        for x in items:
            add_into(out, ParamPoly.coerce(x)._terms)
        return ParamPoly._raw(finalize_terms(out))

    # -- serialization ----------------------------------------------------
    def to_json(self) -> list[dict]:
        return [
            {"vars": {v.name: e for v, e in mono}, "coeff": rational_to_json(c)}
            for mono, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "ParamPoly":
        terms: dict = {}
        for rec in data:
            mono = tuple(sorted((Var.parse(n), int(e)) for n, e in rec["vars"].items()))
            c = rational_from_json(rec["coeff"])
            terms[mono] = terms.get(mono, 0) + c
        return cls(terms)

    def __repr__(self) -> str:
        return f"ParamPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            c = as_fraction(c)
            body = "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = ParamPoly()
ONE = ParamPoly.const(1)


def poly_mul(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    return a * b


def poly_eval(p: ParamPoly, assignment: Mapping[Var, Scalar]) -> Fraction:
    return p.eval(assignment)
