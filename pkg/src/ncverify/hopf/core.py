"""Shared pieces for the Hopf checkers: reports and tensor arithmetic.

A tensor is a dict mapping tuples of basis keys (one key per factor) to
coefficients; coefficients are Fractions or ParamPolys and zeros are dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

FAMILIES = (
    "delta_homomorphism",
    "coassociativity",
    "counit",
    "antipode",
    "antipode_antihomomorphism",
)


@dataclass
class HopfReport:
    """Per-axiom-family results; extra families (reps, inverses) follow the five core ones."""

    name: str
    params: dict = field(default_factory=dict)
    families: dict = field(default_factory=dict)  # family -> list of case dicts

    def add(self, family: str, case_id: str, ok: bool, detail: dict | None = None) -> None:
        self.families.setdefault(family, []).append(
            {"id": f"{family}/{case_id}", "status": "PASS" if ok else "FAIL", "detail": detail or {}}
        )

    def family_passed(self, family: str) -> bool:
        cases = self.families.get(family, [])
        return bool(cases) and all(c["status"] == "PASS" for c in cases)

    @property
    def axioms_passed(self) -> bool:
        return all(self.family_passed(f) for f in FAMILIES)

    @property
    def passed(self) -> bool:
        return all(c["status"] == "PASS" for cs in self.families.values() for c in cs)

    def cases(self) -> list[dict]:
        order = list(FAMILIES) + sorted(f for f in self.families if f not in FAMILIES)
        return [c for f in order for c in self.families.get(f, [])]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "families": {f: self.family_passed(f) for f in self.families},
            "cases": self.cases(),
        }


Tensor = dict


def clean(t: dict) -> dict:
    return {k: v for k, v in t.items() if v}


def t_add(*ts: dict) -> dict:
    out: dict = {}
    for t in ts:
        for k, v in t.items():
            out[k] = out[k] + v if k in out else v
    return clean(out)


def t_scale(t: dict, c) -> dict:
    return clean({k: v * c for k, v in t.items()})


def t_sub(a: dict, b: dict) -> dict:
    return t_add(a, {k: -v for k, v in b.items()})


def t_mul(a: dict, b: dict, muls: Sequence[Callable[[Any, Any], dict]]) -> dict:
    """Factorwise product; ``muls[i](k1, k2)`` returns the product of basis keys in factor i."""
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            c = ca * cb
            if not c:
                continue
            partial = {(): c}
            for i, mul in enumerate(muls):
                prod = mul(ka[i], kb[i])
                nxt: dict = {}
                for pk, pc in partial.items():
                    for key, kc in prod.items():
                        nk = pk + (key,)
                        v = pc * kc
                        nxt[nk] = nxt[nk] + v if nk in nxt else v
                partial = nxt
                if not partial:
                    break
            for k, v in partial.items():
                out[k] = out[k] + v if k in out else v
    return clean(out)


def t_power(x: dict, n: int, one: dict, muls) -> dict:
    out = one
    for _ in range(n):
        out = t_mul(out, x, muls)
    return out


def t_map(t: dict, maps: Sequence[Callable[[Any], dict] | None]) -> dict:
    """Apply a linear map (basis key -> tensor over its own factors) to each factor.

    A ``None`` entry is the identity.  Each map returns a dict keyed by tuples,
    which are spliced into the result key.
    """
    out: dict = {}
    for key, c in t.items():
        partial = {(): c}
        for i, f in enumerate(maps):
            img = {(key[i],): 1} if f is None else f(key[i])
            nxt: dict = {}
            for pk, pc in partial.items():
                for ik, ic in img.items():
                    nk = pk + tuple(ik)
                    v = pc * ic
                    nxt[nk] = nxt[nk] + v if nk in nxt else v
            partial = nxt
        for k, v in partial.items():
            out[k] = out[k] + v if k in out else v
    return clean(out)


def t_contract(t: dict, mul: Callable[[Any, Any], dict]) -> dict:
    """Multiply the two factors of a 2-tensor: ``m(x (x) y) = xy``; keys become 1-tuples."""
    out: dict = {}
    for (k1, k2), c in t.items():
        for k, v in mul(k1, k2).items():
            key = (k,)
            out[key] = out[key] + c * v if key in out else c * v
    return clean(out)


def serialize(t: dict, coeff_json: Callable[[Any], Any]) -> list:
    return [{"key": [list(k) if isinstance(k, tuple) else k for k in key], "coeff": coeff_json(v)} for key, v in sorted(t.items(), key=lambda kv: repr(kv[0]))]
