"""``ncverify`` command line: appendix identities, af_1 tower, Hopf checks, growth decisions.

Exit status: 0 when every case is PASS or SKIP, 1 when any case FAILs,
2 for usage and input errors.  The worker count for the appendix suite comes
from the ``NCVERIFY_WORKERS`` environment variable (default 1).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from . import af1, hopf, pgrowth, reps
from .errors import NCVerifyError
from .report import Report
from .scalars import rational_to_json

K_MAX = 4
M_MAX = 3
BETA_MAX = 3
WORKERS_ENV = "NCVERIFY_WORKERS"


class UsageError(Exception):
    pass


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, n)


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


# -- verify appendix ------------------------------------------------------------------


def cmd_verify_appendix(k: int, m: int, beta_max: int = 2, workers: int = 1) -> Report:
    if not 1 <= k <= K_MAX:
        raise UsageError(f"k must be in 1..{K_MAX}")
    if not 0 <= m <= M_MAX:
        raise UsageError(f"m must be in 0..{M_MAX}")
    if not 0 <= beta_max <= BETA_MAX:
        raise UsageError(f"beta-max must be in 0..{BETA_MAX}")
    rep = Report("appendix", {"k": k, "m": m, "beta_max": beta_max})
    rep.extend(reps.run_appendix(k, m, beta_max, workers))
    if not reps.delta_set(k):
        rep.artifacts["note"] = "k = 1: the index set is empty, so the family is vacuous"
    return rep


# -- af1 -------------------------------------------------------------------------------


def load_golden() -> dict:
    with resources.files("ncverify").joinpath("data/golden_af1.json").open() as fh:
        return json.load(fh)


def _matrix_text(M: af1.UTMatrix) -> str:
    cells = [[str(x) if x else "0" for x in row] for row in M.rows]
    w = max(len(c) for row in cells for c in row)
    return "\n".join("  [" + "  ".join(c.rjust(w) for c in row) + "]" for row in cells)


def cmd_af1(p: int, with_lambda: bool = False) -> Report:
    if p < 0:
        raise UsageError("p must be >= 0")
    rep = Report("af1", {"p": p, "lambda": with_lambda})
    pi = af1.build_pi(p, with_lambda)
    alphas = pi.alphas.alphas if pi.alphas else {}
    rep.artifacts["alphas"] = {str(j): a.to_json() for j, a in sorted(alphas.items())}
    rep.artifacts["pi"] = pi.to_json()
    rep.text["alphas"] = "\n".join(f"  alpha_{j} = {a if a else 0}" for j, a in sorted(alphas.items())) or "  (none)"
    rep.text["pi(e1)"] = _matrix_text(pi.e1)
    rep.text["pi(e2)"] = _matrix_text(pi.e2)

    even_zero = all(a.is_zero() for j, a in alphas.items() if j % 2 == 0)
    rep.add("alphas/even_vanish", even_zero)
    rep.add("relation/[pi(e1),pi(e2)]=sigma*sinh(hbar*pi(e2))", af1.verify_relation(p, with_lambda))

    golden = load_golden()
    degree = golden["degree"]
    theta = af1.theta_pi(p, af1.generic_f(p, degree))
    rep.artifacts["theta_generic"] = {"degree": degree, "matrix": theta.to_json()}
    if str(p) in golden["pi"]:
        g = golden["pi"][str(p)]
        plain = af1.build_pi(p)
        rep.add("golden/pi(e1)", plain.e1 == af1.UTMatrix.from_json(g["e1"]))
        rep.add("golden/pi(e2)", plain.e2 == af1.UTMatrix.from_json(g["e2"]))
        rep.add("golden/theta", theta == af1.UTMatrix.from_json(golden["theta"][str(p)]["expanded"]))
    else:
        rep.add("golden", "SKIP", {"reason": "golden matrices exist for p <= 3 only"})

    coeffs = af1.shift_coefficients(p)
    rep.artifacts["rho_shift_coefficients"] = [c.to_json() for c in coeffs]
    rep.add("rho/top_coefficient_one", coeffs[p] == 1, {"coefficients": [str(c) for c in coeffs]})
    return rep


# -- hopf -------------------------------------------------------------------------------


def cmd_hopf(target: str, q=None, trunc=None, k=None, length=None) -> Report:
    if target == "qsl2":
        q = Fraction(2) if q is None else q
        if q in (0, 1, -1):
            raise UsageError("q must not be 0, 1 or -1")
        rep = Report("hopf/qsl2", {"q": rational_to_json(q)})
        rep.extend(hopf.qsl2_hopf_check(q).cases())
        if trunc is not None:
            if trunc < 1:
                raise UsageError("--trunc must be >= 1")
            inv = hopf.qsl2_trunc_invert(q, trunc)
            rep.params["trunc"] = trunc
            rep.extend(inv.cases(), prefix="trunc/")
            rep.artifacts["inverse"] = inv.params["inverse"]
        return rep
    if target == "af1":
        N = 4 if trunc is None else trunc
        if N < 2:
            raise UsageError("--trunc must be >= 2 for af1")
        r = hopf.af1_hopf_check(N)
        rep = Report("hopf/af1", {"trunc": N})
        rep.extend(r.cases())
        rep.artifacts["S^2(e1)-e1"] = r.params["S^2(e1)-e1"]
        return rep
    if target == "taft":
        r, growth = hopf.taft_check()
        rep = Report("hopf/taft", r.params)
        rep.extend(r.cases())
        rep.artifacts["growth"] = growth
        rep.artifacts["axioms_passed"] = r.axioms_passed
        return rep
    if target == "free":
        k = 2 if k is None else k
        L = 3 if length is None else length
        if k < 1 or L < 1:
            raise UsageError("--k and --len must be >= 1")
        rep = Report("hopf/free", {"k": k, "len": L})
        rep.extend(hopf.free_primitive_check(k, L).cases())
        return rep
    raise UsageError(f"unknown hopf target {target!r}")


# -- pgrowth ----------------------------------------------------------------------------


class InputError(Exception):
    pass


def load_algebra(path: str) -> pgrowth.FDAlgebra:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        return pgrowth.FDAlgebra.from_json(data)
    except NCVerifyError as exc:
        raise InputError(f"{path}: {exc}") from None


def _growth_report(suite: str, A: pgrowth.FDAlgebra, params: dict) -> Report:
    rep = Report(suite, params)
    cert = pgrowth.decide_growth(A)
    rep.artifacts["certificate"] = cert.to_json()
    rep.artifacts["verdict"] = cert.verdict
    rep.add("decision", True, {"verdict": cert.verdict, "violation": cert.violation})
    rep.add("certificate/reverified", cert.verify(A))
    if cert.verdict == pgrowth.POLY_GROWTH:
        if cert.embedding is None:
            rep.add("embedding", "SKIP", {"reason": cert.note})
        else:
            rep.add("embedding/triangular", cert.embedding.verify(A))
    rep.text["verdict"] = f"  {cert.verdict}" + (f" ({cert.violation})" if cert.violation else "")
    return rep


def cmd_pgrowth_decide(path: str) -> Report:
    A = load_algebra(path)
    return _growth_report("pgrowth/decide", A, {"file": os.path.basename(path), "dim": A.dim})


def cmd_pgrowth_tensor(path_a: str, path_b: str) -> Report:
    A, B = load_algebra(path_a), load_algebra(path_b)
    T = pgrowth.tensor_fd(A, B)
    rep = _growth_report(
        "pgrowth/tensor", T, {"a": os.path.basename(path_a), "b": os.path.basename(path_b), "dim": T.dim}
    )
    rep.artifacts["algebra"] = T.to_json()
    return rep


# -- entry point -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncverify", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="pretty", action="store_false", help="JSON report (default)")
    g.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable report")
    fmt.set_defaults(pretty=False)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="polynomial identities for the path-algebra families")
    vsub = v.add_subparsers(dest="what", required=True)
    va = vsub.add_parser("appendix", parents=[fmt])
    va.add_argument("--k", type=int, required=True)
    va.add_argument("--m", type=int, required=True)
    va.add_argument("--beta-max", type=int, default=2)

    a = sub.add_parser("af1", parents=[fmt], help="triangular representations of the af_1 deformation")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--lambda", dest="with_lambda", action="store_true")

    h = sub.add_parser("hopf", help="Hopf axiom checks")
    hsub = h.add_subparsers(dest="what", required=True)
    hc = hsub.add_parser("check", parents=[fmt])
    hc.add_argument("target", choices=["qsl2", "af1", "taft", "free"])
    hc.add_argument("--q", type=_rational)
    hc.add_argument("--trunc", type=int)
    hc.add_argument("--k", type=int)
    hc.add_argument("--len", dest="length", type=int)

    pg = sub.add_parser("pgrowth", help="polynomial-growth decision for finite-dimensional algebras")
    pgsub = pg.add_subparsers(dest="what", required=True)
    pd = pgsub.add_parser("decide", parents=[fmt])
    pd.add_argument("file")
    pt = pgsub.add_parser("tensor", parents=[fmt])
    pt.add_argument("a")
    pt.add_argument("b")
    return parser


def run(args: argparse.Namespace) -> Report:
    if args.command == "verify":
        return cmd_verify_appendix(args.k, args.m, args.beta_max, _workers())
    if args.command == "af1":
        return cmd_af1(args.p, args.with_lambda)
    if args.command == "hopf":
        return cmd_hopf(args.target, args.q, args.trunc, args.k, args.length)
    if args.what == "decide":
        return cmd_pgrowth_decide(args.file)
    return cmd_pgrowth_tensor(args.a, args.b)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        report = run(args)
    except (UsageError, InputError, NCVerifyError) as exc:
        print(f"ncverify: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.pretty() if args.pretty else report.dumps())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
