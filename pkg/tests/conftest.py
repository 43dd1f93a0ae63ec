from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from ncverify.scalars import HBAR, SIGMA, ParamPoly, lam, mu, tvar

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SMALL_VARS = [HBAR, SIGMA, lam(1), lam(2), tvar((2, 1), 1, 1), mu(1, 0)]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@st.composite
def param_polys(draw, variables=SMALL_VARS, max_terms=4, max_exp=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        vs = draw(st.lists(st.sampled_from(variables), max_size=3, unique=True))
        mono = tuple(sorted((v, draw(st.integers(1, max_exp))) for v in vs))
        terms[mono] = draw(rationals)
    return ParamPoly(terms)


@st.composite
def assignments(draw, variables=SMALL_VARS):
    return {v: draw(rationals) for v in variables}


def F(*a):
    return Fraction(*a)


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            n = int(nodeid.split("::test_criterion_")[1].split("_")[0])
            ok = outcome == "passed"
            results[n] = results.get(n, True) and ok
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(f"criterion {n}: {'PASS' if results[n] else 'FAIL'}")
