import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from supertp import AlgebraSignature, Derivation, Element, Monomial, TPStructure, partial  # noqa: E402

SPECS = Path(__file__).resolve().parent.parent / "specs"


@pytest.fixture
def A():
    """Q[t] (x) Lambda(th1, th2)."""
    return AlgebraSignature(("t",), ("th1", "th2"))


@pytest.fixture
def delta(A):
    return Derivation(A, 1, {"th1": A.gen("t"), "th2": A.one()}, name="delta")


@pytest.fixture
def V():
    """Q[t] (x) Lambda(th1, th2, th3)."""
    return AlgebraSignature(("t",), ("th1", "th2", "th3"), name="V")


@pytest.fixture
def V_delta(V):
    return Derivation(V, 1, {"th1": V.gen("t"), "th2": V.one()}, name="delta")


@pytest.fixture
def P():
    """Q[t, s] (x) Lambda(th1, th2)."""
    return AlgebraSignature(("t", "s"), ("th1", "th2"), name="P")


@pytest.fixture
def ts_structure(P):
    return TPStructure(P, partial(P, "t"), partial(P, "s"))


@pytest.fixture
def spec_file():
    return SPECS / "models.spec"


# -- hypothesis strategies -------------------------------------------------------

SIG = AlgebraSignature(("t", "s"), ("a", "b", "c"), name="H")


def monomials(sig=SIG, max_exp=2):
    n_even, n_odd = len(sig.even_generators), len(sig.odd_generators)
    return st.builds(
        Monomial,
        st.tuples(*[st.integers(0, max_exp)] * n_even),
        st.integers(0, (1 << n_odd) - 1),
    )


def elements(sig=SIG, parity=None, max_terms=3):
    mono = monomials(sig)
    if parity is not None:
        mono = mono.filter(lambda m: m.parity == parity)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=3)
    return st.dictionaries(mono, coeffs, max_size=max_terms).map(
        lambda d: Element({m: Fraction(c) for m, c in d.items()}, sig)
    )


def homogeneous(sig=SIG, max_terms=3):
    return st.integers(0, 1).flatmap(
        lambda p: st.tuples(st.just(p), elements(sig, parity=p, max_terms=max_terms))
    )


# -- acceptance summary ----------------------------------------------------------

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args[0]
    title = marker.args[1] if len(marker.args) > 1 else ""
    if report.when == "call" or (report.when == "setup" and report.failed):
        previous = _CRITERIA.get(key, (title, True))[1]
        _CRITERIA[key] = (title, previous and report.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        title, ok = _CRITERIA[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {title}")
