import math

import pytest


def series_i(nu, z, terms=60):
    """Truncated ascending series for I_nu, independent of the package."""
    return math.fsum(
        (z / 2) ** (nu + 2 * k) / (math.factorial(k) * math.gamma(nu + k + 1))
        for k in range(terms)
    )


def series_j(nu, z, terms=60):
    return math.fsum(
        (-1) ** k * (z / 2) ** (nu + 2 * k) / (math.factorial(k) * math.gamma(nu + k + 1))
        for k in range(terms)
    )


def central_diff(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


@pytest.fixture
def tmp_out(tmp_path):
    return tmp_path


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
