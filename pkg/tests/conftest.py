from fractions import Fraction

import pytest
from hypothesis import settings

from bfshvs import fixtures
from bfshvs.algebra import AbelianGroup, FiniteField, to_mask
from bfshvs.harness import inflated_space, total_space

settings.register_profile("quick", max_examples=60, deadline=None)
settings.load_profile("quick")


@pytest.fixture
def z4():
    return fixtures.z4_z2()


@pytest.fixture
def psoft():
    return fixtures.parity_soft_set()


@pytest.fixture
def classical_z2sq():
    """Z2^2 over Z2 with a o x = {a x}."""
    return inflated_space(FiniteField.prime(2), AbelianGroup.cyclic_product(2, 2), to_mask([0]))


@pytest.fixture
def total_z2sq():
    return total_space(FiniteField.prime(2), AbelianGroup.cyclic_product(2, 2))


def F(s):
    return Fraction(s)


# -- acceptance summary ----------------------------------------------------

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    key, title = marker.args
    ok = rep.passed and not hasattr(rep, "wasxfail")
    entry = _CRITERIA.setdefault(key, {"title": title, "failed": []})
    if not ok:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        entry = _CRITERIA[key]
        verdict = "FAIL" if entry["failed"] else "PASS"
        detail = f"  ({', '.join(entry['failed'])})" if entry["failed"] else ""
        terminalreporter.write_line(f"{verdict} criterion {key}: {entry['title']}{detail}")
