from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from affect2d.lexicon import load_general_inquirer, load_sentiwordnet
from affect2d.synthetic import fixture_lexicons

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def lexicons():
    return fixture_lexicons()


@pytest.fixture(scope="session")
def sentlex(lexicons):
    return lexicons[0]


@pytest.fixture(scope="session")
def catlex(lexicons):
    return lexicons[1]


@pytest.fixture(scope="session")
def sample_sentlex():
    return load_sentiwordnet(FIXTURES / "sentiwordnet_sample.txt")


@pytest.fixture(scope="session")
def sample_catlex():
    return load_general_inquirer(FIXTURES / "inquirer_sample.tsv")


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
