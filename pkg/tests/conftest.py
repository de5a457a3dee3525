import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
INPUTS = os.path.join(ROOT, "inputs")

_acceptance = {}


@pytest.fixture
def inputs_dir():
    return INPUTS


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = (report.outcome, report.user_properties)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[2])):
        n = name.split("_")[2]
        outcome, props = _acceptance[name]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        extra = "  ".join(f"{k}={v}" for k, v in props)
        terminalreporter.write_line(f"criterion {n}: {verdict}" + (f"  {extra}" if extra else ""))
