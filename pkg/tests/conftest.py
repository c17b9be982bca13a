import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in sorted(test_acceptance.REPORT):
        terminalreporter.write_line(f"{status}  {name}  [{detail}]")
