import os

import pytest

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def acceptance_report():
    return ACCEPTANCE


def pytest_addoption(parser):
    parser.addoption("--run-solver", action="store_true", default=False,
                     help="also run tests that call an external SMT solver (needs z3-solver)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-solver") or os.environ.get("PLNN_RUN_SOLVER"):
        return
    skip = pytest.mark.skip(reason="needs --run-solver or PLNN_RUN_SOLVER=1")
    for item in items:
        if "solver" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {line}")
