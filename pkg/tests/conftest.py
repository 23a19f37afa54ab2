import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--include-slow",
        action="store_true",
        default=False,
        help="run the E7/E8 sweeps and other long computations",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--include-slow"):
        return
    skip = pytest.mark.skip(reason="slow; pass --include-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES = {}


@pytest.fixture
def acceptance():
    """Record the PASS/FAIL line of one acceptance criterion."""

    def record(number, ok, detail):
        ACCEPTANCE_LINES[number] = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
