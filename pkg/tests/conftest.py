import pytest

_RESULTS_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = []


@pytest.fixture
def acceptance_record(request):
    """Call with (criterion, ok, detail); lines are printed in the terminal summary."""
    results = request.config.stash[_RESULTS_KEY]

    def record(criterion: str, ok: bool, detail: str = ""):
        results.append((criterion, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS_KEY, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}".rstrip())
