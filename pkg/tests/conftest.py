import pytest

# criterion id -> (title, outcome, seconds, limit)
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(cid, title, limit): one acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    cid, title, limit = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        seconds = getattr(item, "_elapsed", rep.duration)
        _CRITERIA[cid] = (title, "PASS" if rep.passed else "FAIL", seconds, limit)


@pytest.fixture
def timed(request):
    """Yields a stopwatch; the test asserts its own limit, the report shows the time."""
    import time

    class Watch:
        def __init__(self):
            self.t0 = time.perf_counter()

        @property
        def elapsed(self):
            return time.perf_counter() - self.t0

        def check(self, limit):
            request.node._elapsed = self.elapsed
            assert self.elapsed < limit, f"took {self.elapsed:.2f} s, limit {limit} s"

    return Watch()


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_CRITERIA, key=lambda c: int(c[2:])):
        title, status, seconds, limit = _CRITERIA[cid]
        tr.write_line(f"{cid:<5} {status}  {title}  ({seconds:.2f} s, limit {limit} s)")
    passed = sum(1 for v in _CRITERIA.values() if v[1] == "PASS")
    tr.write_line(f"{passed}/{len(_CRITERIA)} criteria passed")
