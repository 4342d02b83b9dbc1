import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    k, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA[k] = (title, "PASS" if rep.passed else "FAIL", getattr(item, "criterion_detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria (exact, zero tolerance)")
    for k in sorted(_CRITERIA):
        title, status, detail = _CRITERIA[k]
        line = f"criterion {k:2d}  {status}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))


@pytest.fixture
def detail(request):
    """Attach a short summary string to the criterion line."""

    def set_detail(text: str):
        request.node.criterion_detail = text

    return set_detail
