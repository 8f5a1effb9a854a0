import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

# criterion number -> (description, list of outcomes); filled by tests marked `criterion`
_CRITERIA: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, text): acceptance criterion k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed and not rep.skipped):
        return
    k, text = mark.args
    _CRITERIA.setdefault(k, (text, []))[1].append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        text, outcomes = _CRITERIA[k]
        if "failed" in outcomes:
            verdict = "FAIL"
        elif outcomes and all(o == "skipped" for o in outcomes):
            verdict = "SKIP"
        else:
            verdict = "PASS"
        terminalreporter.write_line(f"criterion {k}: {verdict}  {text}")
