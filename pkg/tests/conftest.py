import os

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE = {}
# outcomes of every non-acceptance test in this session, by node id
PROPERTY_OUTCOMES = {}


def _is_acceptance(nodeid):
    return "test_acceptance.py" in nodeid


def pytest_collection_modifyitems(items):
    # acceptance runs last so criterion 11 can look at the property suites
    items.sort(key=lambda item: _is_acceptance(item.nodeid))


def pytest_runtest_logreport(report):
    if _is_acceptance(report.nodeid):
        return
    if report.when == "call" or report.outcome == "failed":
        if PROPERTY_OUTCOMES.get(report.nodeid) != "failed":
            PROPERTY_OUTCOMES[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
