import pytest

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    state = {}

    def start(number, title):
        state["number"], state["title"] = number, title
        state["detail"] = ""

    def detail(text):
        state["detail"] = text

    yield start, detail
    if "number" not in state:
        return
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    line = f"criterion {state['number']:>2} {'PASS' if ok else 'FAIL'}  {state['title']}"
    if state["detail"]:
        line += f"  [{state['detail']}]"
    ACCEPTANCE[state["number"]] = line
    print(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
