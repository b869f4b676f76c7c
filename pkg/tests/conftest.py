import pytest
from hypothesis import settings

from stuniform.params import Center, Params

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

# t even pairs covering all three root regimes
TEST_PAIRS = [(6, 8), (8, 6), (8, 8), (6, 10), (10, 6), (16, 8)]
CENTERS = [Center.S_VERTEX, Center.T_VERTEX]


@pytest.fixture(params=[(s, t, c) for s, t in TEST_PAIRS for c in CENTERS],
                ids=lambda p: f"{p[0]}-{p[1]}-{p[2].value}")
def labelled_params(request):
    s, t, c = request.param
    return Params(s, t, c)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
