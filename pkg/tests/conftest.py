import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from seifertbook.seifert import SeifertInvariants  # noqa: E402


@st.composite
def eligible_invariants(draw, max_genus=3, min_euler=-5, max_k=5, max_p=9):
    g = draw(st.integers(0, max_genus))
    n = draw(st.integers(min_euler, 0))
    ps = draw(st.lists(st.integers(1, max_p), max_size=max_k))
    return SeifertInvariants.from_multiplicities(g, n, ps)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
