import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from vfolkman.graphcore import Graph  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# acceptance results, one line per criterion, shown after the run
CRITERIA: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA):
            terminalreporter.write_line(line.splitlines()[0])


@st.composite
def graphs(draw, min_n=0, max_n=12, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if density is None:
        bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        rnd = draw(st.randoms(use_true_random=False))
        bits = [rnd.random() < density for _ in pairs]
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(n))))
