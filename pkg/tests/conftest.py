import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def shape_terms(draw, max_n: int = 40, allow_d: bool = True):
    """Random disjoint unions of cliques, friendship graphs and D with n <= max_n."""
    terms, n = [], 0
    for _ in range(draw(st.integers(1, 5))):
        kinds = ["K", "F"] + (["D"] if allow_d else [])
        kind = draw(st.sampled_from(kinds))
        if kind == "K":
            size, label = draw(st.integers(1, 9)), None
            label = f"K{size}"
        elif kind == "F":
            m = draw(st.integers(1, 4))
            size, label = 2 * m + 1, f"F{m}"
        else:
            size, label = 9, "D"
        copies = draw(st.integers(1, 3))
        if n + copies * size > max_n:
            continue
        n += copies * size
        terms.append((copies, label))
    if not terms:
        terms = [(1, "K1")]
    return " + ".join(f"{c}*{t}" if c > 1 else t for c, t in terms)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for criterion in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[criterion])
