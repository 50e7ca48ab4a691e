import pytest
from hypothesis import strategies as st

from rrsched import CASE_STUDY, Policy, PolicyConfig, ProcessSpec

ACCEPTANCE_LINES: list[str] = []


@st.composite
def tasksets(draw, max_n=12, max_burst=30, max_arrival=40, max_priority=5):
    n = draw(st.integers(0, max_n))
    return [
        ProcessSpec(
            pid,
            draw(st.integers(0, max_arrival)),
            draw(st.integers(1, max_burst)),
            draw(st.integers(1, max_priority)),
        )
        for pid in range(1, n + 1)
    ]


@st.composite
def configs(draw, with_overhead=False):
    # decreasing bonuses keep the map monotone
    bonuses = sorted(draw(st.lists(st.integers(0, 4), max_size=4)), reverse=True)
    return PolicyConfig(
        policy=draw(st.sampled_from(list(Policy))),
        quantum_ots=draw(st.integers(1, 10)),
        sc_threshold=draw(st.integers(1, 20)),
        pc_map={i + 1: b for i, b in enumerate(bonuses)},
        count_self_redispatch_as_switch=draw(st.booleans()),
        switch_overhead=draw(st.integers(0, 3)) if with_overhead else 0,
    )


@pytest.fixture
def case_study():
    return list(CASE_STUDY)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
