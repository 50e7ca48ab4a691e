import pytest
from hypothesis import given, settings

from conftest import configs, tasksets
from rrsched import CASE_STUDY, Policy, PolicyConfig, ProcessSpec, compute_its, simulate, tick_simulate

# Completion times worked out by hand from the cyclic queue rules (4 ms quantum)
# and confirmed by the tick simulator.
EXPECTED_COMPLETIONS = {
    "rr": {1: 63, 2: 25, 3: 54, 4: 33, 5: 47},
    "srr": {1: 63, 2: 21, 3: 50, 4: 25, 5: 39},
    "its": {1: 63, 2: 9, 3: 50, 4: 22, 5: 41},
}

RR_SEGMENTS = [
    (1, 0, 4), (2, 4, 8), (3, 8, 12), (4, 12, 16), (5, 16, 20),
    (1, 20, 24), (2, 24, 25), (3, 25, 29), (4, 29, 33), (5, 33, 37),
    (1, 37, 41), (3, 41, 45), (5, 45, 47),
    (1, 47, 51), (3, 51, 54),
    (1, 54, 58), (1, 58, 62), (1, 62, 63),
]


@pytest.mark.parametrize("engine", [simulate, tick_simulate])
@pytest.mark.parametrize("policy", ["rr", "srr", "its"])
def test_case_study_completions(engine, policy):
    trace = engine(CASE_STUDY, PolicyConfig(policy=policy, quantum_ots=4))
    assert dict(trace.completions) == EXPECTED_COMPLETIONS[policy]
    trace.check_invariants()


def test_rr_case_study_segments():
    trace = simulate(CASE_STUDY, PolicyConfig())
    assert [(s.pid, s.start, s.end) for s in trace.segments] == RR_SEGMENTS
    # 18 dispatches; the last two re-dispatches of P1 are not switches
    assert trace.dispatches == 18
    assert trace.context_switches == 15
    assert simulate(CASE_STUDY, PolicyConfig(count_self_redispatch_as_switch=True)).context_switches == 17


def test_its_boosted_processes_run_once():
    trace = simulate(CASE_STUDY, PolicyConfig(policy="its"))
    assert len(trace.segments_of(4)) == 1 and len(trace.segments_of(2)) == 1
    assert trace.dispatches == 14


@pytest.mark.parametrize("policy", list(Policy))
def test_makespan_is_total_burst(policy):
    trace = simulate(CASE_STUDY, PolicyConfig(policy=policy))
    assert trace.segments[-1].end == 63


@pytest.mark.parametrize("policy", list(Policy))
def test_single_short_process(policy):
    trace = simulate([ProcessSpec(1, 0, 3)], PolicyConfig(policy=policy))
    assert [(s.pid, s.start, s.end) for s in trace.segments] == [(1, 0, 3)]
    assert trace.context_switches == 0


@pytest.mark.parametrize("engine", [simulate, tick_simulate])
def test_empty(engine):
    trace = engine([], PolicyConfig())
    assert trace.segments == () and dict(trace.completions) == {} and trace.context_switches == 0


def test_idle_gap_and_late_arrival():
    procs = [ProcessSpec(1, 0, 3), ProcessSpec(2, 10, 6)]
    trace = simulate(procs, PolicyConfig())
    assert [(s.pid, s.start, s.end) for s in trace.segments] == [(1, 0, 3), (2, 10, 14), (2, 14, 16)]
    assert trace.context_switches == 1
    trace.check_invariants()
    assert trace == tick_simulate(procs, PolicyConfig())


def test_arrival_enqueued_before_preempted_process():
    # P2 arrives exactly when P1's slice expires
    procs = [ProcessSpec(1, 0, 8), ProcessSpec(2, 4, 2), ProcessSpec(3, 4, 2)]
    trace = simulate(procs, PolicyConfig())
    assert [s.pid for s in trace.segments] == [1, 2, 3, 1]


def test_switch_overhead_delays_dispatch():
    procs = [ProcessSpec(1, 0, 6), ProcessSpec(2, 0, 2)]
    trace = simulate(procs, PolicyConfig(switch_overhead=1))
    assert [(s.pid, s.start, s.end) for s in trace.segments] == [(1, 0, 4), (2, 5, 7), (1, 8, 10)]
    assert trace == tick_simulate(procs, PolicyConfig(switch_overhead=1))


def test_replay_is_identical():
    cfg = PolicyConfig(policy="srr")
    assert simulate(CASE_STUDY, cfg) == simulate(CASE_STUDY, cfg)


@settings(max_examples=300, deadline=None)
@given(tasksets(), configs(with_overhead=True))
def test_engine_matches_tick_oracle(procs, cfg):
    fast = simulate(procs, cfg)
    slow = tick_simulate(procs, cfg)
    assert fast == slow
    fast.check_invariants()


@settings(max_examples=200, deadline=None)
@given(tasksets(), configs())
def test_trace_properties(procs, cfg):
    trace = simulate(procs, cfg)
    slices = {}
    if cfg.policy is Policy.ITS:
        slices = {p.pid: compute_its(p, cfg).its for p in procs}
    for seg in trace.segments:
        limit = slices.get(seg.pid, cfg.quantum_ots)
        assert seg.length <= limit
        if seg.length < limit:
            assert trace.completions[seg.pid] == seg.end
    if cfg.policy is Policy.ITS:
        for p in procs:
            if compute_its(p, cfg).csc > 0:
                assert len(trace.segments_of(p.pid)) == 1
    if cfg.policy is Policy.SRR and procs and all(p.arrival == 0 for p in procs):
        first_cycle = [s.pid for s in trace.segments[: len(procs)]]
        by_pid = {p.pid: p for p in procs}
        assert first_cycle == sorted(first_cycle, key=lambda pid: (by_pid[pid].burst, pid))


@settings(max_examples=200, deadline=None)
@given(tasksets(max_arrival=0))
def test_rr_fairness(procs):
    # with everyone ready from t=0, each process is dispatched at most once
    # between two consecutive dispatches of any other still-running process
    trace = simulate(procs, PolicyConfig(policy="rr", quantum_ots=3))
    order = [s.pid for s in trace.segments]
    for i, pid in enumerate(order):
        try:
            j = order.index(pid, i + 1)
        except ValueError:
            continue
        between = order[i + 1 : j]
        alive = {p.pid for p in procs if trace.completions[p.pid] > trace.segments[i].end and p.pid != pid}
        assert sorted(between) == sorted(alive)
