import pytest

from rrsched import CASE_STUDY, PolicyConfig, PolicyState, ProcessSpec, SchedulerError


def _state(policy, procs=CASE_STUDY, **kw):
    st = PolicyState(PolicyConfig(policy=policy, **kw))
    for p in procs:
        st.admit(p)
    return st


def test_srr_admission_sorts_by_burst():
    assert _state("srr").queue == [2, 4, 5, 3, 1]


@pytest.mark.parametrize("policy", ["rr", "its"])
def test_fifo_admission(policy):
    assert _state(policy).queue == [1, 2, 3, 4, 5]


def test_srr_sorted_insertion_between_neighbours():
    st = _state("srr", [ProcessSpec(1, 0, 5), ProcessSpec(2, 0, 8)])
    st.admit(ProcessSpec(3, 0, 7))
    assert st.queue == [1, 3, 2]


def test_srr_equal_bursts_break_ties_by_pid():
    st = _state("srr", [ProcessSpec(4, 0, 5), ProcessSpec(2, 0, 5)])
    assert st.queue == [2, 4]


@pytest.mark.parametrize("policy, head, slice_ms", [("rr", 1, 4), ("srr", 2, 4), ("its", 1, 4)])
def test_next_dispatch_slice(policy, head, slice_ms):
    assert _state(policy).next_dispatch() == (head, slice_ms)


def test_its_slices_follow_breakdown():
    st = _state("its", [ProcessSpec(4, 0, 8, 2), ProcessSpec(2, 0, 5, 3)])
    assert st.next_dispatch() == (4, 8)
    assert st.next_dispatch() == (2, 5)


def test_rr_preempted_goes_to_tail():
    st = _state("rr")
    pid, q = st.next_dispatch()
    st.record_run(pid, q)
    st.requeue_preempted(pid)
    assert st.queue == [2, 3, 4, 5, 1]


def test_srr_requeue_is_cyclic():
    st = _state("srr")
    order = []
    for _ in range(6):
        pid, q = st.next_dispatch()
        order.append(pid)
        if st.record_run(pid, min(q, st.remaining[pid])):
            st.requeue_preempted(pid)
    # P2 has 1 ms left after its first slice but waits for the whole cycle
    assert order == [2, 4, 5, 3, 1, 2]


def test_srr_new_arrival_sorted_among_unserved_ahead_of_cycled():
    st = _state("srr", [ProcessSpec(1, 0, 9), ProcessSpec(2, 0, 20)])
    pid, q = st.next_dispatch()
    st.record_run(pid, q)
    st.requeue_preempted(pid)  # queue: [2] fresh, [1] cycled
    st.admit(ProcessSpec(3, 4, 6))
    assert st.queue == [3, 2, 1]


def test_sole_process_redispatched():
    st = _state("rr", [ProcessSpec(1, 0, 10)])
    pid, q = st.next_dispatch()
    st.record_run(pid, q)
    st.requeue_preempted(pid)
    assert st.next_dispatch() == (1, 4)


def test_errors():
    st = _state("rr", [ProcessSpec(1, 0, 4)])
    with pytest.raises(SchedulerError):
        st.admit(ProcessSpec(1, 0, 4))
    pid, q = st.next_dispatch()
    assert st.record_run(pid, q) == 0
    with pytest.raises(SchedulerError):
        st.requeue_preempted(pid)
    with pytest.raises(SchedulerError):
        st.admit(ProcessSpec(1, 0, 4))
    with pytest.raises(SchedulerError):
        st.next_dispatch()
